#include "smirnovlab/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace smirnovlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kFormTol = 1e-10;  // agreement of the two displayed forms

TrialReport make_report(std::string id, double lhs, double rhs) {
    TrialReport rep;
    rep.check_id = std::move(id);
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.margin = rhs - lhs;
    rep.passed = bound_holds(lhs, rhs);
    return rep;
}

TrialReport skip_report(std::string id, std::string note) {
    TrialReport rep;
    rep.check_id = std::move(id);
    rep.skipped = true;
    rep.notes = std::move(note);
    return rep;
}

bool forms_agree(double x, double y) {
    return std::abs(x - y) <= kFormTol * std::max({std::abs(x), std::abs(y), 1.0});
}

// Hypothesis probes (used when validate = true).
bool roots_all_at_most(const Polynomial& p, double bound) {
    if (p.degree() < 1) return true;
    for (const Complex& r : find_roots(p).roots) {
        if (std::abs(r) > bound) return false;
    }
    return true;
}

bool roots_all_at_least(const Polynomial& p, double bound) {
    if (p.degree() < 1) return true;
    for (const Complex& r : find_roots(p).roots) {
        if (std::abs(r) < bound) return false;
    }
    return true;
}

bool zero_free_in_open_disk(const Polynomial& p) {
    return roots_all_at_least(p, 1.0 - kBoundaryBand);
}

bool valid_majorized_pair(const Polynomial& p, const Polynomial& P, int n) {
    if (P.degree() != n || p.degree() > n) return false;
    if (!roots_all_at_most(P, 1.0 + kBoundaryBand)) return false;
    try {
        return max_ratio(p, P, 1.0) <= 1.0 + 1e-9;
    } catch (const std::invalid_argument&) {
        return false;  // P too close to vanishing on the circle
    }
}

// (1 + az)[R p'(Rz) - beta p'(z)] - na [p(Rz) - beta p(z)], evaluated
// pointwise. The expanded form of the dilated-operator combination.
Complex combination_pointwise(const Polynomial& p, Complex a, Complex beta,
                              double R, int n, Complex z) {
    const Polynomial dp = derivative(p);
    const Complex term_deriv = R * eval(dp, R * z) - beta * eval(dp, z);
    const Complex term_val = eval(p, R * z) - beta * eval(p, z);
    return (1.0 + a * z) * term_deriv - static_cast<double>(n) * a * term_val;
}

double abs_en_operator(Complex a, int n, Complex z) {
    return std::abs(eval(modified_smirnov(Polynomial::monomial(n), a, n), z));
}

}  // namespace

// --- classical bounds ----------------------------------------------------

TrialReport check_bernstein(const Polynomial& p, int n) {
    if (n < 1 || p.degree() < 1) return skip_report("eq1", "degree must be >= 1");
    if (p.degree() > n) return skip_report("eq1", "degree exceeds n");
    const double lhs = circle_profile(derivative(p), 1.0).max_value;
    const double rhs = n * circle_profile(p, 1.0).max_value;
    return make_report("eq1", lhs, rhs);
}

TrialReport check_growth(const Polynomial& p, int n, double R) {
    if (n < 1 || p.is_zero()) return skip_report("eq2", "invalid input");
    if (p.degree() > n) return skip_report("eq2", "degree exceeds n");
    if (!(R >= 1.0)) return skip_report("eq2", "R must be >= 1");
    const double lhs = circle_profile(p, R).max_value;
    const double rhs = std::pow(R, n) * circle_profile(p, 1.0).max_value;
    return make_report("eq2", lhs, rhs);
}

TrialReport check_erdos_lax(const Polynomial& p, int n, bool validate) {
    if (n < 1 || p.degree() < 1) return skip_report("eq3", "degree must be >= 1");
    if (p.degree() > n) return skip_report("eq3", "degree exceeds n");
    if (validate && !zero_free_in_open_disk(p)) {
        return skip_report("eq3", "hypothesis: p has a zero in the open disk");
    }
    const double lhs = circle_profile(derivative(p), 1.0).max_value;
    const double rhs = 0.5 * n * circle_profile(p, 1.0).max_value;
    return make_report("eq3", lhs, rhs);
}

TrialReport check_ankeny_rivlin(const Polynomial& p, int n, double R, bool validate) {
    if (n < 1 || p.is_zero()) return skip_report("eq4", "invalid input");
    if (p.degree() > n) return skip_report("eq4", "degree exceeds n");
    if (!(R >= 1.0)) return skip_report("eq4", "R must be >= 1");
    if (validate && !zero_free_in_open_disk(p)) {
        return skip_report("eq4", "hypothesis: p has a zero in the open disk");
    }
    const double lhs = circle_profile(p, R).max_value;
    const double rhs = 0.5 * (std::pow(R, n) + 1.0) * circle_profile(p, 1.0).max_value;
    return make_report("eq4", lhs, rhs);
}

TrialReport check_aziz_dawood_deriv(const Polynomial& p, int n, bool validate) {
    if (n < 1 || p.degree() < 1) return skip_report("eq5", "degree must be >= 1");
    if (p.degree() > n) return skip_report("eq5", "degree exceeds n");
    if (validate && !zero_free_in_open_disk(p)) {
        return skip_report("eq5", "hypothesis: p has a zero in the open disk");
    }
    const double lhs = circle_profile(derivative(p), 1.0).max_value;
    const CircleProfile prof = circle_profile(p, 1.0);
    const double rhs = 0.5 * n * (prof.max_value - prof.min_value);
    return make_report("eq5", lhs, rhs);
}

TrialReport check_aziz_dawood_growth(const Polynomial& p, int n, double R, bool validate) {
    if (n < 1 || p.is_zero()) return skip_report("eq6", "invalid input");
    if (p.degree() > n) return skip_report("eq6", "degree exceeds n");
    if (!(R >= 1.0)) return skip_report("eq6", "R must be >= 1");
    if (validate && !zero_free_in_open_disk(p)) {
        return skip_report("eq6", "hypothesis: p has a zero in the open disk");
    }
    const double lhs = circle_profile(p, R).max_value;
    const CircleProfile prof = circle_profile(p, 1.0);
    const double Rn = std::pow(R, n);
    const double rhs =
        0.5 * (Rn + 1.0) * prof.max_value - 0.5 * (Rn - 1.0) * prof.min_value;
    return make_report("eq6", lhs, rhs);
}

// --- operator majorization ----------------------------------------------

TrialReport check_bernstein_majorization(const Polynomial& p, const Polynomial& P,
                                         int n, std::span<const Complex> z_samples,
                                         bool validate) {
    if (validate && !valid_majorized_pair(p, P, n)) {
        return skip_report("thm11", "hypothesis: not a majorized pair");
    }
    const Polynomial dp = derivative(p);
    const Polynomial dP = derivative(P);
    double worst_margin = 0.0, lhs = 0.0, rhs = 0.0;
    bool first = true;
    for (const Complex& z : z_samples) {
        if (std::abs(z) < 1.0 - 1e-12) continue;  // statement lives outside the disk
        const double l = std::abs(eval(dp, z));
        const double r = std::abs(eval(dP, z));
        if (first || r - l < worst_margin) {
            worst_margin = r - l;
            lhs = l;
            rhs = r;
            first = false;
        }
    }
    if (first) return skip_report("thm11", "no sample with |z| >= 1");
    return make_report("thm11", lhs, rhs);
}

TrialReport check_smirnov_majorization(const Polynomial& p, const Polynomial& P,
                                       int n, Complex alpha, Complex z,
                                       bool validate) {
    if (std::abs(z) < 1.0 - 1e-12) return skip_report("eq7", "|z| < 1");
    if (!omega_member(alpha, std::abs(z))) {
        return skip_report("eq7", "alpha outside the closure of Omega_|z|");
    }
    if (validate && !valid_majorized_pair(p, P, n)) {
        return skip_report("eq7", "hypothesis: not a majorized pair");
    }
    const double lhs = std::abs(eval(smirnov(p, alpha, n), z));
    const double rhs = std::abs(eval(smirnov(P, alpha, n), z));
    return make_report("eq7", lhs, rhs);
}

TrialReport check_marden_majorization(const Polynomial& p, const Polynomial& P,
                                      int n, const std::array<Complex, 3>& lambdas,
                                      Complex z, bool validate) {
    if (std::abs(z) < 1.0 - 1e-12) return skip_report("eq9", "|z| < 1");
    if (!marden_admissible(lambdas, n)) {
        return skip_report("eq9", "inadmissible Marden parameters");
    }
    if (validate && !valid_majorized_pair(p, P, n)) {
        return skip_report("eq9", "hypothesis: not a majorized pair");
    }
    const double lhs = std::abs(eval(marden(p, lambdas, n), z));
    const double rhs = std::abs(eval(marden(P, lambdas, n), z));
    return make_report("eq9", lhs, rhs);
}

TrialReport check_aziz_growth_lemma(const Polynomial& p, int n, double k,
                                    double r, double R,
                                    std::span<const Complex> z_samples,
                                    bool validate) {
    if (n < 1 || p.degree() != n) return skip_report("lemma22", "degree must equal n");
    if (!(k >= 0.0) || !(r > 0.0) || !(R >= r)) {
        return skip_report("lemma22", "need 0 < r <= R, k >= 0");
    }
    if (r * R < k * k) return skip_report("lemma22", "rR < k^2");
    if (validate && !roots_all_at_most(p, k + 1e-6)) {
        return skip_report("lemma22", "hypothesis: a zero outside |z| <= k");
    }
    const double factor = std::pow((R + k) / (r + k), n);
    double worst_margin = 0.0, lhs = 0.0, rhs = 0.0;
    bool first = true;
    for (const Complex& z : z_samples) {
        const double l = factor * std::abs(eval(p, r * z));
        const double rr = std::abs(eval(p, R * z));
        if (first || rr - l < worst_margin) {
            worst_margin = rr - l;
            lhs = l;
            rhs = rr;
            first = false;
        }
    }
    if (first) return skip_report("lemma22", "no z samples");
    return make_report("lemma22", lhs, rhs);
}

// --- modified-Smirnov lemmas and main theorems ---------------------------

TrialReport check_lemma_2_3(const Polynomial& p, int n, Complex a, Complex z) {
    if (n < 1 || p.is_zero()) return skip_report("eq11", "invalid input");
    if (p.degree() > n) return skip_report("eq11", "degree exceeds n");
    if (std::abs(z) < 1.0 - 1e-12) return skip_report("eq11", "|z| < 1");
    const double M = circle_profile(p, 1.0).max_value;
    const double lhs = std::abs(eval(modified_smirnov(p, a, n), z));
    const double rhs = M * abs_en_operator(a, n, z);
    return make_report("eq11", lhs, rhs);
}

TrialReport check_lemma_2_4(const Polynomial& p, int n, Complex a, Complex z) {
    if (n < 1 || p.is_zero()) return skip_report("eq12", "invalid input");
    if (p.degree() > n) return skip_report("eq12", "degree exceeds n");
    if (std::abs(z) < 1.0 - 1e-12) return skip_report("eq12", "|z| < 1");
    const Polynomial g = conjugate_reciprocal(p, n);
    const double lhs = std::abs(eval(modified_smirnov(p, a, n), z)) +
                       std::abs(eval(modified_smirnov(g, a, n), z));
    const double maxp = circle_profile(p, 1.0).max_value;
    const double rhs = (abs_en_operator(a, n, z) + n * std::abs(a)) * maxp;
    return make_report("eq12", lhs, rhs);
}

TrialReport check_lemma_2_5(const Polynomial& p, const Polynomial& P, int n,
                            Complex a, Complex beta, double R,
                            std::span<const Complex> z_samples, bool validate) {
    if (!(R >= 1.0)) return skip_report("eq13", "R must be >= 1");
    if (std::abs(beta) > 1.0 + kParamTol) return skip_report("eq13", "|beta| > 1");
    if (validate) {
        if (!valid_majorized_pair(p, P, n)) {
            return skip_report("eq13", "hypothesis: not a majorized pair");
        }
        if (!roots_all_at_most(P, 1.0 - 1e-9)) {
            return skip_report("eq13", "hypothesis: P has a zero outside the open disk");
        }
    }
    const Polynomial comb_p = smirnov_combination(p, a, beta, R, n);
    const Polynomial comb_P = smirnov_combination(P, a, beta, R, n);
    double worst_margin = 0.0, lhs = 0.0, rhs = 0.0;
    bool first = true;
    for (const Complex& z : z_samples) {
        if (std::abs(std::abs(z) - 1.0) > 1e-9) continue;  // stated on |z| = 1
        const double l = std::abs(eval(comb_p, z));
        const double r = std::abs(eval(comb_P, z));
        if (first || r - l < worst_margin) {
            worst_margin = r - l;
            lhs = l;
            rhs = r;
            first = false;
        }
    }
    if (first) return skip_report("eq13", "no sample on the unit circle");
    return make_report("eq13", lhs, rhs);
}

TrialReport check_thm_3_1(const Polynomial& p, int n, Complex a, Complex beta,
                          double R, Complex z) {
    if (n < 1 || p.is_zero()) return skip_report("eq14", "invalid input");
    if (p.degree() > n) return skip_report("eq14", "degree exceeds n");
    if (!(R >= 1.0)) return skip_report("eq14", "R must be >= 1");
    if (std::abs(z) < 1.0 - 1e-12) return skip_report("eq14", "|z| < 1");

    const double maxp = circle_profile(p, 1.0).max_value;
    const double factor = std::abs(std::pow(R, n) - beta);

    const double lhs = std::abs(eval(smirnov_combination(p, a, beta, R, n), z));
    const double rhs = factor * abs_en_operator(a, n, z) * maxp;

    // the expanded display must agree with the operator form
    const double lhs_alt = std::abs(combination_pointwise(p, a, beta, R, n, z));
    const double rhs_alt = n * factor * std::pow(std::abs(z), n - 1) * maxp;
    TrialReport rep = make_report("eq14", lhs, rhs);
    if (!forms_agree(lhs, lhs_alt) || !forms_agree(rhs, rhs_alt)) {
        rep.passed = false;
        rep.notes = "displayed forms disagree beyond 1e-10";
    }
    return rep;
}

TrialReport check_thm_3_2(const Polynomial& p, int n, Complex a, Complex beta,
                          double R, Complex z) {
    if (n < 1 || p.is_zero()) return skip_report("eq16", "invalid input");
    if (p.degree() > n) return skip_report("eq16", "degree exceeds n");
    if (!(R >= 1.0)) return skip_report("eq16", "R must be >= 1");
    if (std::abs(z) < 1.0 - 1e-12) return skip_report("eq16", "|z| < 1");

    const Polynomial Q = conjugate_reciprocal(p, n);
    const double maxp = circle_profile(p, 1.0).max_value;
    const double factor = std::abs(std::pow(R, n) - beta);
    const double second = n * std::abs(1.0 - beta) * std::abs(a);

    const double term_p = std::abs(eval(smirnov_combination(p, a, beta, R, n), z));
    const double term_Q = std::abs(eval(smirnov_combination(Q, a, beta, R, n), z));
    const double lhs = term_p + term_Q;
    const double rhs = (factor * abs_en_operator(a, n, z) + second) * maxp;

    const double lhs_alt = std::abs(combination_pointwise(p, a, beta, R, n, z)) +
                           std::abs(combination_pointwise(Q, a, beta, R, n, z));
    const double rhs_alt = (n * factor * std::pow(std::abs(z), n - 1) + second) * maxp;
    TrialReport rep = make_report("eq16", lhs, rhs);
    if (!forms_agree(lhs, lhs_alt) || !forms_agree(rhs, rhs_alt)) {
        rep.passed = false;
        rep.notes = "displayed forms disagree beyond 1e-10";
    }
    return rep;
}

TrialReport check_thm_3_3(const Polynomial& p, int n, Complex a, Complex beta,
                          double R, Complex z, bool validate) {
    if (n < 1 || p.degree() != n) return skip_report("eq18", "degree must equal n");
    if (!(R >= 1.0)) return skip_report("eq18", "R must be >= 1");
    if (std::abs(z) < 1.0 - 1e-12) return skip_report("eq18", "|z| < 1");
    if (validate && !zero_free_in_open_disk(p)) {
        return skip_report("eq18", "hypothesis: p has a zero in the open disk");
    }

    const double maxp = circle_profile(p, 1.0).max_value;
    const double factor = std::abs(std::pow(R, n) - beta);
    const double second = n * std::abs(1.0 - beta) * std::abs(a);

    const double lhs = std::abs(eval(smirnov_combination(p, a, beta, R, n), z));
    const double rhs = 0.5 * (factor * abs_en_operator(a, n, z) + second) * maxp;

    const double lhs_alt = std::abs(combination_pointwise(p, a, beta, R, n, z));
    const double rhs_alt =
        0.5 * (n * factor * std::pow(std::abs(z), n - 1) + second) * maxp;
    TrialReport rep = make_report("eq18", lhs, rhs);
    if (!forms_agree(lhs, lhs_alt) || !forms_agree(rhs, rhs_alt)) {
        rep.passed = false;
        rep.notes = "displayed forms disagree beyond 1e-10";
    }
    return rep;
}

// --- campaign ------------------------------------------------------------

const std::vector<std::string>& all_check_ids() {
    static const std::vector<std::string> ids = {
        "eq1",  "eq2",  "eq3",  "eq4",  "eq5",     "eq6",
        "thm11", "eq7",  "eq9",  "lemma22", "eq11", "eq12",
        "eq13", "eq14", "eq16", "eq18"};
    return ids;
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

Complex circle_point(double radius, double theta) {
    return Complex{radius * std::cos(theta), radius * std::sin(theta)};
}

int pick_degree(SplitMix64& rng, const CampaignConfig& cfg) {
    return cfg.degrees[rng.index(cfg.degrees.size())];
}

double pick_R(SplitMix64& rng, const CampaignConfig& cfg) {
    return cfg.R_values[rng.index(cfg.R_values.size())];
}

Complex pick_z(SplitMix64& rng, const CampaignConfig& cfg) {
    const double radius = cfg.z_radii[rng.index(cfg.z_radii.size())];
    const double theta = kTwoPi * static_cast<double>(rng.index(32)) / 32.0;
    return circle_point(radius, theta);
}

std::vector<Complex> unit_circle_samples(SplitMix64& rng, int count) {
    const double offset = rng.uniform(0.0, kTwoPi / count);
    std::vector<Complex> zs(count);
    for (int k = 0; k < count; ++k) {
        zs[k] = circle_point(1.0, offset + kTwoPi * k / count);
    }
    return zs;
}

Complex sample_omega_closure(SplitMix64& rng, double r) {
    // alpha = t/(1+t) with |t| <= r; resample away from the pole at t = -1
    for (;;) {
        const Complex t = (0.999 * r) * rng.in_disk();
        if (std::abs(1.0 + t) < 1e-3) continue;
        return t / (1.0 + t);
    }
}

std::array<Complex, 3> sample_admissible_lambdas(SplitMix64& rng, int n) {
    const double half_plane = 0.25 * n;
    auto sample_root = [&rng, half_plane] {
        return Complex{rng.uniform(-3.0, half_plane), rng.uniform(-3.0, 3.0)};
    };
    if (n == 1 || rng.uniform() < 0.3) {
        // lambda2 = 0: u is linear with its root in the admissible half-plane
        const Complex l1 = rng.unit_complex();
        const Complex w = sample_root();
        return {-static_cast<double>(n) * l1 * w, l1, Complex{0.0, 0.0}};
    }
    // quadratic u built from two admissible roots
    const Complex c = rng.unit_complex();
    const Complex w1 = sample_root(), w2 = sample_root();
    const Complex u2 = c;
    const Complex u1 = -c * (w1 + w2);
    const Complex u0 = c * w1 * w2;
    return {u0, u1 / static_cast<double>(n),
            u2 / (0.5 * static_cast<double>(n) * (n - 1.0))};
}

}  // namespace

TrialReport run_trial(const std::string& check_id, const CampaignConfig& cfg,
                      std::uint64_t trial_index) {
    SplitMix64 rng(trial_seed(cfg.seed, trial_index) ^ fnv1a(check_id));
    const int n = pick_degree(rng, cfg);
    json inputs{{"seed", cfg.seed}, {"trial", trial_index}, {"degree", n}};
    TrialReport rep;

    if (check_id == "eq1") {
        const Polynomial p = gen_unrestricted(n, rng);
        inputs["p"] = polynomial_to_json(p);
        rep = check_bernstein(p, n);
    } else if (check_id == "eq2") {
        const Polynomial p = gen_unrestricted(n, rng);
        const double R = pick_R(rng, cfg);
        inputs["p"] = polynomial_to_json(p);
        inputs["R"] = R;
        rep = check_growth(p, n, R);
    } else if (check_id == "eq3") {
        const Polynomial p = gen_no_zeros_in_disk(n, rng);
        inputs["p"] = polynomial_to_json(p);
        rep = check_erdos_lax(p, n, /*validate=*/false);
    } else if (check_id == "eq4") {
        const Polynomial p = gen_no_zeros_in_disk(n, rng);
        const double R = pick_R(rng, cfg);
        inputs["p"] = polynomial_to_json(p);
        inputs["R"] = R;
        rep = check_ankeny_rivlin(p, n, R, false);
    } else if (check_id == "eq5") {
        const Polynomial p = gen_no_zeros_in_disk(n, rng);
        inputs["p"] = polynomial_to_json(p);
        rep = check_aziz_dawood_deriv(p, n, false);
    } else if (check_id == "eq6") {
        const Polynomial p = gen_no_zeros_in_disk(n, rng);
        const double R = pick_R(rng, cfg);
        inputs["p"] = polynomial_to_json(p);
        inputs["R"] = R;
        rep = check_aziz_dawood_growth(p, n, R, false);
    } else if (check_id == "thm11") {
        const auto [p, P] = gen_majorized_pair(n, rng);
        std::vector<Complex> zs;
        const double offset = rng.uniform(0.0, kTwoPi / 16.0);
        for (double radius : cfg.z_radii) {
            for (int k = 0; k < 16; ++k) {
                zs.push_back(circle_point(radius, offset + kTwoPi * k / 16.0));
            }
        }
        inputs["p"] = polynomial_to_json(p);
        inputs["P"] = polynomial_to_json(P);
        rep = check_bernstein_majorization(p, P, n, zs, false);
    } else if (check_id == "eq7") {
        const auto [p, P] = gen_majorized_pair(n, rng);
        const Complex z = pick_z(rng, cfg);
        const Complex alpha = sample_omega_closure(rng, std::abs(z));
        inputs["p"] = polynomial_to_json(p);
        inputs["P"] = polynomial_to_json(P);
        inputs["alpha"] = complex_to_json(alpha);
        inputs["z"] = complex_to_json(z);
        rep = check_smirnov_majorization(p, P, n, alpha, z, false);
    } else if (check_id == "eq9") {
        const auto [p, P] = gen_majorized_pair(n, rng);
        const Complex z = pick_z(rng, cfg);
        const auto lambdas = sample_admissible_lambdas(rng, n);
        inputs["p"] = polynomial_to_json(p);
        inputs["P"] = polynomial_to_json(P);
        inputs["lambdas"] = json::array({complex_to_json(lambdas[0]),
                                         complex_to_json(lambdas[1]),
                                         complex_to_json(lambdas[2])});
        inputs["z"] = complex_to_json(z);
        rep = check_marden_majorization(p, P, n, lambdas, z, false);
    } else if (check_id == "lemma22") {
        const double k = rng.uniform(0.05, 1.2);
        const Polynomial p = gen_zeros_in_radius(n, k, rng);
        const double r = rng.uniform(k + 0.05, 2.2);
        const double R = rng.uniform(r, r + 3.0);
        const auto zs = unit_circle_samples(rng, 8);
        inputs["p"] = polynomial_to_json(p);
        inputs["k"] = k;
        inputs["r"] = r;
        inputs["R"] = R;
        rep = check_aziz_growth_lemma(p, n, k, r, R, zs, false);
    } else if (check_id == "eq11") {
        const Polynomial p = gen_unrestricted(n, rng);
        const Complex a = rng.in_disk();
        const Complex z = pick_z(rng, cfg);
        inputs["p"] = polynomial_to_json(p);
        inputs["a"] = complex_to_json(a);
        inputs["z"] = complex_to_json(z);
        rep = check_lemma_2_3(p, n, a, z);
    } else if (check_id == "eq12") {
        const Polynomial p = gen_unrestricted(n, rng);
        const Complex a = rng.in_disk();
        const Complex z = pick_z(rng, cfg);
        inputs["p"] = polynomial_to_json(p);
        inputs["a"] = complex_to_json(a);
        inputs["z"] = complex_to_json(z);
        rep = check_lemma_2_4(p, n, a, z);
    } else if (check_id == "eq13") {
        const auto [p, P] = gen_majorized_pair(n, rng);
        const Complex a = rng.in_disk();
        const Complex beta = rng.in_disk();
        const double R = pick_R(rng, cfg);
        const auto zs = unit_circle_samples(rng, 8);
        inputs["p"] = polynomial_to_json(p);
        inputs["P"] = polynomial_to_json(P);
        inputs["a"] = complex_to_json(a);
        inputs["beta"] = complex_to_json(beta);
        inputs["R"] = R;
        rep = check_lemma_2_5(p, P, n, a, beta, R, zs, false);
    } else if (check_id == "eq14" || check_id == "eq16" || check_id == "eq18") {
        const Polynomial p = (check_id == "eq18") ? gen_no_zeros_in_disk(n, rng)
                                                  : gen_unrestricted(n, rng);
        const Complex a = rng.in_disk();
        const Complex beta = rng.in_disk();
        const double R = pick_R(rng, cfg);
        const Complex z = pick_z(rng, cfg);
        inputs["p"] = polynomial_to_json(p);
        inputs["a"] = complex_to_json(a);
        inputs["beta"] = complex_to_json(beta);
        inputs["R"] = R;
        inputs["z"] = complex_to_json(z);
        if (check_id == "eq14") {
            rep = check_thm_3_1(p, n, a, beta, R, z);
        } else if (check_id == "eq16") {
            rep = check_thm_3_2(p, n, a, beta, R, z);
        } else {
            rep = check_thm_3_3(p, n, a, beta, R, z, false);
        }
    } else {
        throw std::invalid_argument("unknown check id: " + check_id);
    }

    rep.inputs = std::move(inputs);
    return rep;
}

namespace {

int resolve_threads(const CampaignConfig& cfg) {
    int t = cfg.threads;
    if (t <= 0) {
        if (const char* env = std::getenv("SMIRNOV_LAB_THREADS")) {
            t = std::atoi(env);
        }
    }
    if (t <= 0) t = static_cast<int>(std::thread::hardware_concurrency());
    return std::clamp(t, 1, 64);
}

json trial_report_to_json(const TrialReport& rep) {
    return json{{"check_id", rep.check_id}, {"lhs", rep.lhs},
                {"rhs", rep.rhs},           {"margin", rep.margin},
                {"passed", rep.passed},     {"skipped", rep.skipped},
                {"inputs", rep.inputs},     {"notes", rep.notes}};
}

}  // namespace

CampaignReport run_campaign(const CampaignConfig& cfg) {
    CampaignReport report;
    report.config = cfg;
    const std::vector<std::string>& checks =
        cfg.checks.empty() ? all_check_ids() : cfg.checks;
    for (const std::string& id : checks) {
        const auto& known = all_check_ids();
        if (std::find(known.begin(), known.end(), id) == known.end()) {
            throw std::invalid_argument("unknown check id: " + id);
        }
    }
    const int threads = resolve_threads(cfg);

    for (const std::string& id : checks) {
        std::vector<TrialReport> reps(cfg.trials);
        auto worker = [&](int first, int last) {
            for (int i = first; i < last; ++i) {
                reps[i] = run_trial(id, cfg, static_cast<std::uint64_t>(i));
            }
        };
        if (threads == 1 || cfg.trials < 2 * threads) {
            worker(0, cfg.trials);
        } else {
            std::vector<std::thread> pool;
            const int chunk = (cfg.trials + threads - 1) / threads;
            for (int t = 0; t < threads; ++t) {
                const int first = t * chunk;
                const int last = std::min(cfg.trials, first + chunk);
                if (first < last) pool.emplace_back(worker, first, last);
            }
            for (auto& th : pool) th.join();
        }

        CheckSummary sum;
        sum.id = id;
        sum.trials = cfg.trials;
        bool first = true;
        for (TrialReport& rep : reps) {  // index order: deterministic aggregation
            if (rep.skipped) {
                ++sum.skips;
                continue;
            }
            if (first || rep.margin < sum.worst_margin) sum.worst_margin = rep.margin;
            if (rep.rhs > 0.0) {
                sum.sharpest_ratio = std::max(sum.sharpest_ratio, rep.lhs / rep.rhs);
            }
            first = false;
            if (rep.passed) ++sum.passes;
            else sum.failing.push_back(std::move(rep));
        }
        if (!sum.failing.empty()) report.all_passed = false;
        report.checks.push_back(std::move(sum));
    }

    if (cfg.exploratory) {
        // Evidence that the zero-free hypotheses bind: rerun the gated checks
        // on unrestricted polynomials and count where the bound breaks.
        json expl = json::object();
        const int probes = std::min(cfg.trials, 200);
        for (const std::string& id : {"eq3", "eq4", "eq5", "eq6", "eq18"}) {
            int violations = 0;
            json examples = json::array();
            for (int i = 0; i < probes; ++i) {
                SplitMix64 rng(trial_seed(cfg.seed, i) ^ fnv1a(id + "/exploratory"));
                const int n = pick_degree(rng, cfg);
                const Polynomial p = gen_unrestricted(n, rng);
                TrialReport rep;
                if (id == "eq3") rep = check_erdos_lax(p, n, false);
                else if (id == "eq4") rep = check_ankeny_rivlin(p, n, pick_R(rng, cfg), false);
                else if (id == "eq5") rep = check_aziz_dawood_deriv(p, n, false);
                else if (id == "eq6") rep = check_aziz_dawood_growth(p, n, pick_R(rng, cfg), false);
                else rep = check_thm_3_3(p, n, rng.in_disk(), rng.in_disk(),
                                         pick_R(rng, cfg), pick_z(rng, cfg), false);
                if (!rep.skipped && !rep.passed) {
                    ++violations;
                    if (examples.size() < 3) {
                        rep.inputs = json{{"p", polynomial_to_json(p)}, {"degree", n}};
                        examples.push_back(trial_report_to_json(rep));
                    }
                }
            }
            expl[id] = json{{"probes", probes},
                            {"violations", violations},
                            {"examples", examples}};
        }
        report.exploratory = std::move(expl);
    }
    return report;
}

CampaignConfig campaign_config_from_json(const json& j) {
    CampaignConfig cfg;
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("trials")) cfg.trials = j.at("trials").get<int>();
    if (j.contains("checks")) cfg.checks = j.at("checks").get<std::vector<std::string>>();
    if (j.contains("degrees")) cfg.degrees = j.at("degrees").get<std::vector<int>>();
    if (j.contains("z_radii")) cfg.z_radii = j.at("z_radii").get<std::vector<double>>();
    if (j.contains("R_values")) cfg.R_values = j.at("R_values").get<std::vector<double>>();
    if (j.contains("exploratory")) cfg.exploratory = j.at("exploratory").get<bool>();
    if (j.contains("threads")) cfg.threads = j.at("threads").get<int>();
    if (cfg.trials < 0) throw std::invalid_argument("config: trials must be >= 0");
    if (cfg.degrees.empty()) throw std::invalid_argument("config: degrees empty");
    for (int d : cfg.degrees) {
        if (d < 1 || d > 16) throw std::invalid_argument("config: degree out of 1..16");
    }
    for (double r : cfg.z_radii) {
        if (!(r >= 1.0)) throw std::invalid_argument("config: z radii must be >= 1");
    }
    for (double R : cfg.R_values) {
        if (!(R >= 1.0)) throw std::invalid_argument("config: R values must be >= 1");
    }
    return cfg;
}

json campaign_config_to_json(const CampaignConfig& cfg) {
    return json{{"seed", cfg.seed},
                {"trials", cfg.trials},
                {"checks", cfg.checks.empty() ? all_check_ids() : cfg.checks},
                {"degrees", cfg.degrees},
                {"z_radii", cfg.z_radii},
                {"R_values", cfg.R_values},
                {"exploratory", cfg.exploratory}};
}

json campaign_report_to_json(const CampaignReport& report) {
    json checks = json::array();
    for (const CheckSummary& sum : report.checks) {
        json failing = json::array();
        for (const TrialReport& rep : sum.failing) {
            failing.push_back(trial_report_to_json(rep));
        }
        checks.push_back(json{{"id", sum.id},
                              {"trials", sum.trials},
                              {"passes", sum.passes},
                              {"skips", sum.skips},
                              {"failures", static_cast<int>(sum.failing.size())},
                              {"worst_margin", sum.worst_margin},
                              {"sharpest_ratio", sum.sharpest_ratio},
                              {"failing", std::move(failing)}});
    }
    json j{{"schema", "smirnov-lab-report/1"},
           {"prng", kPrngName},
           {"config", campaign_config_to_json(report.config)},
           {"checks", std::move(checks)},
           {"all_passed", report.all_passed}};
    if (!report.exploratory.is_null()) j["exploratory"] = report.exploratory;
    return j;
}

// --- sharpness -----------------------------------------------------------

SharpnessReport sharpness_scan(const std::string& check_id, Family family,
                               const CampaignConfig& grid) {
    if (family != Family::ExtremalMonomial && family != Family::ExtremalBinomial) {
        throw std::invalid_argument("sharpness_scan: family must be extremal");
    }
    SharpnessReport out;
    out.check_id = check_id;
    out.family = family;

    SplitMix64 rng(grid.seed ^ fnv1a(check_id + "/sharpness"));
    auto consider = [&out](double lhs, double rhs, json attaining) {
        if (rhs <= 0.0) return;
        const double ratio = lhs / rhs;
        ++out.evaluations;
        if (ratio > out.max_ratio) {
            out.max_ratio = ratio;
            out.attaining = std::move(attaining);
        }
    };

    const int polys_per_degree = 4;
    for (int n : grid.degrees) {
        for (int rep = 0; rep < polys_per_degree; ++rep) {
            const Polynomial p = gen_extremal(n, family, rng);
            const json pj = polynomial_to_json(p);
            const double maxp = circle_profile(p, 1.0).max_value;
            const CircleProfile prof = circle_profile(p, 1.0);

            if (check_id == "eq1") {
                const double lhs = circle_profile(derivative(p), 1.0).max_value;
                consider(lhs, n * maxp, json{{"degree", n}, {"p", pj}});
            } else if (check_id == "eq2") {
                for (double R : grid.R_values) {
                    const double lhs = circle_profile(p, R).max_value;
                    consider(lhs, std::pow(R, n) * maxp,
                             json{{"degree", n}, {"R", R}, {"p", pj}});
                }
            } else if (check_id == "eq3") {
                const double lhs = circle_profile(derivative(p), 1.0).max_value;
                consider(lhs, 0.5 * n * maxp, json{{"degree", n}, {"p", pj}});
            } else if (check_id == "eq4") {
                for (double R : grid.R_values) {
                    const double lhs = circle_profile(p, R).max_value;
                    consider(lhs, 0.5 * (std::pow(R, n) + 1.0) * maxp,
                             json{{"degree", n}, {"R", R}, {"p", pj}});
                }
            } else if (check_id == "eq5") {
                const double lhs = circle_profile(derivative(p), 1.0).max_value;
                consider(lhs, 0.5 * n * (prof.max_value - prof.min_value),
                         json{{"degree", n}, {"p", pj}});
            } else if (check_id == "eq6") {
                for (double R : grid.R_values) {
                    const double lhs = circle_profile(p, R).max_value;
                    const double Rn = std::pow(R, n);
                    consider(lhs,
                             0.5 * (Rn + 1.0) * prof.max_value -
                                 0.5 * (Rn - 1.0) * prof.min_value,
                             json{{"degree", n}, {"R", R}, {"p", pj}});
                }
            } else if (check_id == "eq14" || check_id == "eq16") {
                const Polynomial Q = conjugate_reciprocal(p, n);
                const std::vector<Complex> a_values = {
                    Complex{0.0, 0.0}, Complex{0.5, 0.0}, Complex{0.0, 0.7},
                    rng.in_disk()};
                const std::vector<Complex> beta_values = {
                    Complex{0.0, 0.0}, Complex{-0.5, 0.0}, rng.in_disk()};
                for (const Complex& a : a_values) {
                    for (const Complex& beta : beta_values) {
                        for (double R : grid.R_values) {
                            const Polynomial comb_p =
                                smirnov_combination(p, a, beta, R, n);
                            const Polynomial comb_Q =
                                (check_id == "eq16")
                                    ? smirnov_combination(Q, a, beta, R, n)
                                    : Polynomial::zero(0);
                            const double factor = std::abs(std::pow(R, n) - beta);
                            for (double radius : grid.z_radii) {
                                for (int k = 0; k < 8; ++k) {
                                    const Complex z =
                                        circle_point(radius, kTwoPi * k / 8.0);
                                    const double en = abs_en_operator(a, n, z);
                                    json at{{"degree", n}, {"R", R},
                                            {"a", complex_to_json(a)},
                                            {"beta", complex_to_json(beta)},
                                            {"z", complex_to_json(z)},
                                            {"p", pj}};
                                    if (check_id == "eq14") {
                                        consider(std::abs(eval(comb_p, z)),
                                                 factor * en * maxp, std::move(at));
                                    } else {
                                        const double second =
                                            n * std::abs(1.0 - beta) * std::abs(a);
                                        consider(std::abs(eval(comb_p, z)) +
                                                     std::abs(eval(comb_Q, z)),
                                                 (factor * en + second) * maxp,
                                                 std::move(at));
                                    }
                                }
                            }
                        }
                    }
                }
            } else {
                throw std::invalid_argument("sharpness_scan: unsupported check: " +
                                            check_id);
            }
        }
    }
    return out;
}

json sharpness_report_to_json(const SharpnessReport& report) {
    return json{{"schema", "smirnov-lab-sharpness/1"},
                {"check_id", report.check_id},
                {"family", to_string(report.family)},
                {"max_ratio", report.max_ratio},
                {"evaluations", report.evaluations},
                {"attaining", report.attaining}};
}

}  // namespace smirnovlab
