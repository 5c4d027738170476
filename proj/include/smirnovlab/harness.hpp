#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "smirnovlab/circle.hpp"
#include "smirnovlab/generators.hpp"
#include "smirnovlab/json_io.hpp"
#include "smirnovlab/operators.hpp"
#include "smirnovlab/poly.hpp"

namespace smirnovlab {

// An inequality holds when lhs <= rhs * (1 + kRelTol) + kAbsTol. The bounds
// are proved theorems; the slack only absorbs rounding on top of a
// max-modulus computed to ~1e-12.
inline constexpr double kRelTol = 1e-9;
inline constexpr double kAbsTol = 1e-12;

inline bool bound_holds(double lhs, double rhs) {
    return lhs <= rhs * (1.0 + kRelTol) + kAbsTol;
}

/// One inequality evaluation. skipped means the input failed the theorem's
/// hypothesis; the harness tests theorems, not their converses.
struct TrialReport {
    std::string check_id;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // rhs - lhs
    bool passed = false;
    bool skipped = false;
    json inputs;
    std::string notes;
};

// --- classical bounds ----------------------------------------------------

/// max |p'| <= n max |p| on the unit circle.
TrialReport check_bernstein(const Polynomial& p, int n);

/// max |p(Rz)| <= R^n max |p(z)|.
TrialReport check_growth(const Polynomial& p, int n, double R);

/// max |p'| <= (n/2) max |p|, for p with no zeros in the open unit disk.
TrialReport check_erdos_lax(const Polynomial& p, int n, bool validate = true);

/// max |p(Rz)| <= ((R^n + 1)/2) max |p|, same zero-free hypothesis.
TrialReport check_ankeny_rivlin(const Polynomial& p, int n, double R,
                                bool validate = true);

/// max |p'| <= (n/2)(max |p| - min |p|), same hypothesis.
TrialReport check_aziz_dawood_deriv(const Polynomial& p, int n, bool validate = true);

/// max |p(Rz)| <= ((R^n+1)/2) max - ((R^n-1)/2) min, same hypothesis.
TrialReport check_aziz_dawood_growth(const Polynomial& p, int n, double R,
                                     bool validate = true);

// --- operator majorization ----------------------------------------------

/// |p'(z)| <= |P'(z)| outside the open disk, for a majorized pair.
TrialReport check_bernstein_majorization(const Polynomial& p, const Polynomial& P,
                                         int n, std::span<const Complex> z_samples,
                                         bool validate = true);

/// |S_alpha[p](z)| <= |S_alpha[P](z)| for alpha in the closure of Omega_|z|.
TrialReport check_smirnov_majorization(const Polynomial& p, const Polynomial& P,
                                       int n, Complex alpha, Complex z,
                                       bool validate = true);

/// |B[p](z)| <= |B[P](z)| for admissible Marden parameters.
TrialReport check_marden_majorization(const Polynomial& p, const Polynomial& P,
                                      int n, const std::array<Complex, 3>& lambdas,
                                      Complex z, bool validate = true);

/// |p(Rz)| >= ((R+k)/(r+k))^n |p(rz)| for p with zeros in |z| <= k,
/// R >= r, rR >= k^2. Reported with lhs = the bound, rhs = |p(Rz)|.
TrialReport check_aziz_growth_lemma(const Polynomial& p, int n, double k,
                                    double r, double R,
                                    std::span<const Complex> z_samples,
                                    bool validate = true);

// --- modified-Smirnov lemmas and main theorems ---------------------------

/// |S~_a[p](z)| <= M |S~_a[z^n](z)| for |p| < M on the circle (M is taken as
/// the computed circle max).
TrialReport check_lemma_2_3(const Polynomial& p, int n, Complex a, Complex z);

/// |S~_a[p](z)| + |S~_a[g](z)| <= (|S~_a[E_n](z)| + n|a|) max |p|,
/// g the conjugate reciprocal of p.
TrialReport check_lemma_2_4(const Polynomial& p, int n, Complex a, Complex z);

/// |S~_a[p](Rz) - beta S~_a[p](z)| <= same with P, for a majorized pair with
/// P zero-free outside the open disk's complement (zeros inside), z on the
/// unit circle. The dilated-operator reading applies on both sides.
TrialReport check_lemma_2_5(const Polynomial& p, const Polynomial& P, int n,
                            Complex a, Complex beta, double R,
                            std::span<const Complex> z_samples,
                            bool validate = true);

/// |S~_a[p](Rz) - beta S~_a[p](z)| <= |R^n - beta| |S~_a[E_n](z)| max |p|.
/// The operator form and the expanded pointwise form are both evaluated and
/// cross-asserted within 1e-10 relative.
TrialReport check_thm_3_1(const Polynomial& p, int n, Complex a, Complex beta,
                          double R, Complex z);

/// Adds the conjugate-reciprocal term:
/// lhs + same for Q <= (|R^n - beta| |S~_a[E_n](z)| + n|1-beta||a|) max |p|.
TrialReport check_thm_3_2(const Polynomial& p, int n, Complex a, Complex beta,
                          double R, Complex z);

/// For p zero-free in the open disk: the single-term bound at half the
/// Theorem 3.2 right-hand side.
TrialReport check_thm_3_3(const Polynomial& p, int n, Complex a, Complex beta,
                          double R, Complex z, bool validate = true);

// --- campaign ------------------------------------------------------------

struct CampaignConfig {
    std::uint64_t seed = 42;
    int trials = 1000;
    std::vector<std::string> checks;    // empty = all
    std::vector<int> degrees = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
    std::vector<double> z_radii = {1.0, 1.01, 1.5, 2.0, 5.0};
    std::vector<double> R_values = {1.0, 1.001, 1.5, 2.0, 4.0};
    bool exploratory = false;
    int threads = 0;  // 0: SMIRNOV_LAB_THREADS env, else hardware
};

CampaignConfig campaign_config_from_json(const json& j);
json campaign_config_to_json(const CampaignConfig& cfg);

struct CheckSummary {
    std::string id;
    int trials = 0;
    int passes = 0;
    int skips = 0;
    double worst_margin = 0.0;     // min over trials of rhs - lhs
    double sharpest_ratio = 0.0;   // max over trials of lhs / rhs
    std::vector<TrialReport> failing;
};

struct CampaignReport {
    CampaignConfig config;
    std::vector<CheckSummary> checks;
    bool all_passed = true;
    json exploratory;  // only populated in exploratory mode
};

/// The ids understood by campaigns: eq1..eq6, thm11, eq7, eq9, lemma22,
/// eq11..eq13, eq14, eq16, eq18.
const std::vector<std::string>& all_check_ids();

/// Generate inputs for one (check, trial) pair from the per-trial stream and
/// run the checker. Deterministic in (config.seed, check_id, trial_index).
TrialReport run_trial(const std::string& check_id, const CampaignConfig& cfg,
                      std::uint64_t trial_index);

CampaignReport run_campaign(const CampaignConfig& cfg);
json campaign_report_to_json(const CampaignReport& report);

// --- sharpness -----------------------------------------------------------

struct SharpnessReport {
    std::string check_id;
    Family family = Family::ExtremalMonomial;
    double max_ratio = 0.0;  // sup of lhs / rhs over the scan
    json attaining;          // configuration at the supremum
    int evaluations = 0;
};

/// Scan the extremal family over the parameter grid and report the supremum
/// of lhs/rhs with the attaining configuration. Supported checks: eq1, eq2,
/// eq3, eq4, eq5, eq6, eq14, eq16.
SharpnessReport sharpness_scan(const std::string& check_id, Family family,
                               const CampaignConfig& grid);
json sharpness_report_to_json(const SharpnessReport& report);

}  // namespace smirnovlab
