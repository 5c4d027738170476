#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "smirnovlab/harness.hpp"
#include "smirnovlab/operators.hpp"
#include "smirnovlab/rng.hpp"

using namespace smirnovlab;

namespace {

Complex circle_point(double theta) { return Complex{std::cos(theta), std::sin(theta)}; }

const Polynomial kZsqPlusOne({{1, 0}, {0, 0}, {1, 0}});  // z^2 + 1, zeros at +-i

}  // namespace

TEST_CASE("bound_holds tolerance band") {
    CHECK(bound_holds(1.0, 1.0));
    CHECK(bound_holds(1.0 + 5e-10, 1.0));   // inside the relative band
    CHECK(!bound_holds(1.0 + 1e-8, 1.0));   // outside it
    CHECK(bound_holds(1e-13, 0.0));         // absolute floor
}

TEST_CASE("eq1: z^3 attains the derivative bound exactly") {
    const TrialReport rep = check_bernstein(Polynomial::monomial(3), 3);
    CHECK(rep.passed);
    CHECK(rep.lhs == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(rep.rhs == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("eq2: z^2 + 1 under dilation R = 2") {
    const TrialReport rep = check_growth(kZsqPlusOne, 2, 2.0);
    CHECK(rep.passed);
    CHECK(rep.lhs == doctest::Approx(5.0).epsilon(1e-12));  // max |4z^2 + 1|
    CHECK(rep.rhs == doctest::Approx(8.0).epsilon(1e-12));  // 2^2 * max |z^2 + 1|
}

TEST_CASE("eq3: z^2 + 1 attains the zero-free derivative bound") {
    const TrialReport rep = check_erdos_lax(kZsqPlusOne, 2);
    CHECK(rep.passed);
    CHECK(!rep.skipped);
    CHECK(rep.lhs == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rep.rhs == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("eq4: z^2 + 1 attains the zero-free growth bound at R = 2") {
    const TrialReport rep = check_ankeny_rivlin(kZsqPlusOne, 2, 2.0);
    CHECK(rep.passed);
    CHECK(rep.lhs == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(rep.rhs == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("eq5 and eq6: min-modulus refinements on z^2 + 1") {
    const TrialReport d = check_aziz_dawood_deriv(kZsqPlusOne, 2);
    CHECK(d.passed);
    CHECK(d.lhs == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(d.rhs == doctest::Approx(2.0).epsilon(1e-8));  // min |p| = 0 on the circle

    const TrialReport g = check_aziz_dawood_growth(kZsqPlusOne, 2, 2.0);
    CHECK(g.passed);
    CHECK(g.lhs == doctest::Approx(5.0).epsilon(1e-10));
    CHECK(g.rhs == doctest::Approx(5.0).epsilon(1e-8));
}

TEST_CASE("hypothesis violations are reported as skips, not failures") {
    // zero at 0.5: inside the open unit disk
    const Polynomial bad = Polynomial::from_roots({Complex{0.5, 0}, Complex{2, 0}});
    CHECK(check_erdos_lax(bad, 2).skipped);
    CHECK(check_ankeny_rivlin(bad, 2, 2.0).skipped);
    CHECK(check_aziz_dawood_deriv(bad, 2).skipped);
    CHECK(check_aziz_dawood_growth(bad, 2, 1.5).skipped);
    // with validation off the same inputs are evaluated
    CHECK(!check_erdos_lax(bad, 2, false).skipped);
}

TEST_CASE("smirnov majorization skips alpha outside Omega_r") {
    SplitMix64 rng(1);
    const auto [p, P] = gen_majorized_pair(4, rng);
    const Complex z{1.5, 0};
    // alpha = 1 is never a member
    CHECK(check_smirnov_majorization(p, P, 4, Complex{1, 0}, z).skipped);
    // alpha = 0 always is
    const TrialReport rep = check_smirnov_majorization(p, P, 4, Complex{0, 0}, z);
    CHECK(!rep.skipped);
    CHECK(rep.passed);
}

TEST_CASE("marden majorization skips inadmissible parameters") {
    SplitMix64 rng(2);
    const auto [p, P] = gen_majorized_pair(3, rng);
    // u(z) = lambda0 + n lambda1 z with root at Re = 1 > n/4 = 0.75
    const std::array<Complex, 3> bad{Complex{-3, 0}, Complex{1, 0}, Complex{0, 0}};
    CHECK(!marden_admissible(bad, 3));
    CHECK(check_marden_majorization(p, P, 3, bad, Complex{2, 0}).skipped);
    const std::array<Complex, 3> good{Complex{1, 0}, Complex{0, 0}, Complex{0, 0}};
    const TrialReport rep = check_marden_majorization(p, P, 3, good, Complex{2, 0});
    CHECK(!rep.skipped);
    CHECK(rep.passed);
}

TEST_CASE("monomial attains equality in the combined growth bound") {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(rng.index(10));
        const Complex a = 0.999 * rng.in_disk();
        const Complex beta = 0.999 * rng.in_disk();
        const double R = rng.uniform(1.0, 3.0);
        const Complex z = circle_point(rng.uniform(0.0, 2 * std::numbers::pi));
        const TrialReport rep = check_thm_3_1(Polynomial::monomial(n), n, a, beta, R, z);
        CHECK(rep.passed);
        if (rep.rhs > 1e-9) {
            CHECK(rep.lhs / rep.rhs == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("a = 0, beta = 0, R = 1 reduces to the pointwise derivative bound") {
    SplitMix64 rng(4);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 1 + static_cast<int>(rng.index(8));
        const Polynomial p = gen_unrestricted(n, rng);
        const Complex z = circle_point(rng.uniform(0.0, 2 * std::numbers::pi));
        const TrialReport rep = check_thm_3_1(p, n, Complex{0, 0}, Complex{0, 0}, 1.0, z);
        const double maxp = circle_profile(p, 1.0).max_value;
        CHECK(rep.lhs ==
              doctest::Approx(std::abs(eval(derivative(p), z))).epsilon(1e-10));
        CHECK(rep.rhs == doctest::Approx(n * maxp).epsilon(1e-10));
    }
}

TEST_CASE("zero-free single-term bound is half the two-term bound") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 1 + static_cast<int>(rng.index(8));
        const Polynomial p = gen_no_zeros_in_disk(n, rng);
        const Complex a = 0.9 * rng.in_disk();
        const Complex beta = 0.9 * rng.in_disk();
        const double R = rng.uniform(1.0, 2.5);
        const Complex z = circle_point(rng.uniform(0.0, 2 * std::numbers::pi));
        const TrialReport two = check_thm_3_2(p, n, a, beta, R, z);
        const TrialReport one = check_thm_3_3(p, n, a, beta, R, z);
        REQUIRE(!one.skipped);
        CHECK(one.rhs == doctest::Approx(0.5 * two.rhs).epsilon(1e-12));
        CHECK(one.lhs <= two.lhs + 1e-12);
        CHECK(two.passed);
        CHECK(one.passed);
    }
}

TEST_CASE("lhs/rhs ratio is invariant under coefficient scaling") {
    SplitMix64 rng(6);
    const int n = 6;
    const Polynomial p = gen_no_zeros_in_disk(n, rng);
    const Polynomial q = scale(p, Complex{3.5, -1.25});
    const Complex a{0.3, 0.4};
    const Complex beta{-0.2, 0.1};
    const Complex z = circle_point(1.234);
    const TrialReport r1 = check_thm_3_1(p, n, a, beta, 1.7, z);
    const TrialReport r2 = check_thm_3_1(q, n, a, beta, 1.7, z);
    CHECK(r1.lhs / r1.rhs == doctest::Approx(r2.lhs / r2.rhs).epsilon(1e-10));
    const TrialReport b1 = check_bernstein(p, n);
    const TrialReport b2 = check_bernstein(q, n);
    CHECK(b1.lhs / b1.rhs == doctest::Approx(b2.lhs / b2.rhs).epsilon(1e-10));
}

TEST_CASE("lemma bounds hold on frozen simple inputs") {
    const Complex a{0.5, 0};
    const Complex z = circle_point(0.7);
    const TrialReport l3 = check_lemma_2_3(kZsqPlusOne, 2, a, z);
    CHECK(l3.passed);
    const TrialReport l4 = check_lemma_2_4(kZsqPlusOne, 2, a, z);
    CHECK(l4.passed);
}

TEST_CASE("run_trial is deterministic in (seed, check, index)") {
    CampaignConfig cfg;
    cfg.seed = 99;
    for (const std::string& id : all_check_ids()) {
        const TrialReport a = run_trial(id, cfg, 17);
        const TrialReport b = run_trial(id, cfg, 17);
        CHECK(a.lhs == b.lhs);
        CHECK(a.rhs == b.rhs);
        CHECK(a.passed == b.passed);
        CHECK(a.skipped == b.skipped);
    }
    // different indices draw different inputs
    const TrialReport a = run_trial("eq1", cfg, 1);
    const TrialReport b = run_trial("eq1", cfg, 2);
    CHECK(a.lhs != b.lhs);
}

TEST_CASE("small campaign: counts add up and everything passes") {
    CampaignConfig cfg;
    cfg.seed = 7;
    cfg.trials = 50;
    cfg.checks = {"eq1", "eq3", "eq16"};
    cfg.threads = 2;
    const CampaignReport rep = run_campaign(cfg);
    CHECK(rep.all_passed);
    REQUIRE(rep.checks.size() == 3);
    for (const CheckSummary& sum : rep.checks) {
        CHECK(sum.trials == 50);
        CHECK(sum.passes + sum.skips +
              static_cast<int>(sum.failing.size()) == 50);
        CHECK(sum.failing.empty());
        CHECK(sum.worst_margin >= -kAbsTol);
    }
}

TEST_CASE("campaign rejects unknown check ids") {
    CampaignConfig cfg;
    cfg.checks = {"eq999"};
    CHECK_THROWS(run_campaign(cfg));
}

TEST_CASE("campaign config JSON round-trip and validation") {
    CampaignConfig cfg;
    cfg.seed = 5;
    cfg.trials = 13;
    cfg.checks = {"eq2"};
    cfg.degrees = {2, 4};
    cfg.z_radii = {1.0, 3.0};
    cfg.R_values = {1.5};
    const CampaignConfig back = campaign_config_from_json(campaign_config_to_json(cfg));
    CHECK(back.seed == cfg.seed);
    CHECK(back.trials == cfg.trials);
    CHECK(back.checks == cfg.checks);
    CHECK(back.degrees == cfg.degrees);
    CHECK(back.z_radii == cfg.z_radii);
    CHECK(back.R_values == cfg.R_values);

    CHECK_THROWS(campaign_config_from_json(json{{"degrees", {0}}}));
    CHECK_THROWS(campaign_config_from_json(json{{"degrees", {17}}}));
    CHECK_THROWS(campaign_config_from_json(json{{"z_radii", {0.5}}}));
    CHECK_THROWS(campaign_config_from_json(json{{"R_values", {0.9}}}));
    CHECK_THROWS(campaign_config_from_json(json{{"trials", -1}}));
}

TEST_CASE("campaign report serialization is deterministic") {
    CampaignConfig cfg;
    cfg.seed = 11;
    cfg.trials = 20;
    cfg.checks = {"eq1", "eq14"};
    cfg.threads = 2;
    const std::string a = campaign_report_to_json(run_campaign(cfg)).dump(2);
    const std::string b = campaign_report_to_json(run_campaign(cfg)).dump(2);
    CHECK(a == b);
    const json j = json::parse(a);
    CHECK(j.at("schema") == "smirnov-lab-report/1");
    CHECK(j.at("prng") == "splitmix64");
    CHECK(j.at("all_passed") == true);
}

TEST_CASE("exploratory mode reports hypothesis-free violations") {
    CampaignConfig cfg;
    cfg.seed = 3;
    cfg.trials = 40;
    cfg.checks = {"eq1"};
    cfg.exploratory = true;
    const CampaignReport rep = run_campaign(cfg);
    REQUIRE(!rep.exploratory.is_null());
    // the zero-free derivative bound must break for generic polynomials
    CHECK(rep.exploratory.at("eq3").at("violations").get<int>() > 0);
    const json j = campaign_report_to_json(rep);
    CHECK(j.contains("exploratory"));
}

TEST_CASE("sharpness scan finds the extremal ratio for eq1 and eq3") {
    CampaignConfig grid;
    grid.degrees = {1, 2, 3, 4, 5, 6, 7, 8};
    const SharpnessReport mono = sharpness_scan("eq1", Family::ExtremalMonomial, grid);
    CHECK(mono.max_ratio >= 1.0 - 1e-6);
    CHECK(mono.max_ratio <= 1.0 + 1e-9);
    CHECK(mono.evaluations > 0);
    const SharpnessReport bino = sharpness_scan("eq3", Family::ExtremalBinomial, grid);
    CHECK(bino.max_ratio >= 1.0 - 1e-6);
    CHECK(bino.max_ratio <= 1.0 + 1e-9);

    const json j = sharpness_report_to_json(mono);
    CHECK(j.at("schema") == "smirnov-lab-sharpness/1");
    CHECK(j.at("check_id") == "eq1");
}

TEST_CASE("sharpness scan rejects unsupported checks") {
    CampaignConfig grid;
    CHECK_THROWS(sharpness_scan("eq7", Family::ExtremalMonomial, grid));
}
