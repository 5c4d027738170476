// smirnov-lab command line: apply operators, profile circles, find roots,
// run verification campaigns, scan sharpness.
//
// Exit codes: 0 success (and all checks passed), 1 a verification check
// failed, 2 invalid input. All machine output is JSON on stdout or the
// designated file; diagnostics go to stderr.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "smirnovlab/circle.hpp"
#include "smirnovlab/harness.hpp"
#include "smirnovlab/json_io.hpp"
#include "smirnovlab/operators.hpp"

using namespace smirnovlab;

namespace {

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << dump_report(j) << '\n';
    } else {
        write_json_file(out_path, j);
    }
}

Complex parse_complex_flag(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) {
        return Complex{std::stod(s), 0.0};
    }
    return Complex{std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

int cmd_apply(const std::string& poly_file, const std::string& op_file,
              std::optional<double> R, std::optional<std::string> beta_str,
              const std::string& out_path) {
    const Polynomial p = polynomial_from_json(load_json_file(poly_file));
    const OperatorSpec spec = operator_spec_from_json(load_json_file(op_file));
    Polynomial result = Polynomial::zero(0);
    if (R || beta_str) {
        if (spec.kind != OperatorKind::ModifiedSmirnov) {
            throw std::invalid_argument(
                "--R/--beta apply only to the modified Smirnov operator");
        }
        const Complex beta = beta_str ? parse_complex_flag(*beta_str) : Complex{0, 0};
        result = smirnov_combination(p, spec.a, beta, R.value_or(1.0), spec.n);
    } else {
        result = apply_operator(spec, p);
    }
    emit(polynomial_to_json(result), out_path);
    return 0;
}

int cmd_maxmod(const std::string& poly_file, double radius, const std::string& out_path) {
    const Polynomial p = polynomial_from_json(load_json_file(poly_file));
    const CircleProfile prof = circle_profile(p, radius);
    emit(json{{"radius", prof.radius},
              {"max", prof.max_value},
              {"argmax_theta", prof.argmax_theta},
              {"min", prof.min_value},
              {"argmin_theta", prof.argmin_theta},
              {"samples", prof.samples}},
         out_path);
    return 0;
}

int cmd_roots(const std::string& poly_file, const std::string& out_path) {
    const Polynomial p = polynomial_from_json(load_json_file(poly_file));
    const ZeroSet zs = find_roots(p);
    json roots = json::array();
    for (std::size_t i = 0; i < zs.roots.size(); ++i) {
        roots.push_back(json{{"root", complex_to_json(zs.roots[i])},
                             {"residual", zs.residuals[i]},
                             {"distance_to_unit_circle",
                              std::abs(std::abs(zs.roots[i]) - 1.0)}});
    }
    emit(json{{"roots", std::move(roots)},
              {"classification", to_string(zs.classification)},
              {"converged", zs.converged},
              {"iterations", zs.iterations}},
         out_path);
    return 0;
}

int cmd_verify(const std::string& config_file, const std::string& out_path) {
    const CampaignConfig cfg = campaign_config_from_json(load_json_file(config_file));
    const CampaignReport report = run_campaign(cfg);
    emit(campaign_report_to_json(report), out_path);
    return report.all_passed ? 0 : 1;
}

int cmd_sharpness(const std::string& check_id, const std::string& family_name,
                  const std::string& out_path) {
    const Family family = family_from_string(family_name);
    CampaignConfig grid;  // default degrees / radii / R grid
    const SharpnessReport report = sharpness_scan(check_id, family, grid);
    emit(sharpness_report_to_json(report), out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polynomial operator lab: Smirnov-type operators and "
                 "numerical verification of Bernstein-type inequalities"};
    app.require_subcommand(1);

    std::string poly_file, op_file, config_file, out_path, check_id, family_name;
    double radius = 1.0;
    std::optional<double> R_flag;
    std::optional<std::string> beta_flag;

    auto* apply = app.add_subcommand("apply", "Apply an operator to a polynomial");
    apply->add_option("--poly", poly_file, "Polynomial JSON file")->required();
    apply->add_option("--op", op_file, "Operator spec JSON file")->required();
    apply->add_option("--R", R_flag, "Dilation R for the R/beta combination");
    apply->add_option("--beta", beta_flag, "beta as re,im for the combination");
    apply->add_option("--out", out_path, "Output file (default stdout)");

    auto* maxmod = app.add_subcommand("maxmod", "Max/min modulus on a circle");
    maxmod->add_option("--poly", poly_file, "Polynomial JSON file")->required();
    maxmod->add_option("--radius", radius, "Circle radius")->required();
    maxmod->add_option("--out", out_path, "Output file (default stdout)");

    auto* roots = app.add_subcommand("roots", "Find all roots");
    roots->add_option("--poly", poly_file, "Polynomial JSON file")->required();
    roots->add_option("--out", out_path, "Output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "Run a verification campaign");
    verify->add_option("--config", config_file, "Campaign config JSON")->required();
    verify->add_option("--out", out_path, "Output file (default stdout)");

    auto* sharp = app.add_subcommand("sharpness", "Equality-attainment scan");
    sharp->add_option("--check", check_id, "Check id (e.g. eq14)")->required();
    sharp->add_option("--family", family_name,
                      "extremal_monomial or extremal_binomial")->required();
    sharp->add_option("--out", out_path, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // invalid invocation
    }

    try {
        if (apply->parsed()) return cmd_apply(poly_file, op_file, R_flag, beta_flag, out_path);
        if (maxmod->parsed()) return cmd_maxmod(poly_file, radius, out_path);
        if (roots->parsed()) return cmd_roots(poly_file, out_path);
        if (verify->parsed()) return cmd_verify(config_file, out_path);
        if (sharp->parsed()) return cmd_sharpness(check_id, family_name, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
