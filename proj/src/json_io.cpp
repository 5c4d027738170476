#include "smirnovlab/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace smirnovlab {

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument("complex value must be a [re, im] pair");
    }
    return Complex{j[0].get<double>(), j[1].get<double>()};
}

json polynomial_to_json(const Polynomial& p) {
    json coeffs = json::array();
    for (const Complex& c : p.coeffs()) coeffs.push_back(complex_to_json(c));
    return json{{"degree", p.nominal_degree()}, {"coeffs", std::move(coeffs)}};
}

Polynomial polynomial_from_json(const json& j) {
    if (!j.contains("coeffs")) {
        throw std::invalid_argument("polynomial JSON missing \"coeffs\"");
    }
    std::vector<Complex> coeffs;
    for (const auto& cj : j.at("coeffs")) coeffs.push_back(complex_from_json(cj));
    Polynomial p(std::move(coeffs));
    if (j.contains("degree") &&
        j.at("degree").get<int>() != p.nominal_degree()) {
        throw std::invalid_argument("polynomial JSON: degree/coeffs mismatch");
    }
    return p;
}

json operator_spec_to_json(const OperatorSpec& spec) {
    json j{{"kind", to_string(spec.kind)}, {"n", spec.n}};
    switch (spec.kind) {
        case OperatorKind::Smirnov:
            j["alpha"] = complex_to_json(spec.alpha);
            break;
        case OperatorKind::ModifiedSmirnov:
            j["a"] = complex_to_json(spec.a);
            break;
        case OperatorKind::Marden:
            j["lambdas"] = json::array({complex_to_json(spec.lambdas[0]),
                                        complex_to_json(spec.lambdas[1]),
                                        complex_to_json(spec.lambdas[2])});
            break;
    }
    return j;
}

OperatorSpec operator_spec_from_json(const json& j) {
    OperatorSpec spec;
    spec.kind = operator_kind_from_string(j.at("kind").get<std::string>());
    spec.n = j.at("n").get<int>();
    switch (spec.kind) {
        case OperatorKind::Smirnov:
            spec.alpha = complex_from_json(j.at("alpha"));
            break;
        case OperatorKind::ModifiedSmirnov:
            spec.a = complex_from_json(j.at("a"));
            break;
        case OperatorKind::Marden: {
            const auto& l = j.at("lambdas");
            if (!l.is_array() || l.size() != 3) {
                throw std::invalid_argument("marden spec needs 3 lambdas");
            }
            for (int i = 0; i < 3; ++i) spec.lambdas[i] = complex_from_json(l[i]);
            break;
        }
    }
    return spec;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << dump_report(j) << '\n';
}

std::string dump_report(const json& j) { return j.dump(2); }

}  // namespace smirnovlab
