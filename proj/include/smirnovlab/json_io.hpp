#pragma once

#include <string>

#include <json.hpp>

#include "smirnovlab/operators.hpp"
#include "smirnovlab/poly.hpp"

namespace smirnovlab {

using json = nlohmann::json;

// Shared polynomial file format:
//   {"degree": n, "coeffs": [[re0, im0], ..., [ren, imn]]}
// coefficients ascending in power.
json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

// OperatorSpec:
//   {"kind": "modified_smirnov", "a": [re, im], "n": n}
//   {"kind": "smirnov", "alpha": [re, im], "n": n}
//   {"kind": "marden", "lambdas": [[re,im],[re,im],[re,im]], "n": n}
json operator_spec_to_json(const OperatorSpec& spec);
OperatorSpec operator_spec_from_json(const json& j);

json complex_to_json(Complex c);
Complex complex_from_json(const json& j);

json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

/// Serialize with round-trip-exact numbers (17 significant digits for any
/// double that needs them). Used for every report and CLI output so that
/// identical runs are byte-identical.
std::string dump_report(const json& j);

}  // namespace smirnovlab
