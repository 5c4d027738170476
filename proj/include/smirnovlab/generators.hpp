#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "smirnovlab/poly.hpp"
#include "smirnovlab/rng.hpp"

namespace smirnovlab {

enum class Family {
    ZerosInClosedDisk,
    NoZerosInOpenDisk,
    Unrestricted,
    MajorizedPair,
    ExtremalMonomial,
    ExtremalBinomial,
};

struct GeneratorConfig {
    std::uint64_t seed = 0;
    int degree = 1;  // 1..16
    Family family = Family::Unrestricted;
};

// All generators are pure functions of (seed, degree, family): fixed seed
// reproduces identical coefficients across runs. The rng& overloads are the
// same constructions driven by an external stream (used by the campaign,
// which derives one stream per trial).

/// Degree-n polynomial with all roots strictly inside the unit disk:
/// root radius sqrt(U) * (1 - 1e-3) (area-uniform with a margin), random
/// unit-modulus leading coefficient scaled by 10^U(-1,1).
Polynomial gen_zeros_in_disk(const GeneratorConfig& cfg);
Polynomial gen_zeros_in_disk(int degree, SplitMix64& rng);

/// Same construction with reciprocal root radii, so no root lies in the
/// open unit disk.
Polynomial gen_no_zeros_in_disk(const GeneratorConfig& cfg);
Polynomial gen_no_zeros_in_disk(int degree, SplitMix64& rng);

/// Random coefficients, no constraint on zeros. Degree exactly `degree`.
Polynomial gen_unrestricted(const GeneratorConfig& cfg);
Polynomial gen_unrestricted(int degree, SplitMix64& rng);

/// (p, P): P with zeros strictly inside the disk, p a random polynomial of
/// degree <= n rescaled so that max |p|/|P| on the unit circle is
/// 1 - 1e-6. deg p <= deg P by construction.
std::pair<Polynomial, Polynomial> gen_majorized_pair(const GeneratorConfig& cfg);
std::pair<Polynomial, Polynomial> gen_majorized_pair(int degree, SplitMix64& rng);

/// ExtremalMonomial: gamma z^n, random unit-modulus gamma with random scale.
/// ExtremalBinomial: alpha z^n + beta with |alpha| = |beta|, independent
/// random phases.
Polynomial gen_extremal(const GeneratorConfig& cfg, Family kind);
Polynomial gen_extremal(int degree, Family kind, SplitMix64& rng);

/// Degree-n polynomial with all roots in |z| <= k (for growth-lemma trials).
Polynomial gen_zeros_in_radius(int degree, double k, SplitMix64& rng);

std::string to_string(Family family);
Family family_from_string(const std::string& s);

}  // namespace smirnovlab
