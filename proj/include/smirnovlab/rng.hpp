#pragma once

#include <cmath>
#include <cstdint>

#include "smirnovlab/poly.hpp"

namespace smirnovlab {

/// splitmix64. Chosen over std::mt19937 because the algorithm is a fixed,
/// platform-independent spec: a campaign is reproducible from
/// ("splitmix64", seed) alone.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// uniform in [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// uniform index in [0, n)
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(next() % n); }

    /// random point on the unit circle
    Complex unit_complex() {
        const double t = uniform(0.0, 2.0 * 3.14159265358979323846);
        return Complex{std::cos(t), std::sin(t)};
    }

    /// area-uniform point in the closed unit disk
    Complex in_disk() {
        const double r = std::sqrt(uniform());
        return r * unit_complex();
    }

private:
    std::uint64_t state_;
};

inline const char* kPrngName = "splitmix64";

/// Per-trial stream: seed XOR trial index, as documented in reports.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial_index) {
    return seed ^ trial_index;
}

}  // namespace smirnovlab
