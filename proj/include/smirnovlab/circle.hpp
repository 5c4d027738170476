#pragma once

#include <vector>

#include "smirnovlab/poly.hpp"

namespace smirnovlab {

/// Max/min of |p| on a circle |z| = radius, with the attaining angles.
struct CircleProfile {
    double radius = 0.0;
    double max_value = 0.0;
    double argmax_theta = 0.0;
    double min_value = 0.0;
    double argmin_theta = 0.0;
    int samples = 0;
};

enum class ZeroLocation { AllInClosedDisk, NoneInOpenDisk, Mixed };

/// Roots with residuals and a unit-disk location classification.
/// boundary_band = 1e-8: roots within the band of |z| = 1 count for either
/// side; classification prefers AllInClosedDisk when both apply.
struct ZeroSet {
    std::vector<Complex> roots;
    std::vector<double> residuals;  // |p(root)| / (max|coeff| * max(1,|root|)^deg)
    ZeroLocation classification = ZeroLocation::Mixed;
    bool converged = true;
    int iterations = 0;
};

inline constexpr int kDefaultCircleSamples = 4096;
inline constexpr double kBoundaryBand = 1e-8;
inline constexpr double kRootResidualTol = 1e-8;

/// Dense uniform sampling (default 4096 angles) followed by golden-section
/// refinement around the bracketing samples of each extremum, to an angular
/// bracket below 1e-12. The returned max is never below the grid max, nor
/// the min above the grid min.
CircleProfile circle_profile(const Polynomial& p, double r,
                             int samples = kDefaultCircleSamples);

/// Supremum of |p| / |P| on |z| = r via the same sample-and-refine scheme.
/// Rejects P with a root within 1e-6 of the circle.
double max_ratio(const Polynomial& p, const Polynomial& P, double r);

/// All effective-degree roots by Durand-Kerner simultaneous iteration from
/// perturbed-circle initial guesses; stops when the largest coordinate
/// update falls below 1e-13, cap 500 iterations. Non-convergence is reported
/// via the converged flag, not an exception.
ZeroSet find_roots(const Polynomial& p);

const char* to_string(ZeroLocation loc);

namespace detail {
/// max_ratio without the root-location precheck, for callers that already
/// know P is zero-free near the circle.
double max_ratio_unchecked(const Polynomial& p, const Polynomial& P, double r);
}  // namespace detail

}  // namespace smirnovlab
