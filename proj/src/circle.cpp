#include "smirnovlab/circle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace smirnovlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kGolden = 0.6180339887498949;  // 1/phi
constexpr double kThetaBracketTol = 1e-12;

// Golden-section maximization of f over [lo, hi].
double golden_max(const std::function<double(double)>& f, double lo, double hi) {
    double a = lo, b = hi;
    double x1 = b - kGolden * (b - a);
    double x2 = a + kGolden * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > kThetaBracketTol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGolden * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGolden * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

struct Extrema {
    double max_value, argmax, min_value, argmin;
};

// Shared scan for |p| and for the ratio |p|/|P|.
Extrema scan_circle(const std::function<double(double)>& f, int samples) {
    double fmax = -1.0, fmin = -1.0;
    int imax = 0, imin = 0;
    std::vector<double> vals(samples);
    for (int k = 0; k < samples; ++k) {
        vals[k] = f(kTwoPi * k / samples);
        if (k == 0 || vals[k] > fmax) { fmax = vals[k]; imax = k; }
        if (k == 0 || vals[k] < fmin) { fmin = vals[k]; imin = k; }
    }
    const double h = kTwoPi / samples;
    // refine in the bracketing interval [theta-h, theta+h] around each extremum
    const double tmax = golden_max(f, imax * h - h, imax * h + h);
    const double tmin = golden_max([&f](double t) { return -f(t); },
                                   imin * h - h, imin * h + h);
    Extrema e;
    e.max_value = std::max(fmax, f(tmax));  // certified against the grid
    e.argmax = tmax;
    e.min_value = std::min(fmin, f(tmin));
    e.argmin = tmin;
    return e;
}

double wrap_theta(double t) {
    t = std::fmod(t, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    return t;
}

}  // namespace

CircleProfile circle_profile(const Polynomial& p, double r, int samples) {
    if (!(r > 0.0)) throw std::invalid_argument("circle_profile: r must be positive");
    if (p.is_zero()) throw std::invalid_argument("circle_profile: zero polynomial");
    auto f = [&p, r](double theta) {
        return std::abs(eval(p, Complex{r * std::cos(theta), r * std::sin(theta)}));
    };
    const Extrema e = scan_circle(f, samples);
    CircleProfile prof;
    prof.radius = r;
    prof.max_value = e.max_value;
    prof.argmax_theta = wrap_theta(e.argmax);
    prof.min_value = e.min_value;
    prof.argmin_theta = wrap_theta(e.argmin);
    prof.samples = samples;
    return prof;
}

double max_ratio(const Polynomial& p, const Polynomial& P, double r) {
    if (P.degree() >= 1) {
        const ZeroSet zs = find_roots(P);
        for (const Complex& root : zs.roots) {
            if (std::abs(std::abs(root) - r) < 1e-6) {
                throw std::invalid_argument("max_ratio: P nearly vanishes on the circle");
            }
        }
    } else if (P.is_zero()) {
        throw std::invalid_argument("max_ratio: P is the zero polynomial");
    }
    return detail::max_ratio_unchecked(p, P, r);
}

double detail::max_ratio_unchecked(const Polynomial& p, const Polynomial& P, double r) {
    auto f = [&p, &P, r](double theta) {
        const Complex z{r * std::cos(theta), r * std::sin(theta)};
        return std::abs(eval(p, z)) / std::abs(eval(P, z));
    };
    return scan_circle(f, kDefaultCircleSamples).max_value;
}

ZeroSet find_roots(const Polynomial& p) {
    const int d = p.degree();
    if (d < 1) throw std::invalid_argument("find_roots: effective degree must be >= 1");

    // normalized coefficient slice 0..d
    std::vector<Complex> c(p.coeffs().begin(), p.coeffs().begin() + d + 1);
    const Complex lead = c[d];
    for (auto& cj : c) cj /= lead;

    // Cauchy-style containment radius for the initial circle
    double radius = 0.0;
    for (int j = 0; j < d; ++j) radius = std::max(radius, std::abs(c[j]));
    radius = std::max(1.0, 1.0 + radius);

    std::vector<Complex> roots(d);
    for (int k = 0; k < d; ++k) {
        // angular jitter breaks coefficient symmetries that trap the iteration
        const double theta = kTwoPi * k / d + 0.4 + 0.13 * k / std::max(1, d);
        roots[k] = radius * Complex{std::cos(theta), std::sin(theta)};
    }

    auto eval_monic = [&c, d](Complex z) {
        Complex acc = c[d];
        for (int j = d - 1; j >= 0; --j) acc = acc * z + c[j];
        return acc;
    };

    ZeroSet zs;
    zs.converged = false;
    const int max_iter = 500;
    for (int it = 0; it < max_iter; ++it) {
        double max_update = 0.0;
        for (int k = 0; k < d; ++k) {
            Complex denom{1.0, 0.0};
            for (int j = 0; j < d; ++j) {
                if (j != k) denom *= roots[k] - roots[j];
            }
            if (std::abs(denom) == 0.0) {
                // collide: nudge and continue
                roots[k] += Complex{1e-8, 1e-8};
                max_update = 1.0;
                continue;
            }
            const Complex dr = eval_monic(roots[k]) / denom;
            roots[k] -= dr;
            max_update = std::max(max_update, std::abs(dr));
        }
        zs.iterations = it + 1;
        if (max_update < 1e-13) {
            zs.converged = true;
            break;
        }
    }

    zs.roots = roots;
    const double cmax = p.max_coeff_modulus();
    zs.residuals.resize(d);
    bool all_in = true, none_in = true;
    for (int k = 0; k < d; ++k) {
        const double m = std::abs(roots[k]);
        zs.residuals[k] = std::abs(eval(p, roots[k])) /
                          (cmax * std::pow(std::max(1.0, m), d));
        if (m > 1.0 + kBoundaryBand) all_in = false;
        if (m < 1.0 - kBoundaryBand) none_in = false;
    }
    if (all_in) {
        zs.classification = ZeroLocation::AllInClosedDisk;
    } else if (none_in) {
        zs.classification = ZeroLocation::NoneInOpenDisk;
    } else {
        zs.classification = ZeroLocation::Mixed;
    }
    return zs;
}

const char* to_string(ZeroLocation loc) {
    switch (loc) {
        case ZeroLocation::AllInClosedDisk: return "all_in_closed_disk";
        case ZeroLocation::NoneInOpenDisk: return "none_in_open_disk";
        case ZeroLocation::Mixed: return "mixed";
    }
    return "?";
}

}  // namespace smirnovlab
