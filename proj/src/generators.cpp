#include "smirnovlab/generators.hpp"

#include <cmath>
#include <stdexcept>

#include "smirnovlab/circle.hpp"

namespace smirnovlab {

namespace {

constexpr double kRootMargin = 1e-3;   // keeps "strict" families off the circle
constexpr double kPairMargin = 1e-6;   // target max ratio for majorized pairs

void check_degree(int degree) {
    if (degree < 1 || degree > 16) {
        throw std::invalid_argument("generator: degree must be in 1..16");
    }
}

Complex random_leading(SplitMix64& rng) {
    return rng.unit_complex() * std::pow(10.0, rng.uniform(-1.0, 1.0));
}

}  // namespace

Polynomial gen_zeros_in_disk(int degree, SplitMix64& rng) {
    check_degree(degree);
    std::vector<Complex> roots(degree);
    for (auto& r : roots) {
        r = (1.0 - kRootMargin) * std::sqrt(rng.uniform()) * rng.unit_complex();
    }
    return Polynomial::from_roots(roots, random_leading(rng));
}

Polynomial gen_no_zeros_in_disk(int degree, SplitMix64& rng) {
    check_degree(degree);
    std::vector<Complex> roots(degree);
    for (auto& r : roots) {
        const double u = std::max(rng.uniform(), 1e-12);  // keep the radius finite
        const double radius = 1.0 / ((1.0 - kRootMargin) * std::sqrt(u));
        r = radius * rng.unit_complex();
    }
    return Polynomial::from_roots(roots, random_leading(rng));
}

Polynomial gen_unrestricted(int degree, SplitMix64& rng) {
    check_degree(degree);
    std::vector<Complex> c(degree + 1);
    for (auto& cj : c) {
        cj = Complex{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    }
    // force the stated degree
    while (std::abs(c[degree]) < 0.1) {
        c[degree] = Complex{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    }
    return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> gen_majorized_pair(int degree, SplitMix64& rng) {
    check_degree(degree);
    const Polynomial P = gen_zeros_in_disk(degree, rng);
    const int pdeg = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(degree)));
    const Polynomial p0 = gen_unrestricted(pdeg, rng);
    // P's roots sit at radius <= 1 - 1e-3, so the ratio is finite on the circle
    const double ratio = detail::max_ratio_unchecked(p0, P, 1.0);
    return {scale(p0, Complex{(1.0 - kPairMargin) / ratio, 0.0}), P};
}

Polynomial gen_extremal(int degree, Family kind, SplitMix64& rng) {
    check_degree(degree);
    const double scale_mag = std::pow(10.0, rng.uniform(-1.0, 1.0));
    if (kind == Family::ExtremalMonomial) {
        return Polynomial::monomial(degree, scale_mag * rng.unit_complex());
    }
    if (kind == Family::ExtremalBinomial) {
        std::vector<Complex> c(degree + 1, Complex{0.0, 0.0});
        c[0] = scale_mag * rng.unit_complex();
        c[degree] = scale_mag * rng.unit_complex();
        return Polynomial(std::move(c));
    }
    throw std::invalid_argument("gen_extremal: kind must be an extremal family");
}

Polynomial gen_zeros_in_radius(int degree, double k, SplitMix64& rng) {
    check_degree(degree);
    if (!(k >= 0.0)) throw std::invalid_argument("gen_zeros_in_radius: k < 0");
    std::vector<Complex> roots(degree);
    for (auto& r : roots) {
        r = k * std::sqrt(rng.uniform()) * rng.unit_complex();
    }
    return Polynomial::from_roots(roots, random_leading(rng));
}

Polynomial gen_zeros_in_disk(const GeneratorConfig& cfg) {
    SplitMix64 rng(cfg.seed);
    return gen_zeros_in_disk(cfg.degree, rng);
}

Polynomial gen_no_zeros_in_disk(const GeneratorConfig& cfg) {
    SplitMix64 rng(cfg.seed);
    return gen_no_zeros_in_disk(cfg.degree, rng);
}

Polynomial gen_unrestricted(const GeneratorConfig& cfg) {
    SplitMix64 rng(cfg.seed);
    return gen_unrestricted(cfg.degree, rng);
}

std::pair<Polynomial, Polynomial> gen_majorized_pair(const GeneratorConfig& cfg) {
    SplitMix64 rng(cfg.seed);
    return gen_majorized_pair(cfg.degree, rng);
}

Polynomial gen_extremal(const GeneratorConfig& cfg, Family kind) {
    SplitMix64 rng(cfg.seed);
    return gen_extremal(cfg.degree, kind, rng);
}

std::string to_string(Family family) {
    switch (family) {
        case Family::ZerosInClosedDisk: return "zeros_in_closed_disk";
        case Family::NoZerosInOpenDisk: return "no_zeros_in_open_disk";
        case Family::Unrestricted: return "unrestricted";
        case Family::MajorizedPair: return "majorized_pair";
        case Family::ExtremalMonomial: return "extremal_monomial";
        case Family::ExtremalBinomial: return "extremal_binomial";
    }
    return "?";
}

Family family_from_string(const std::string& s) {
    if (s == "zeros_in_closed_disk") return Family::ZerosInClosedDisk;
    if (s == "no_zeros_in_open_disk") return Family::NoZerosInOpenDisk;
    if (s == "unrestricted") return Family::Unrestricted;
    if (s == "majorized_pair") return Family::MajorizedPair;
    if (s == "extremal_monomial") return Family::ExtremalMonomial;
    if (s == "extremal_binomial") return Family::ExtremalBinomial;
    throw std::invalid_argument("unknown family: " + s);
}

}  // namespace smirnovlab
