#include "smirnovlab/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace smirnovlab {

namespace {

void require_finite(const std::vector<Complex>& coeffs) {
    for (const Complex& c : coeffs) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw std::invalid_argument("Polynomial: non-finite coefficient");
        }
    }
}

}  // namespace

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("Polynomial: empty coefficient list");
    }
    require_finite(coeffs_);
}

Polynomial Polynomial::zero(int nominal_degree) {
    if (nominal_degree < 0) {
        throw std::invalid_argument("Polynomial::zero: negative degree");
    }
    return Polynomial(std::vector<Complex>(nominal_degree + 1, Complex{0.0, 0.0}));
}

Polynomial Polynomial::monomial(int n, Complex lead) {
    if (n < 0) {
        throw std::invalid_argument("Polynomial::monomial: negative degree");
    }
    std::vector<Complex> c(n + 1, Complex{0.0, 0.0});
    c[n] = lead;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::from_roots(const std::vector<Complex>& roots, Complex lead) {
    std::vector<Complex> c{lead};
    c.reserve(roots.size() + 1);
    for (const Complex& r : roots) {
        // multiply by (z - r); c holds descending powers
        c.push_back(Complex{0.0, 0.0});
        for (int j = static_cast<int>(c.size()) - 1; j >= 1; --j) {
            c[j] = c[j] - r * c[j - 1];
        }
    }
    std::reverse(c.begin(), c.end());
    return Polynomial(std::move(c));
}

int Polynomial::degree() const {
    const double m = max_coeff_modulus();
    if (m == 0.0) return 0;
    const double tol = kDegreeEpsilon * m;
    for (int j = nominal_degree(); j >= 0; --j) {
        if (std::abs(coeffs_[j]) > tol) return j;
    }
    return 0;
}

bool Polynomial::is_zero() const { return max_coeff_modulus() == 0.0; }

double Polynomial::max_coeff_modulus() const {
    double m = 0.0;
    for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

Complex Polynomial::coeff(int j) const {
    if (j < 0 || j > nominal_degree()) return Complex{0.0, 0.0};
    return coeffs_[j];
}

Complex eval(const Polynomial& p, Complex z) {
    const auto& c = p.coeffs();
    Complex acc = c.back();
    for (int j = static_cast<int>(c.size()) - 2; j >= 0; --j) {
        acc = acc * z + c[j];
    }
    return acc;
}

Polynomial derivative(const Polynomial& p) {
    if (p.nominal_degree() == 0) return Polynomial::zero(0);
    std::vector<Complex> c(p.nominal_degree());
    for (int j = 0; j < static_cast<int>(c.size()); ++j) {
        c[j] = static_cast<double>(j + 1) * p.coeff(j + 1);
    }
    return Polynomial(std::move(c));
}

Polynomial dilate(const Polynomial& p, double R) {
    if (!(R > 0.0)) {
        throw std::invalid_argument("dilate: R must be positive");
    }
    std::vector<Complex> c(p.coeffs());
    double pow = 1.0;
    for (auto& cj : c) {
        cj *= pow;
        pow *= R;
    }
    return Polynomial(std::move(c));
}

Polynomial conjugate_reciprocal(const Polynomial& p, int n) {
    if (n < 0 || p.degree() > n) {
        throw std::invalid_argument("conjugate_reciprocal: degree exceeds n");
    }
    std::vector<Complex> c(n + 1);
    for (int j = 0; j <= n; ++j) {
        c[j] = std::conj(p.coeff(n - j));
    }
    return Polynomial(std::move(c));
}

Polynomial add(const Polynomial& p, const Polynomial& q) {
    const int n = std::max(p.nominal_degree(), q.nominal_degree());
    std::vector<Complex> c(n + 1);
    for (int j = 0; j <= n; ++j) c[j] = p.coeff(j) + q.coeff(j);
    return Polynomial(std::move(c));
}

Polynomial sub(const Polynomial& p, const Polynomial& q) {
    return add(p, scale(q, Complex{-1.0, 0.0}));
}

Polynomial scale(const Polynomial& p, Complex c) {
    std::vector<Complex> out(p.coeffs());
    for (auto& cj : out) cj *= c;
    return Polynomial(std::move(out));
}

int degree(const Polynomial& p) { return p.degree(); }

}  // namespace smirnovlab
