#pragma once

#include <complex>
#include <vector>

namespace smirnovlab {

using Complex = std::complex<double>;

// Relative threshold for effective-degree detection. Operators such as the
// modified Smirnov operator cancel the leading term exactly; the drop has to
// be detected against rounding noise.
inline constexpr double kDegreeEpsilon = 1e-12;

/// Dense complex polynomial. coeffs[j] multiplies z^j, so the nominal degree
/// is coeffs.size() - 1. The zero polynomial is representable; operations
/// that require a nonzero input reject it at their own boundary.
class Polynomial {
public:
    explicit Polynomial(std::vector<Complex> coeffs);

    static Polynomial zero(int nominal_degree = 0);
    static Polynomial monomial(int n, Complex lead = {1.0, 0.0});
    /// Expand lead * prod (z - r_k). Degree = roots.size().
    static Polynomial from_roots(const std::vector<Complex>& roots,
                                 Complex lead = {1.0, 0.0});

    int nominal_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Largest j with |coeff_j| > kDegreeEpsilon * max_j |coeff_j|,
    /// or 0 for the zero polynomial.
    int degree() const;
    bool is_zero() const;
    double max_coeff_modulus() const;

    const std::vector<Complex>& coeffs() const { return coeffs_; }
    /// coeff_j, zero outside the stored range.
    Complex coeff(int j) const;

private:
    std::vector<Complex> coeffs_;
};

/// Horner evaluation of p at z.
Complex eval(const Polynomial& p, Complex z);

/// p'. The nominal degree drops by one; the derivative of a constant is the
/// zero polynomial of nominal degree 0.
Polynomial derivative(const Polynomial& p);

/// z |-> p(Rz) as a coefficient map: coeff_j *= R^j. Requires R > 0.
Polynomial dilate(const Polynomial& p, double R);

/// Q(z) = z^n * conj(p(1/conj(z))): coefficients reversed and conjugated,
/// treating p as a degree-n list padded with zeros. |Q| = |p| on |z| = 1.
/// Requires effective degree of p <= n.
Polynomial conjugate_reciprocal(const Polynomial& p, int n);

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial sub(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Polynomial& p, Complex c);

/// Effective degree (free-function form of Polynomial::degree).
int degree(const Polynomial& p);

}  // namespace smirnovlab
