#pragma once

#include <array>
#include <string>

#include "smirnovlab/poly.hpp"

namespace smirnovlab {

// Parameter-domain slack: a and beta live in the closed unit disk, alpha in
// the closure of Omega_r. Exact boundary values are admitted.
inline constexpr double kParamTol = 1e-12;

enum class OperatorKind { Smirnov, ModifiedSmirnov, Marden };

/// Which operator to apply, with its parameters. n is the degree the
/// operator is calibrated to (it may exceed the effective degree of the
/// argument polynomial).
struct OperatorSpec {
    OperatorKind kind = OperatorKind::ModifiedSmirnov;
    Complex alpha{0.0, 0.0};               // Smirnov
    Complex a{0.0, 0.0};                   // ModifiedSmirnov
    std::array<Complex, 3> lambdas{};      // Marden (lambda0, lambda1, lambda2)
    int n = 1;
};

/// S_alpha[p](z) = z p'(z) - n alpha p(z). Requires degree(p) <= n.
Polynomial smirnov(const Polynomial& p, Complex alpha, int n);

/// Modified Smirnov operator: (1 + a z) p'(z) - n a p(z), a in the closed
/// unit disk. The z^n coefficient cancels exactly, so the result is returned
/// with nominal degree n - 1.
Polynomial modified_smirnov(const Polynomial& p, Complex a, int n);

/// The modified Smirnov operator applied to z |-> p(Rz):
/// (1 + a z) R p'(Rz) - n a p(Rz), as a polynomial in z. This is the object
/// written "S~_a[p](Rz)" in growth-type bounds; it is NOT S~_a[p] evaluated
/// at the point Rz.
Polynomial dilated_modified_smirnov(const Polynomial& p, Complex a, int n, double R);

/// dilated_modified_smirnov(p, a, n, R) - beta * modified_smirnov(p, a, n).
Polynomial smirnov_combination(const Polynomial& p, Complex a, Complex beta,
                               double R, int n);

/// Marden operator of order 2:
/// lambda0 p + lambda1 (nz/2) p' + lambda2 (nz/2)^2 p''.
Polynomial marden(const Polynomial& p, const std::array<Complex, 3>& lambdas, int n);

/// Admissibility of the Marden parameters: every root of
/// u(z) = lambda0 + n lambda1 z + (n(n-1)/2) lambda2 z^2 must satisfy
/// Re(root) <= n/4 (closed half-plane; a constant u is admissible).
bool marden_admissible(const std::array<Complex, 3>& lambdas, int n);

/// For lambda2 = 0, lambda1 != 0: the unique alpha with
/// marden(p, lambda) = lambda1 (n/2) smirnov(p, alpha, n) for all p, namely
/// alpha = -2 lambda0 / (n^2 lambda1).
Complex marden_smirnov_alpha(const std::array<Complex, 3>& lambdas, int n);

/// Membership of alpha in the closure of Omega_r, the image of |t| < r under
/// t / (1 + t). Equivalent to |alpha / (1 - alpha)| <= r. alpha = 1 is the
/// pole of the inverse map and is never a member.
bool omega_member(Complex alpha, double r);

/// True iff the z^{n-1} coefficient of modified_smirnov(p, a, n) vanishes,
/// i.e. n a_n = a a_{n-1}: the parameter collapses the operator's degree.
/// Requires degree(p) = n >= 1.
bool is_exceptional(const Polynomial& p, Complex a, int n);

/// Dispatch on an OperatorSpec.
Polynomial apply_operator(const OperatorSpec& spec, const Polynomial& p);

std::string to_string(OperatorKind kind);
OperatorKind operator_kind_from_string(const std::string& s);

}  // namespace smirnovlab
