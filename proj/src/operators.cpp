#include "smirnovlab/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace smirnovlab {

namespace {

void require_degree(const Polynomial& p, int n, const char* who) {
    if (n < 1) {
        throw std::invalid_argument(std::string(who) + ": n must be >= 1");
    }
    if (p.degree() > n) {
        throw std::invalid_argument(std::string(who) +
                                    ": effective degree exceeds n");
    }
}

}  // namespace

Polynomial smirnov(const Polynomial& p, Complex alpha, int n) {
    require_degree(p, n, "smirnov");
    std::vector<Complex> c(n + 1);
    const Complex na = static_cast<double>(n) * alpha;
    for (int j = 0; j <= n; ++j) {
        c[j] = (static_cast<double>(j) - na) * p.coeff(j);
    }
    return Polynomial(std::move(c));
}

Polynomial modified_smirnov(const Polynomial& p, Complex a, int n) {
    require_degree(p, n, "modified_smirnov");
    if (std::abs(a) > 1.0 + kParamTol) {
        throw std::invalid_argument("modified_smirnov: |a| > 1");
    }
    // (1+az)p' - nap; coefficient j is (j+1)c_{j+1} + a(j-n)c_j, so the z^n
    // term cancels identically and the result fits in nominal degree n-1.
    std::vector<Complex> c(std::max(n, 1));
    for (int j = 0; j < n; ++j) {
        c[j] = static_cast<double>(j + 1) * p.coeff(j + 1) +
               a * static_cast<double>(j - n) * p.coeff(j);
    }
    return Polynomial(std::move(c));
}

Polynomial dilated_modified_smirnov(const Polynomial& p, Complex a, int n, double R) {
    if (!(R > 0.0)) {
        throw std::invalid_argument("dilated_modified_smirnov: R must be positive");
    }
    return modified_smirnov(dilate(p, R), a, n);
}

Polynomial smirnov_combination(const Polynomial& p, Complex a, Complex beta,
                               double R, int n) {
    if (std::abs(beta) > 1.0 + kParamTol) {
        throw std::invalid_argument("smirnov_combination: |beta| > 1");
    }
    return sub(dilated_modified_smirnov(p, a, n, R),
               scale(modified_smirnov(p, a, n), beta));
}

Polynomial marden(const Polynomial& p, const std::array<Complex, 3>& lambdas, int n) {
    require_degree(p, n, "marden");
    // The operator is diagonal in the coefficient basis:
    // coeff_j scales by lambda0 + lambda1 (n/2) j + lambda2 (n/2)^2 j(j-1).
    const double half_n = 0.5 * static_cast<double>(n);
    std::vector<Complex> c(n + 1);
    for (int j = 0; j <= n; ++j) {
        const double dj = static_cast<double>(j);
        const Complex s = lambdas[0] + lambdas[1] * (half_n * dj) +
                          lambdas[2] * (half_n * half_n * dj * (dj - 1.0));
        c[j] = s * p.coeff(j);
    }
    return Polynomial(std::move(c));
}

bool marden_admissible(const std::array<Complex, 3>& lambdas, int n) {
    if (n < 1) throw std::invalid_argument("marden_admissible: n must be >= 1");
    const Complex u0 = lambdas[0];
    const Complex u1 = static_cast<double>(n) * lambdas[1];
    const Complex u2 = 0.5 * static_cast<double>(n) * (n - 1.0) * lambdas[2];
    const double scale = std::max({std::abs(u0), std::abs(u1), std::abs(u2)});
    if (scale == 0.0) {
        throw std::invalid_argument("marden_admissible: all-zero lambda triple");
    }
    const double half_plane = 0.25 * static_cast<double>(n);
    const double tol = 1e-12 * std::max(1.0, half_plane);
    if (std::abs(u2) > kDegreeEpsilon * scale) {
        // quadratic: roots of u2 z^2 + u1 z + u0
        const Complex disc = std::sqrt(u1 * u1 - 4.0 * u2 * u0);
        // stable pairing: q = -(u1 + sign*disc)/2 with the larger modulus
        const Complex q = (std::abs(u1 + disc) >= std::abs(u1 - disc))
                              ? -0.5 * (u1 + disc)
                              : -0.5 * (u1 - disc);
        Complex r1, r2;
        if (std::abs(q) > 0.0) {
            r1 = q / u2;
            r2 = u0 / q;
        } else {
            r1 = r2 = Complex{0.0, 0.0};
        }
        return r1.real() <= half_plane + tol && r2.real() <= half_plane + tol;
    }
    if (std::abs(u1) > kDegreeEpsilon * scale) {
        const Complex root = -u0 / u1;
        return root.real() <= half_plane + tol;
    }
    // constant nonzero u: no roots at all
    return true;
}

Complex marden_smirnov_alpha(const std::array<Complex, 3>& lambdas, int n) {
    if (n < 1) throw std::invalid_argument("marden_smirnov_alpha: n must be >= 1");
    if (std::abs(lambdas[1]) == 0.0) {
        throw std::invalid_argument("marden_smirnov_alpha: lambda1 must be nonzero");
    }
    if (std::abs(lambdas[2]) != 0.0) {
        throw std::invalid_argument("marden_smirnov_alpha: lambda2 must be zero");
    }
    return -2.0 * lambdas[0] / (static_cast<double>(n) * static_cast<double>(n) * lambdas[1]);
}

bool omega_member(Complex alpha, double r) {
    if (!(r >= 0.0)) throw std::invalid_argument("omega_member: r must be >= 0");
    const Complex denom = 1.0 - alpha;
    if (std::abs(denom) == 0.0) return false;  // pole of t = alpha/(1-alpha)
    return std::abs(alpha) <= r * std::abs(denom);
}

bool is_exceptional(const Polynomial& p, Complex a, int n) {
    if (n < 1 || p.degree() != n) {
        throw std::invalid_argument("is_exceptional: effective degree must equal n");
    }
    const Complex top = static_cast<double>(n) * p.coeff(n) - a * p.coeff(n - 1);
    return std::abs(top) <= kDegreeEpsilon * static_cast<double>(n) * p.max_coeff_modulus();
}

Polynomial apply_operator(const OperatorSpec& spec, const Polynomial& p) {
    switch (spec.kind) {
        case OperatorKind::Smirnov:
            return smirnov(p, spec.alpha, spec.n);
        case OperatorKind::ModifiedSmirnov:
            return modified_smirnov(p, spec.a, spec.n);
        case OperatorKind::Marden:
            return marden(p, spec.lambdas, spec.n);
    }
    throw std::logic_error("apply_operator: bad kind");
}

std::string to_string(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::Smirnov: return "smirnov";
        case OperatorKind::ModifiedSmirnov: return "modified_smirnov";
        case OperatorKind::Marden: return "marden";
    }
    return "?";
}

OperatorKind operator_kind_from_string(const std::string& s) {
    if (s == "smirnov") return OperatorKind::Smirnov;
    if (s == "modified_smirnov") return OperatorKind::ModifiedSmirnov;
    if (s == "marden") return OperatorKind::Marden;
    throw std::invalid_argument("unknown operator kind: " + s);
}

}  // namespace smirnovlab
