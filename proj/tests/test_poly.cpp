#include <doctest.h>

#include <cmath>
#include <numbers>

#include "smirnovlab/poly.hpp"
#include "smirnovlab/rng.hpp"

using namespace smirnovlab;

namespace {

Polynomial random_poly(int degree, SplitMix64& rng) {
    std::vector<Complex> c(degree + 1);
    for (auto& cj : c) cj = Complex{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    c[degree] = Complex{1.0, 0.5};
    return Polynomial(std::move(c));
}

// independent term-by-term power-sum evaluation
Complex naive_eval(const Polynomial& p, Complex z) {
    Complex acc{0.0, 0.0};
    for (int j = 0; j <= p.nominal_degree(); ++j) {
        Complex zj{1.0, 0.0};
        for (int k = 0; k < j; ++k) zj *= z;
        acc += p.coeff(j) * zj;
    }
    return acc;
}

}  // namespace

TEST_CASE("eval: z^2 + 1 vanishes at i") {
    const Polynomial p({{1, 0}, {0, 0}, {1, 0}});
    CHECK(std::abs(eval(p, Complex{0, 1})) < 1e-15);
}

TEST_CASE("eval: z^3 at 2") {
    const Polynomial p = Polynomial::monomial(3);
    CHECK(eval(p, Complex{2, 0}) == Complex{8, 0});
}

TEST_CASE("eval: 2z^2 + iz + 3 at 1+i, against term-by-term oracle") {
    const Polynomial p({{3, 0}, {0, 1}, {2, 0}});
    const Complex z{1, 1};
    const Complex expected = naive_eval(p, z);  // = 2 + 5i
    CHECK(std::abs(eval(p, z) - expected) < 1e-14);
    CHECK(std::abs(expected - Complex{2, 5}) < 1e-14);
}

TEST_CASE("eval agrees with naive power sum on random polynomials") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int d = 1 + static_cast<int>(rng.index(16));
        const Polynomial p = random_poly(d, rng);
        const Complex z{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
        const Complex a = eval(p, z), b = naive_eval(p, z);
        CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)));
    }
}

TEST_CASE("derivative: z^2 + 1 -> 2z") {
    const Polynomial d = derivative(Polynomial({{1, 0}, {0, 0}, {1, 0}}));
    CHECK(d.nominal_degree() == 1);
    CHECK(d.coeff(0) == Complex{0, 0});
    CHECK(d.coeff(1) == Complex{2, 0});
}

TEST_CASE("derivative of a constant is the zero polynomial") {
    const Polynomial d = derivative(Polynomial(std::vector<Complex>{{5, 0}}));
    CHECK(d.is_zero());
}

TEST_CASE("derivative: 3z^3 - iz -> 9z^2 - i") {
    const Polynomial d = derivative(Polynomial({{0, 0}, {0, -1}, {0, 0}, {3, 0}}));
    CHECK(d.coeff(0) == Complex{0, -1});
    CHECK(d.coeff(1) == Complex{0, 0});
    CHECK(d.coeff(2) == Complex{9, 0});
}

TEST_CASE("derivative is coefficientwise linear") {
    SplitMix64 rng(11);
    const Polynomial p = random_poly(6, rng);
    const Polynomial q = random_poly(6, rng);
    const Polynomial lhs = derivative(add(p, q));
    const Polynomial rhs = add(derivative(p), derivative(q));
    for (int j = 0; j <= 5; ++j) {
        CHECK(std::abs(lhs.coeff(j) - rhs.coeff(j)) <=
              1e-14 * std::max(1.0, std::abs(rhs.coeff(j))));
    }
}

TEST_CASE("dilate: z^n by R=2 scales the top coefficient by 2^n") {
    const Polynomial d = dilate(Polynomial::monomial(5), 2.0);
    CHECK(d.coeff(5) == Complex{32, 0});
}

TEST_CASE("dilate: R=1 is the identity") {
    SplitMix64 rng(3);
    const Polynomial p = random_poly(7, rng);
    const Polynomial d = dilate(p, 1.0);
    for (int j = 0; j <= 7; ++j) CHECK(d.coeff(j) == p.coeff(j));
}

TEST_CASE("dilate satisfies the eval identity at random points") {
    const Polynomial p({{1, 0}, {1, 0}, {1, 0}});  // z^2 + z + 1
    const double R = 1.5;
    const Polynomial d = dilate(p, R);
    SplitMix64 rng(5);
    for (int i = 0; i < 10; ++i) {
        const Complex z{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
        CHECK(std::abs(eval(d, z) - eval(p, R * z)) < 1e-12);
    }
}

TEST_CASE("dilate composes: dilate(dilate(p,R),S) = dilate(p,RS)") {
    SplitMix64 rng(17);
    const Polynomial p = random_poly(9, rng);
    const Polynomial a = dilate(dilate(p, 1.7), 2.3);
    const Polynomial b = dilate(p, 1.7 * 2.3);
    for (int j = 0; j <= 9; ++j) {
        CHECK(std::abs(a.coeff(j) - b.coeff(j)) <=
              1e-12 * std::max(1.0, std::abs(b.coeff(j))));
    }
}

TEST_CASE("dilate rejects nonpositive R") {
    CHECK_THROWS(dilate(Polynomial::monomial(1), 0.0));
    CHECK_THROWS(dilate(Polynomial::monomial(1), -2.0));
}

TEST_CASE("conjugate_reciprocal: 2z^2 + iz + 3 -> 3z^2 - iz + 2") {
    const Polynomial q = conjugate_reciprocal(Polynomial({{3, 0}, {0, 1}, {2, 0}}), 2);
    CHECK(q.coeff(0) == Complex{2, 0});
    CHECK(q.coeff(1) == Complex{0, -1});
    CHECK(q.coeff(2) == Complex{3, 0});
}

TEST_CASE("conjugate_reciprocal: z^n -> 1") {
    const Polynomial q = conjugate_reciprocal(Polynomial::monomial(6), 6);
    CHECK(q.degree() == 0);
    CHECK(q.coeff(0) == Complex{1, 0});
}

TEST_CASE("conjugate_reciprocal preserves modulus on the unit circle") {
    SplitMix64 rng(23);
    const Polynomial p = random_poly(8, rng);
    const Polynomial q = conjugate_reciprocal(p, 8);
    for (int k = 0; k < 64; ++k) {
        const double t = 2.0 * std::numbers::pi * k / 64.0;
        const Complex z{std::cos(t), std::sin(t)};
        CHECK(std::abs(std::abs(eval(q, z)) - std::abs(eval(p, z))) < 1e-12);
    }
}

TEST_CASE("conjugate_reciprocal is an involution on exact degree-n input") {
    SplitMix64 rng(29);
    const Polynomial p = random_poly(10, rng);
    const Polynomial back = conjugate_reciprocal(conjugate_reciprocal(p, 10), 10);
    for (int j = 0; j <= 10; ++j) CHECK(back.coeff(j) == p.coeff(j));
}

TEST_CASE("conjugate_reciprocal rejects degree overflow") {
    CHECK_THROWS(conjugate_reciprocal(Polynomial::monomial(4), 3));
}

TEST_CASE("add and scale basics") {
    const Polynomial s = add(Polynomial::monomial(2), Polynomial(std::vector<Complex>{{1, 0}}));
    CHECK(s.coeff(0) == Complex{1, 0});
    CHECK(s.coeff(2) == Complex{1, 0});
    CHECK(scale(Polynomial({{1, 0}, {1, 0}}), Complex{0, 0}).is_zero());
}

TEST_CASE("effective degree uses the relative threshold") {
    std::vector<Complex> c(6, Complex{0, 0});
    c[0] = {1, 0};
    c[3] = {1, 0};
    c[5] = {1e-20, 0};  // below 1e-12 relative to the max coefficient
    CHECK(Polynomial(std::move(c)).degree() == 3);
}

TEST_CASE("non-finite coefficients are rejected") {
    CHECK_THROWS(Polynomial(std::vector<Complex>{{std::nan(""), 0}}));
    CHECK_THROWS(Polynomial({{1, 0}, {INFINITY, 0}}));
}

TEST_CASE("from_roots expands the product") {
    // (z - 2)(z - 3) = z^2 - 5z + 6
    const Polynomial p = Polynomial::from_roots({{2, 0}, {3, 0}});
    CHECK(std::abs(p.coeff(0) - Complex{6, 0}) < 1e-14);
    CHECK(std::abs(p.coeff(1) - Complex{-5, 0}) < 1e-14);
    CHECK(std::abs(p.coeff(2) - Complex{1, 0}) < 1e-14);
}
