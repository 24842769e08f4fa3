#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>

#include "diskdyn/polynomial.hpp"
#include "test_support.hpp"

using namespace diskdyn;

namespace {

double nearest(const std::vector<cplx>& roots, cplx target) {
    double best = 1e300;
    for (const auto& r : roots) best = std::min(best, std::abs(r - target));
    return best;
}

}  // namespace

TEST(PolynomialRoots, SimpleRealRoots) {
    // (z - 1)(z - 2)(z - 3) = z^3 - 6 z^2 + 11 z - 6
    const auto roots = polynomial_roots({-6.0, 11.0, -6.0, 1.0});
    ASSERT_EQ(roots.size(), 3u);
    for (double t : {1.0, 2.0, 3.0}) EXPECT_LT(nearest(roots, t), 1e-12);
}

TEST(PolynomialRoots, RootsOfUnity) {
    Polynomial p(8, cplx{0.0, 0.0});
    p[0] = -1.0;
    p[7] = 1.0;
    const auto roots = polynomial_roots(p);
    ASSERT_EQ(roots.size(), 7u);
    for (int k = 0; k < 7; ++k) {
        EXPECT_LT(nearest(roots, std::polar(1.0, 2.0 * std::numbers::pi * k / 7.0)), 1e-13);
    }
}

TEST(PolynomialRoots, DoubleRootIsFoundToHalfPrecision) {
    // (z - 0.5 i)^2 (z + 0.25)
    const cplx a{0.0, 0.5};
    const Polynomial p = poly_multiply(poly_multiply(Polynomial{-a, 1.0}, Polynomial{-a, 1.0}), Polynomial{0.25, 1.0});
    const auto roots = polynomial_roots(p);
    ASSERT_EQ(roots.size(), 3u);
    int near_double = 0;
    for (const auto& r : roots) near_double += std::abs(r - a) < 1e-6 ? 1 : 0;
    EXPECT_EQ(near_double, 2);
    EXPECT_LT(nearest(roots, -0.25), 1e-12);
}

TEST(PolynomialRoots, ExactZeroCoefficientsGiveExactRoots) {
    const auto roots = polynomial_roots({0.0, 0.0, -4.0, 1.0, 0.0});  // z^3 - 4 z^2 with a padded zero
    ASSERT_EQ(roots.size(), 3u);
    EXPECT_EQ(std::count(roots.begin(), roots.end(), cplx{0.0, 0.0}), 2);
    EXPECT_LT(nearest(roots, 4.0), 1e-14);
}

TEST(PolynomialRoots, ZeroPolynomialIsRejected) {
    EXPECT_THROW(polynomial_roots({0.0, 0.0}), DomainError);
}

TEST(PolynomialRoots, RandomPolynomialsHaveSmallBackwardError) {
    proptest::Generator gen(314);
    for (int trial = 0; trial < 200; ++trial) {
        const int degree = gen.integer(1, 9);
        Polynomial p{1.0};
        std::vector<cplx> truth;
        for (int k = 0; k < degree; ++k) {
            truth.push_back(gen.disk_point(2.0));
            p = poly_multiply(p, Polynomial{-truth.back(), 1.0});
        }
        const auto roots = polynomial_roots(p);
        ASSERT_EQ(static_cast<int>(roots.size()), degree);
        for (const auto& r : roots) {
            EXPECT_LT(std::abs(poly_eval(p, r)), 1e-12 * detail::poly_abs_eval(p, std::abs(r)) + 1e-300);
        }
    }
}

TEST(PolynomialArithmetic, DerivativeAndHorner) {
    const Polynomial p{1.0, -2.0, 0.0, 3.0};  // 3 z^3 - 2 z + 1
    const cplx z{0.3, -1.1};
    const auto [value, slope] = poly_eval_with_derivative(p, z);
    EXPECT_LT(std::abs(value - (3.0 * z * z * z - 2.0 * z + 1.0)), 1e-14);
    EXPECT_LT(std::abs(slope - (9.0 * z * z - 2.0)), 1e-14);
    EXPECT_LT(std::abs(poly_eval(poly_derivative(p), z) - slope), 1e-14);
}
