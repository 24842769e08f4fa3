#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "diskdyn/eigen.hpp"
#include "diskdyn/presets.hpp"
#include "test_support.hpp"

using namespace diskdyn;

namespace {

constexpr double pi = std::numbers::pi;

TruncatedEigenfunction example61_product(int depth, int forward_n = 12) {
    return build_truncated_eigenfunction(grand_orbit(presets::example61(0.5), DiskPoint(0.0, 0.0), forward_n, depth));
}

std::vector<cplx> random_points(std::uint64_t seed, int n, double radius = 0.95) {
    proptest::Generator gen(seed);
    std::vector<cplx> out;
    for (int k = 0; k < n; ++k) out.push_back(gen.disk_point(radius));
    return out;
}

}  // namespace

TEST(TruncatedEigenfunction, ZerosMatchTheTruncation) {
    const auto t = grand_orbit(presets::example61(0.5), DiskPoint(0.0, 0.0), 6, 5);
    const auto B = build_truncated_eigenfunction(t);
    ASSERT_EQ(B.product.zeros().size(), t.nodes.size());
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        EXPECT_EQ(B.product.zeros()[i].point, t.nodes[i].point.value());
        EXPECT_EQ(B.product.zeros()[i].multiplicity, t.nodes[i].multiplicity);
        EXPECT_EQ(B(t.nodes[i].point.value()), 0.0);
    }
    EXPECT_EQ(B.product.gamma(), cplx(1.0, 0.0));
    EXPECT_FALSE(B.tau_estimate.has_value());
}

TEST(TruncatedEigenfunction, VanishesAtZeroAndIsRealOnTheAxis) {
    const auto B = example61_product(8);
    EXPECT_EQ(B(0.0), 0.0);
    for (double x = -0.95; x <= 0.95; x += 0.05) EXPECT_LT(std::abs(B(x).imag()), 1e-10) << x;
}

TEST(TruncatedEigenfunction, SingletonIsTheMobiusFactor) {
    GrandOrbitTruncation t;
    t.nodes.push_back({DiskPoint(0.3, -0.2), 1, 0, 0, -1});
    const auto B = build_truncated_eigenfunction(t);
    for (const auto& z : random_points(3, 50)) EXPECT_LT(std::abs(B(z) - mobius_factor(cplx{0.3, -0.2}, z)), 1e-15);
    EXPECT_THROW(build_truncated_eigenfunction(GrandOrbitTruncation{}), DomainError);
}

TEST(TruncatedEigenfunction, DerivativeAlternatesAlongTheRealOrbit) {
    const auto B = example61_product(8);
    const auto f = presets::example61(0.5);
    const double z0 = 0.0;
    const double z1 = f(z0).real();
    const double h = 1e-6;
    const double d0 = (B(z0 + h) - B(z0 - h)).real() / (2.0 * h);
    const double d1 = (B(z1 + h) - B(z1 - h)).real() / (2.0 * h);
    EXPECT_LT(d0 * d1, 0.0);
}

TEST(EstimateTau, DepthSweepMatchesTheOracle) {
    const auto f = presets::example61(0.5);
    const auto ring = sample_ring(0.4, 64);
    // 50-digit reference (tests/oracles/eigen.py): geometric median and max |B(f) + B|
    const struct {
        int depth;
        std::size_t nodes;
        std::size_t used;
        double tau;
        double residual;
    } oracle[] = {{4, 208, 58, -0.74930559, 3.70567e-4},
                   {6, 832, 58, -0.88830851, 1.10871e-4},
                   {8, 3328, 58, -0.95488942, 4.13978e-5}};
    double previous_residual = 1e300;
    double previous_distance = 1e300;
    for (const auto& row : oracle) {
        const auto B = example61_product(row.depth);
        ASSERT_EQ(B.product.zeros().size(), row.nodes);
        const auto est = estimate_tau(B, f, ring);
        EXPECT_EQ(est.samples_used, row.used);
        EXPECT_NEAR(est.tau.real(), row.tau, 1e-7);
        EXPECT_NEAR(est.tau.imag(), 0.0, 1e-9);
        const double r = eigen_residual(B, f, -1.0, ring);
        EXPECT_NEAR(r, row.residual, 1e-5 * row.residual);
        EXPECT_LT(r, previous_residual);
        EXPECT_LT(std::abs(est.tau + 1.0), previous_distance);
        previous_residual = r;
        previous_distance = std::abs(est.tau + 1.0);
    }
    EXPECT_LT(previous_distance, 0.1);
}

TEST(EstimateTau, ExactSingularEigenfunction) {
    const auto f = presets::translation();
    const SingularEigenfunction u(1.0, translation_abel_handle());
    const auto est = estimate_tau(u, f, sample_ring(0.4, 32));
    EXPECT_LT(std::abs(est.tau - std::polar(1.0, 1.0)), 1e-10);
    EXPECT_LT(est.dispersion, 1e-10);
}

TEST(EstimateTau, IdentityMapGivesOne) {
    const auto B = example61_product(4);
    const auto est = estimate_tau(B, FiniteBlaschkeProduct::identity(), sample_ring(0.4, 16));
    EXPECT_LT(std::abs(est.tau - 1.0), 1e-15);
    EXPECT_LT(est.dispersion, 1e-15);
}

TEST(EstimateTau, InadmissibleSamplesAreRefused) {
    const auto f = presets::example61(0.5);
    const auto B = example61_product(4);
    std::vector<cplx> on_zeros;
    for (std::size_t k = 0; k < 20; ++k) on_zeros.push_back(B.product.zeros()[k].point);
    EXPECT_THROW(estimate_tau(B, f, on_zeros), DomainError);
    EXPECT_THROW(estimate_tau(B, f, sample_ring(0.4, 7)), DomainError);
}

TEST(EstimateTau, BeatsNaiveCandidates) {
    const auto f = presets::example61(0.5);
    const auto ring = sample_ring(0.4, 64);
    for (int depth : {4, 6, 8}) {
        auto B = example61_product(depth);
        calibrate(B, f, ring);
        ASSERT_TRUE(B.tau_estimate.has_value());
        for (cplx naive : {cplx{1.0, 0.0}, cplx{0.0, 1.0}, cplx{0.0, -1.0}}) {
            EXPECT_LE(B.residual, eigen_residual(B, f, naive, ring));
        }
    }
}

TEST(EigenResidual, TrivialCandidates) {
    const auto f = presets::example61(0.5);
    const auto ring = sample_ring(0.4, 16);
    EXPECT_EQ(eigen_residual([](cplx) { return cplx{1.0, 0.0}; }, f, 1.0, ring), 0.0);
    EXPECT_EQ(square_trick_check([](cplx) { return cplx{0.3, 0.1}; }, f, ring), 0.0);
}

TEST(SquareTrick, BoundedByTheSignResidual) {
    const auto f = presets::example61(0.5);
    const auto ring = sample_ring(0.4, 64);
    const auto B = example61_product(8);
    const double sq = square_trick_check(B, f, ring);
    // 50-digit reference: 5.64233e-8
    EXPECT_NEAR(sq, 5.64233e-8, 1e-12);
    EXPECT_LT(sq, 2.0 * eigen_residual(B, f, -1.0, ring));

    // exact sign eigenpair: psi(z) = z for f(z) = -z
    const FiniteBlaschkeProduct flip(cplx{-1.0, 0.0}, {{cplx{0.0, 0.0}, 1}});
    EXPECT_EQ(square_trick_check([](cplx z) { return z; }, flip, ring), 0.0);
}

TEST(SingularEigenfunction, TranslationFunctionalEquation) {
    const auto f = presets::translation();
    const auto pts = random_points(17, 1000);
    for (double theta : {pi / 3.0, 1.0, 2.0 * pi - 0.1}) {
        const SingularEigenfunction u(theta, translation_abel_handle());
        EXPECT_LT(eigen_residual(u, f, u.tau(), pts), 1e-10) << theta;
        for (const auto& z : pts) {
            EXPECT_LE(std::abs(u(z)), 1.0) << z;
            EXPECT_FALSE(u.unbounded_at(z));
        }
    }
}

TEST(SingularEigenfunction, ThetaZeroIsConstant) {
    const SingularEigenfunction u(0.0, translation_abel_handle());
    for (const auto& z : random_points(5, 20)) EXPECT_EQ(u(z), cplx(1.0, 0.0));
    EXPECT_EQ(u_theta(0.0, translation_abel_handle(), DiskPoint(0.4, 0.1)).value, cplx(1.0, 0.0));
    EXPECT_THROW(SingularEigenfunction(-0.1, translation_abel_handle()), DomainError);
    EXPECT_THROW(SingularEigenfunction(7.0, translation_abel_handle()), DomainError);
}

TEST(SingularEigenfunction, WarningWhenTheImageLeavesTheHalfPlane) {
    // Upper-oriented handle whose image is the lower half-plane.
    const AbelHandle wrong{translation_abel_handle().h, AbelOrientation::upper};
    const auto s = u_theta(1.0, wrong, DiskPoint(0.2, 0.0));
    EXPECT_TRUE(s.warning);
    EXPECT_GT(std::abs(s.value), 1.0);
    EXPECT_FALSE(u_theta(1.0, translation_abel_handle(), DiskPoint(0.2, 0.0)).warning);
}

TEST(SingularEigenfunction, GroupLaw) {
    const AbelHandle upper{[](cplx z) { return cplx{0.0, 1.0} * (1.0 + z) / (1.0 - z); }, AbelOrientation::upper};
    proptest::Generator gen(29);
    for (int trial = 0; trial < 200; ++trial) {
        const double t1 = gen.uniform(0.0, pi);
        const double t2 = gen.uniform(0.0, pi);
        const cplx z = gen.disk_point(0.9);
        const cplx lhs = SingularEigenfunction(t1, upper)(z) * SingularEigenfunction(t2, upper)(z);
        EXPECT_LT(std::abs(lhs - SingularEigenfunction(t1 + t2, upper)(z)), 1e-12);
    }
}

TEST(FrostmanShift, ZeroShiftIsTheIdentity) {
    const SingularEigenfunction u(1.0, translation_abel_handle());
    const auto psi = frostman_shift(u, DiskPoint(0.0, 0.0));
    for (const auto& z : random_points(9, 50)) EXPECT_EQ(psi(z), u(z));
    EXPECT_EQ(psi.lipschitz_bound(), 1.0);
}

TEST(FrostmanShift, InvarianceIsPreserved) {
    const auto f = presets::translation();
    const auto pts = random_points(11, 200);
    const SingularEigenfunction u(2.0 * pi, translation_abel_handle());
    EXPECT_EQ(eigen_residual(u, f, 1.0, pts), 0.0);
    const auto constant = [](cplx) { return cplx{0.2, 0.3}; };
    for (cplx a : {cplx{0.5, 0.0}, cplx{-0.3, 0.6}}) {
        EXPECT_EQ(eigen_residual(frostman_shift(u, DiskPoint(a)), f, 1.0, pts), 0.0);
        EXPECT_EQ(eigen_residual(frostman_shift(constant, DiskPoint(a)), f, 1.0, pts), 0.0);
    }

    const auto g = presets::example61(0.5);
    const auto ring = sample_ring(0.4, 64);
    const auto B = example61_product(8);
    const Evaluation B2 = [&](cplx z) { return B(z) * B(z); };
    const double before = eigen_residual(B2, g, 1.0, ring);
    for (cplx a : {cplx{0.5, 0.0}, cplx{0.0, -0.8}}) {
        const auto psi = frostman_shift(B2, DiskPoint(a));
        EXPECT_LE(eigen_residual(psi, g, 1.0, ring), before * psi.lipschitz_bound());
    }
}
