#include <gtest/gtest.h>

#include <cmath>

#include "diskdyn/dynamics.hpp"
#include "diskdyn/presets.hpp"
#include "test_support.hpp"

using namespace diskdyn;

namespace {

// z -> z/2: not inner, but a disk self-map with everything the algorithms need.
struct HalfScaling {
    cplx operator()(cplx z) const { return 0.5 * z; }
    cplx derivative(cplx) const { return 0.5; }
    DiskState step(const DiskState& s) const { return DiskState::at(0.5 * s.z); }
    HalfPlaneState transport(const HalfPlaneState& s) const {
        return to_halfplane(0.5 * from_halfplane(s).z, s.contact);
    }
    int degree() const { return 1; }
};

double step_formula(double z) { return (1.0 - z) * (1.0 - z) / (9.0 * z * z + 14.0 * z + 9.0); }

const FiniteBlaschkeProduct& dilation() {
    // w -> 2 w on the right half-plane
    static const FiniteBlaschkeProduct f(cplx{1.0, 0.0}, {{cplx{-1.0 / 3.0, 0.0}, 1}});
    return f;
}

}  // namespace

TEST(DenjoyWolff, ExampleFamilyIsHyperbolicAtOne) {
    for (double alpha : {0.4, 0.5, 0.6, 0.9}) {
        const auto c = classify(presets::example61(alpha));
        EXPECT_EQ(c.kind, MapKind::hyperbolic);
        EXPECT_LT(std::abs(c.dw_point - 1.0), 1e-9);
        ASSERT_TRUE(c.angular_derivative.has_value());
        EXPECT_NEAR(*c.angular_derivative, 2.0 * (1.0 - alpha) / (1.0 + alpha), 1e-6);
    }
}

TEST(DenjoyWolff, ExampleFamilyAtAlphaSixTenths) {
    const auto c = classify(presets::example61(0.6));
    EXPECT_EQ(c.kind, MapKind::hyperbolic);
    EXPECT_NEAR(*c.angular_derivative, 0.5, 1e-6);
}

TEST(DenjoyWolff, ParabolicExample) {
    const auto c = classify(presets::example62());
    EXPECT_EQ(c.kind, MapKind::parabolic);
    EXPECT_LT(std::abs(c.dw_point - 1.0), 1e-9);
    EXPECT_NEAR(*c.angular_derivative, 1.0, 1e-6);
}

TEST(DenjoyWolff, InteriorFixedPoints) {
    const auto half = denjoy_wolff(HalfScaling{});
    EXPECT_EQ(half.kind, MapKind::elliptic_interior);
    EXPECT_LT(std::abs(half.dw_point), 1e-10);
    EXPECT_FALSE(half.angular_derivative.has_value());
    EXPECT_NEAR(std::abs(half.interior_derivative - 0.5), 0.0, 1e-12);

    const auto square = classify(presets::power2());
    EXPECT_EQ(square.kind, MapKind::elliptic_interior);
    EXPECT_LT(std::abs(square.dw_point), 1e-10);
}

TEST(DenjoyWolff, EllipticAutomorphismsUseTheClosedForm) {
    const cplx gamma = std::polar(1.0, 0.4);
    const FiniteBlaschkeProduct rotation(gamma, {{0.0, 1}});
    const auto c = classify(rotation);
    EXPECT_EQ(c.kind, MapKind::elliptic_interior);
    EXPECT_LT(std::abs(c.dw_point), 1e-15);

    // m_p o rotation o m_p fixes p, since m_p is an involution for real p
    const FiniteBlaschkeProduct swap(1.0, {{cplx{0.4, 0.0}, 1}});
    const auto conjugate = compose(swap, compose(rotation, swap));
    const auto d = classify(conjugate);
    EXPECT_EQ(d.kind, MapKind::elliptic_interior);
    EXPECT_LT(std::abs(d.dw_point - 0.4), 1e-14);
    EXPECT_NEAR(std::abs(d.interior_derivative), 1.0, 1e-12);
}

TEST(DenjoyWolff, DegreeOneBoundaryCases) {
    const auto dil = classify(dilation());
    EXPECT_EQ(dil.kind, MapKind::hyperbolic);
    EXPECT_LT(std::abs(dil.dw_point - 1.0), 1e-9);
    EXPECT_NEAR(*dil.angular_derivative, 0.5, 1e-6);

    const auto shift = classify(presets::translation());
    EXPECT_EQ(shift.kind, MapKind::parabolic);
    EXPECT_LT(std::abs(shift.dw_point - 1.0), 1e-7);
}

TEST(DenjoyWolff, IdentityIsRejected) {
    EXPECT_THROW(classify(FiniteBlaschkeProduct::identity()), DomainError);
}

TEST(DenjoyWolff, RandomMapsSatisfyTheClassInvariants) {
    proptest::Generator gen(2718);
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = gen.blaschke(3, 0.9);
        const auto c = classify(f);
        if (c.kind == MapKind::elliptic_interior) {
            EXPECT_LT(std::abs(c.dw_point), 1.0);
            EXPECT_LT(std::abs(f(c.dw_point) - c.dw_point), 1e-10);
        } else {
            EXPECT_NEAR(std::abs(c.dw_point), 1.0, 1e-15);
            ASSERT_TRUE(c.angular_derivative.has_value());
            EXPECT_GT(*c.angular_derivative, 0.0);
            EXPECT_LE(*c.angular_derivative, 1.0 + 1e-6);
            if (c.kind == MapKind::parabolic) {
                EXPECT_LT(std::abs(*c.angular_derivative - 1.0), kParabolicBand);
            }
        }
    }
}

TEST(HyperbolicStep, ParabolicExampleHasZeroStep) {
    const auto f = presets::example62();
    const auto report = hyperbolic_step(f, DiskPoint(0.0, 0.0));
    EXPECT_EQ(report.verdict, StepVerdict::zero);
    ASSERT_EQ(report.sequence.size(), 10001u);
    const int disk_steps = report.halfplane_from < 0 ? 10001 : report.halfplane_from;
    cplx z{0.0, 0.0};
    for (int n = 0; n < disk_steps; ++n) {
        EXPECT_NEAR(report.sequence[n], step_formula(z.real()), 1e-12) << "n = " << n;
        z = f(z);
    }
    // 60-digit reference values (tests/oracles/orbit_merging.py)
    EXPECT_NEAR(report.sequence[1] / 0.0740740740740741, 1.0, 1e-12);
    EXPECT_NEAR(report.sequence[1000] / 0.000249043835183324, 1.0, 1e-9);
    EXPECT_NEAR(report.sequence[10000] / 2.49889692339661e-5, 1.0, 1e-9);
}

TEST(HyperbolicStep, HyperbolicExampleHasPositiveStep) {
    const auto report = hyperbolic_step(presets::example61(0.6), DiskPoint(0.0, 0.0));
    EXPECT_EQ(report.verdict, StepVerdict::positive);
    // rho(w, w / a) with a = 1/2
    EXPECT_NEAR(report.limit_estimate, 1.0 / 3.0, 1e-6);
    EXPECT_GT(report.limit_estimate, 0.0);
}

TEST(HyperbolicStep, TranslationHasConstantStep) {
    const auto f = presets::translation();
    const auto report = hyperbolic_step(f, DiskPoint(0.0, 0.0));
    EXPECT_EQ(report.verdict, StepVerdict::positive);
    // w_n = 1 + n i, so s_n = |i| / |2 + i|.
    for (std::size_t n = 0; n < report.sequence.size(); ++n) {
        EXPECT_NEAR(report.sequence[n], 1.0 / std::sqrt(5.0), 1e-12) << "n = " << n;
    }
}

TEST(HyperbolicStep, EllipticMapsAreRejected) {
    EXPECT_THROW(hyperbolic_step(presets::power2(), DiskPoint(0.1, 0.0)), DomainError);
}

TEST(HyperbolicStep, VerdictRules) {
    std::vector<double> decaying(101), stalled(101), slow(101);
    for (int n = 0; n <= 100; ++n) {
        decaying[n] = 1e-3 / (n + 1);
        stalled[n] = 0.2;
        slow[n] = 1e-3 * std::pow(n + 1.0, -0.1);
    }
    EXPECT_EQ(step_verdict(decaying), StepVerdict::zero);
    EXPECT_EQ(step_verdict(stalled), StepVerdict::positive);
    EXPECT_EQ(step_verdict(slow), StepVerdict::inconclusive);
}

TEST(HyperbolicStep, VerdictDoesNotDependOnTheBasePoint) {
    for (const auto& f : {presets::example61(0.5), presets::example62()}) {
        const auto cls = classify(f);
        const auto reference = hyperbolic_step(f, DiskPoint(0.0, 0.0), cls).verdict;
        for (const DiskPoint z0 : {DiskPoint(0.0, 0.3), DiskPoint(-0.5, 0.0)}) {
            EXPECT_EQ(hyperbolic_step(f, z0, cls).verdict, reference);
        }
    }
}

TEST(HyperbolicStep, SequenceIsNonIncreasing) {
    for (const auto& f : {presets::example61(0.5), presets::example62(), presets::translation(), dilation()}) {
        const auto cls = classify(f);
        for (const DiskPoint z0 : {DiskPoint(0.0, 0.0), DiskPoint(0.0, 0.3), DiskPoint(-0.5, 0.0)}) {
            const auto s = hyperbolic_step(f, z0, cls).sequence;
            for (std::size_t n = 1; n < s.size(); ++n) ASSERT_LE(s[n], s[n - 1] + 1e-12) << "n = " << n;
        }
    }
}

TEST(HyperbolicStep, ParabolicMapsGetADefiniteVerdict) {
    for (const auto& f : {presets::example62(), presets::translation()}) {
        const auto cls = classify(f);
        ASSERT_EQ(cls.kind, MapKind::parabolic);
        EXPECT_NE(hyperbolic_step(f, DiskPoint(0.0, 0.0), cls).verdict, StepVerdict::inconclusive);
    }
}

TEST(OrbitMerging, CoincidentOrbitsStayAtZero) {
    const auto merge = orbit_merging(presets::example62(), DiskPoint(0.2, 0.1), DiskPoint(0.2, 0.1), 500);
    ASSERT_EQ(merge.size(), 501u);
    for (double r : merge) EXPECT_EQ(r, 0.0);
}

TEST(OrbitMerging, ParabolicOrbitsMerge) {
    const auto merge = orbit_merging(presets::example62(), DiskPoint(0.0, 0.0), DiskPoint(0.0, 0.5), 100000);
    std::size_t first_below = merge.size();
    for (std::size_t n = 0; n < merge.size(); ++n) {
        if (merge[n] < 1e-3) {
            first_below = n;
            break;
        }
    }
    EXPECT_LE(first_below, 100000u);
    // 60-digit reference: first n with rho < 1e-3 is 741
    EXPECT_EQ(first_below, 741u);
    EXPECT_NEAR(merge[1000] / 0.000741443775007, 1.0, 1e-9);
    // rounding accumulated over 1e5 double-precision steps
    EXPECT_NEAR(merge[100000] / 7.42929596958e-6, 1.0, 1e-5);
    for (std::size_t n = 1; n < merge.size(); ++n) ASSERT_LE(merge[n], merge[n - 1] + 1e-12) << "n = " << n;
}

TEST(OrbitMerging, RandomMapsAreContractive) {
    proptest::Generator gen(4);
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = gen.blaschke(3);
        const auto merge = orbit_merging(f, DiskPoint(gen.disk_point(0.9)), DiskPoint(gen.disk_point(0.9)), classify(f), 200);
        for (std::size_t n = 1; n < merge.size(); ++n) ASSERT_LE(merge[n], merge[n - 1] + 1e-12);
    }
}

TEST(ExampleFamily, RealOrbitPreimagesAreNegativeAndEscalate) {
    for (double alpha : {0.4, 0.5, 0.6, 0.8}) {
        const auto f = presets::example61(alpha);
        const double a = 2.0 * (1.0 - alpha) / (1.0 + alpha);
        const auto first = preimages(f, 0.0);
        for (const auto& p : first) {
            EXPECT_LT(p.point.value().real(), 0.0);
            EXPECT_GT(julia_quotient(p.point, 1.0), 1.0 / a);
            for (const auto& q : preimages(f, p.point.value())) {
                EXPECT_GT(julia_quotient(q.point, 1.0), 1.0 / (a * a));
            }
        }
        // zeta_m: the negative preimage of z_{m+1} along the forward orbit of 0
        cplx z = f(0.0);
        for (int m = 0; m < 20; ++m) {
            const cplx next = f(z);
            for (const auto& p : preimages(f, next)) {
                if (std::abs(p.point.value() - z) > 1e-8) {
                    EXPECT_LT(p.point.value().real(), 0.0);
                }
            }
            z = next;
        }
    }
}

TEST(JuliaContainment, Examples) {
    const auto half = julia_containment_check(presets::example61(0.5), 1.0, 1.0, 5000, 1);
    EXPECT_TRUE(half.contained);
    EXPECT_NEAR(half.angular_derivative, 2.0 / 3.0, 1e-6);
    EXPECT_LE(half.max_ratio, 1.0 + 1e-9);

    const auto id = julia_containment_check(FiniteBlaschkeProduct::identity(), std::polar(1.0, 0.3), 2.0, 2000, 2);
    EXPECT_TRUE(id.contained);
    EXPECT_LE(id.max_ratio, 1.0 + 1e-12);

    const auto parabolic = julia_containment_check(presets::example62(), 1.0, 1.0, 5000, 3);
    EXPECT_TRUE(parabolic.contained);
    EXPECT_NEAR(parabolic.angular_derivative, 1.0, 1e-6);
    EXPECT_FALSE(parabolic.witness.has_value());
}

TEST(JuliaContainment, HoldsForRandomLevelsAndParameters) {
    proptest::Generator gen(31);
    for (int trial = 0; trial < 40; ++trial) {
        const auto f = presets::example61(gen.uniform(0.34, 0.95));
        const auto report = julia_containment_check(f, 1.0, gen.uniform(0.05, 5.0), 500, trial);
        EXPECT_TRUE(report.contained) << report.max_ratio;
    }
}

TEST(JuliaContainment, Validation) {
    EXPECT_THROW(julia_containment_check(presets::example62(), cplx{0.5, 0.0}, 1.0, 10, 0), DomainError);
    EXPECT_THROW(julia_containment_check(presets::example62(), 1.0, -1.0, 10, 0), DomainError);
}
