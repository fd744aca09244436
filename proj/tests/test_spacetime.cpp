#include <gtest/gtest.h>

#include <boost/math/special_functions/lambert_w.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "wigneroid/spacetime.hpp"

using namespace wigneroid;
using namespace wigneroid::spacetime;

namespace {

// UV = (1 - x) e^x  <=>  (x - 1) e^{x - 1} = -UV / e, so r = 2M (1 + W0(-UV/e)).
double lambert_radius(double m, double uv) { return 2.0 * m * (1.0 + boost::math::lambert_w0(-uv / std::numbers::e)); }

// Plain bisection on (1 - x) e^x = uv over x in (0, 50).
double bisection_radius(double m, double uv) {
    double lo = 1e-300;
    double hi = 50.0;
    for (int i = 0; i < 2000; ++i) {
        const double mid = 0.5 * (lo + hi);
        if ((1.0 - mid) * std::exp(mid) > uv) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 2.0 * m * 0.5 * (lo + hi);
}

}  // namespace

TEST(KruskalRadius, HorizonIsExactlyTwoM) {
    EXPECT_EQ(kruskal_radius(1.0, 0.0, 5.0), 2.0);
    EXPECT_EQ(kruskal_radius(3.5, -2.0, 0.0), 7.0);
    EXPECT_EQ(kruskal_radius(0.25, 0.0, 0.0), 0.5);
}

TEST(KruskalRadius, AgreesWithLambertW) {
    for (double m : {0.5, 1.0, 7.0}) {
        for (double uv : {0.999, 0.9, 0.5, 0.1, 1e-8, -1e-8, -0.5, -1.0, -10.0, -1e3, -1e6}) {
            const double r = kruskal_radius(m, uv, 1.0);
            EXPECT_NEAR(r, lambert_radius(m, uv), 1e-12 * r) << "m=" << m << " uv=" << uv;
        }
    }
}

TEST(KruskalRadius, AgreesWithBisection) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-4.0, 0.99);
    for (int i = 0; i < 200; ++i) {
        const double uv = u(rng);
        EXPECT_NEAR(kruskal_radius(1.0, uv, 1.0), bisection_radius(1.0, uv), 1e-11);
    }
}

TEST(KruskalRadius, FrozenValues) {
    // r = 2M(1 + W0(-UV/e)), evaluated independently.
    EXPECT_NEAR(kruskal_radius(1.0, -1.0, 1.0), 2.5569290855221480, 1e-13);
    EXPECT_NEAR(kruskal_radius(1.0, 0.5, 1.0), 1.5360780940269312, 1e-13);
}

TEST(KruskalRadius, RejectsSingularityAndBadMass) {
    EXPECT_THROW(kruskal_radius(1.0, 1.0, 1.0), ChartDomainError);
    EXPECT_THROW(kruskal_radius(1.0, 2.0, 3.0), ChartDomainError);
    EXPECT_THROW(kruskal_radius(0.0, 0.1, 0.1), BadParams);
    EXPECT_THROW(MetricSpec::schwarzschild_kruskal(-1.0), BadParams);
}

TEST(KruskalRadius, InvertsPointAtRadius) {
    for (double r : {0.1, 0.5, 1.9, 2.0, 2.1, 6.0, 19.9}) {
        for (double boost : {-1.5, 0.0, 2.0}) {
            const auto x = kruskal_point_at_radius(1.0, r, boost, 1.0, 0.0);
            EXPECT_NEAR(kruskal_radius(1.0, x[0], x[1]), r, 1e-12 * r);
        }
    }
}

TEST(Metric, KruskalComponents) {
    // r = 2M: g_UV = -16 M^2 e^{-1}, g_thth = -r^2.
    const auto spec = MetricSpec::schwarzschild_kruskal(1.0);
    const Mat4 g = metric_at(spec, ChartPoint{{0.0, 0.3, std::numbers::pi / 2, 0.0}});
    EXPECT_NEAR(g(0, 1), -16.0 * std::exp(-1.0), 1e-14);
    EXPECT_EQ(g(0, 1), g(1, 0));
    EXPECT_EQ(g(0, 0), 0.0);
    EXPECT_NEAR(g(2, 2), -4.0, 1e-15);
    EXPECT_NEAR(g(3, 3), -4.0, 1e-15);
}

TEST(Metric, MinkowskiIsEta) {
    const Mat4 g = metric_at(MetricSpec::minkowski(), ChartPoint{{3.0, -1.0, 2.0, 5.0}});
    EXPECT_EQ(g, minkowski_eta());
    EXPECT_EQ(g(0, 0), 1.0);
    EXPECT_EQ(g(1, 1), -1.0);
}

TEST(ChartDomain, KruskalRestrictions) {
    const auto spec = MetricSpec::schwarzschild_kruskal(1.0);
    EXPECT_THROW(check_chart_point(spec, ChartPoint{{1.0, 1.0, 1.0, 0.0}}), ChartDomainError);
    EXPECT_THROW(check_chart_point(spec, ChartPoint{{0.1, 0.1, 0.0, 0.0}}), ChartDomainError);
    EXPECT_THROW(check_chart_point(spec, ChartPoint{{0.1, 0.1, std::numbers::pi, 0.0}}), ChartDomainError);
    EXPECT_THROW(check_chart_point(spec, ChartPoint{{NAN, 0.1, 1.0, 0.0}}), ChartDomainError);
    EXPECT_NO_THROW(check_chart_point(spec, ChartPoint{{0.9, 1.0, 1.0, 0.0}}));
    EXPECT_THROW(check_chart_point(MetricSpec::minkowski(), ChartPoint{{INFINITY, 0, 0, 0}}), ChartDomainError);
}

TEST(Tetrad, KruskalTetradIsOrthonormal) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> r(0.1, 20.0), b(-2.0, 2.0), th(0.05, 3.09);
    for (double m : {0.5, 1.0, 4.0}) {
        const auto spec = MetricSpec::schwarzschild_kruskal(m);
        for (int i = 0; i < 200; ++i) {
            const auto x = kruskal_point_at_radius(m, m * r(rng), b(rng), th(rng), 0.3);
            EXPECT_LT(tetrad_residual(metric_at(spec, x), tetrad_at(spec, x)), 1e-10);
        }
    }
}

TEST(Tetrad, TimelikeLegIsFutureDirected) {
    // e_0 = A (d_V - d_U): positive V component.
    const auto spec = MetricSpec::schwarzschild_kruskal(1.0);
    const auto e = tetrad_at(spec, kruskal_point_at_radius(1.0, 5.0, 0.2, 1.0, 0.0)).e;
    EXPECT_GT(e(1, 0), 0.0);
    const Mat4 g = metric_at(spec, kruskal_point_at_radius(1.0, 5.0, 0.2, 1.0, 0.0));
    EXPECT_NEAR(e.col(0).dot(g * e.col(0)), 1.0, 1e-12);
}

TEST(Tetrad, MinkowskiIdentity) {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> n(0.0, 10.0);
    for (int i = 0; i < 50; ++i) {
        const ChartPoint x{{n(rng), n(rng), n(rng), n(rng)}};
        const auto spec = MetricSpec::minkowski();
        EXPECT_EQ(tetrad_at(spec, x).e, Mat4::Identity());
        EXPECT_EQ(tetrad_residual(metric_at(spec, x), tetrad_at(spec, x)), 0.0);
    }
}

TEST(Tetrad, GramSchmidtOnGenericMetrics) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-0.3, 0.3);
    for (int i = 0; i < 100; ++i) {
        // Congruent to eta by a random near-identity frame change.
        Mat4 l = Mat4::Identity();
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) l(a, b) += u(rng);
        const Mat4 g = l.transpose() * minkowski_eta() * l;
        EXPECT_LT(tetrad_residual(g, gram_schmidt_tetrad(g)), 1e-10);
    }
    const auto spec = MetricSpec::schwarzschild_kruskal(1.0);
    const Mat4 g = metric_at(spec, kruskal_point_at_radius(1.0, 3.0, 0.4, 1.2, 0.0));
    EXPECT_LT(tetrad_residual(g, gram_schmidt_tetrad(g)), 1e-10);
}

TEST(Tetrad, GramSchmidtRejectsWrongSignature) {
    EXPECT_THROW(gram_schmidt_tetrad(-Mat4::Identity()), ChartDomainError);
    EXPECT_THROW(gram_schmidt_tetrad(Mat4::Identity()), ChartDomainError);
}

TEST(Covector, PSquared) {
    EXPECT_EQ(p_squared(TetradCovector(2, 0, 0, 0)), 4.0);
    EXPECT_EQ(p_squared(TetradCovector(1, 0, 0, 1)), 0.0);
    EXPECT_EQ(p_squared(TetradCovector(0, 1, 2, 2)), -9.0);
}
