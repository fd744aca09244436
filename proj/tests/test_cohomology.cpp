#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wigneroid/cohomology.hpp"

using namespace wigneroid;
using namespace wigneroid::cohomology;

namespace {

LieAlgebra oscillator_algebra() {
    return LieAlgebra::from_entries(4, {{0, 1, 2, 1}, {0, 2, 1, -1}, {1, 2, 3, 1}}, {"J", "P1", "P2", "E"});
}

LieAlgebra sl2() { return LieAlgebra::from_entries(3, {{0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1}}, {"H", "E", "F"}); }

}  // namespace

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
    EXPECT_EQ(parse_rational("-7"), Rational(-7));
    EXPECT_EQ(parse_rational("+2/4"), Rational(1, 2));
    EXPECT_EQ(to_string(Rational(-4, 6)), "-2/3");
    EXPECT_EQ(to_string(Rational(5)), "5");
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational("abc"), ParseError);
    EXPECT_THROW(parse_rational(""), ParseError);
    EXPECT_THROW(parse_rational("1.5"), ParseError);
}

TEST(RationalLinalg, RankAndNullspace) {
    QMatrix m = QMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
    EXPECT_EQ(rank(m), 2);
    const auto ns = nullspace(m);
    ASSERT_EQ(ns.size(), 1u);
    // (1,2,3).v = 0 and (1,0,1).v = 0.
    EXPECT_EQ(ns[0][0] + 2 * ns[0][1] + 3 * ns[0][2], 0);
    EXPECT_EQ(ns[0][0] + ns[0][2], 0);
    EXPECT_EQ(nullspace(QMatrix::from_rows({}, 3)).size(), 3u);
}

TEST(LieAlgebra, AntisymmetryEnforced) {
    const auto L = e2();
    EXPECT_EQ(L.c(2, 0, 1), 1);
    EXPECT_EQ(L.c(2, 1, 0), -1);
    EXPECT_EQ(L.c(1, 0, 2), -1);
    EXPECT_THROW(LieAlgebra::from_entries(2, {{0, 0, 1, 1}}), BadParams);
    EXPECT_THROW(LieAlgebra::from_entries(2, {{0, 1, 1, 1}, {0, 1, 1, 2}}), BadParams);
    EXPECT_THROW(LieAlgebra::from_entries(2, {{0, 1, 1, 1}, {1, 0, 1, 1}}), BadParams);
    EXPECT_THROW(LieAlgebra::from_entries(2, {{0, 5, 1, 1}}), BadParams);
    EXPECT_THROW(LieAlgebra(0), BadParams);
}

TEST(LieAlgebra, Presets) {
    EXPECT_EQ(preset("e2"), e2());
    EXPECT_EQ(preset("abelian:4").dim(), 4);
    EXPECT_TRUE(preset("abelian:4").entries().empty());
    EXPECT_THROW(preset("abelian:x"), ParseError);
    EXPECT_THROW(preset("abelian:0"), ParseError);
    EXPECT_THROW(preset("so(3)"), ParseError);
    EXPECT_EQ(e2().names(), (std::vector<std::string>{"J", "P1", "P2"}));
}

TEST(Jacobi, PresetsSatisfyIt) {
    for (const auto& L : {e2(), su2(), heisenberg3(), abelian(3), oscillator_algebra(), sl2()}) {
        EXPECT_FALSE(check_jacobi(L).has_value());
        EXPECT_TRUE(oracle::jacobi_holds(L));
    }
}

TEST(Jacobi, SuSignFlipIsStillALieAlgebra) {
    // Flipping the sign of one su(2) bracket gives sl(2, R), not a Jacobi violation.
    const auto L = LieAlgebra::from_entries(3, {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, -1}});
    EXPECT_FALSE(check_jacobi(L).has_value());
    EXPECT_EQ(h2(L).dim_h2, 0);
}

TEST(Jacobi, ViolationDetected) {
    // [X0,X1] = X2, [X0,X2] = X0: J(X0,X1,X2) != 0.
    const auto L = LieAlgebra::from_entries(3, {{0, 1, 2, 1}, {0, 2, 0, 1}});
    EXPECT_TRUE(check_jacobi(L).has_value());
    EXPECT_FALSE(oracle::jacobi_holds(L));
    EXPECT_THROW(h2(L), JacobiError);
}

TEST(Differentials, D2AfterD1Vanishes) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> d(-5, 5);
    for (const auto& L : {e2(), su2(), heisenberg3(), oscillator_algebra(), sl2()}) {
        for (int t = 0; t < 10; ++t) {
            QVector a(L.dim());
            for (auto& v : a) v = Rational(d(rng), 1 + std::abs(d(rng)));
            for (int s1 : {1, -1})
                for (int s2 : {1, -1}) EXPECT_TRUE(d2(L, d1(L, a, {s1, s2}), {s1, s2}).is_zero());
        }
    }
}

TEST(Differentials, E2Explicit) {
    // d1(J*) (P1,P2) = -J*([P1,P2]) = 0;  d1(P2*)(J,P1) = -1.
    QVector a{0, 0, 1};
    const auto w = d1(e2(), a);
    EXPECT_EQ(w(0, 1), -1);
    EXPECT_EQ(w(1, 2), 0);
    TwoCochain omega(3);
    omega.set(1, 2, 1);
    EXPECT_TRUE(d2(e2(), omega).is_zero());
    TwoCochain jp(3);
    jp.set(0, 1, 1);
    EXPECT_TRUE(d2(e2(), jp).is_zero());
}

TEST(H2, E2GeneratorNormalized) {
    const auto r = h2(e2());
    EXPECT_EQ(r.dim_h2, 1);
    EXPECT_EQ(r.dim_cocycles, 3);
    EXPECT_EQ(r.dim_coboundaries, 2);
    ASSERT_EQ(r.basis.size(), 1u);
    const auto& w = r.basis[0];
    EXPECT_EQ(w(1, 2), 1);
    EXPECT_EQ(w(2, 1), -1);
    EXPECT_EQ(w(0, 1), 0);
    EXPECT_EQ(w(0, 2), 0);
}

TEST(H2, KnownDimensions) {
    EXPECT_EQ(h2(su2()).dim_h2, 0);
    EXPECT_EQ(h2(sl2()).dim_h2, 0);
    EXPECT_EQ(h2(heisenberg3()).dim_h2, 2);
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(h2(abelian(n)).dim_h2, n * (n - 1) / 2) << n;
    // Kuenneth: H2(g + R) = H2(g) + H1(g).
    EXPECT_EQ(h2(oracle::plus_line(e2())).dim_h2, 2);
    EXPECT_EQ(h2(oracle::plus_line(su2())).dim_h2, 0);
    EXPECT_EQ(h2(oracle::plus_line(heisenberg3())).dim_h2, 4);
}

TEST(H2, ConventionIndependent) {
    for (const auto& L : {e2(), su2(), heisenberg3(), oscillator_algebra()}) {
        const int base = h2(L).dim_h2;
        for (int s1 : {1, -1})
            for (int s2 : {1, -1}) EXPECT_EQ(h2(L, {s1, s2}).dim_h2, base);
    }
}

TEST(H2, RepresentativesAreClosedAndIndependent) {
    for (const auto& L : {e2(), heisenberg3(), abelian(4), oscillator_algebra(), oracle::plus_line(e2())}) {
        const auto r = h2(L);
        for (const auto& w : r.basis) EXPECT_TRUE(d2(L, w).is_zero());
        // Basis plus coboundaries must have full rank dim_h2 + dim_coboundaries.
        std::vector<QVector> rows;
        for (const auto& w : r.basis) rows.push_back(detail::to_pair_coords(w));
        for (int k = 0; k < L.dim(); ++k) {
            QVector a(L.dim());
            a[k] = 1;
            rows.push_back(detail::to_pair_coords(d1(L, a)));
        }
        const int m2 = L.dim() * (L.dim() - 1) / 2;
        EXPECT_EQ(rank(QMatrix::from_rows(rows, m2)), r.dim_h2 + r.dim_coboundaries);
    }
}

TEST(H2, AgreesWithDenseOracleOnRandomAlgebras) {
    std::mt19937_64 rng(2024);
    const std::vector<LieAlgebra> bases{oracle::plus_line(e2()), oracle::plus_line(su2()),
                                        oracle::plus_line(heisenberg3()), oscillator_algebra(),
                                        oracle::plus_line(sl2()), abelian(4)};
    int tested = 0;
    for (int t = 0; t < 30; ++t) {
        const auto L = oracle::semidirect(oracle::random_matrix(rng, 3, -2, 2));
        ASSERT_TRUE(oracle::jacobi_holds(L));
        EXPECT_EQ(h2(L).dim_h2, oracle::h2_dimension(L));
        ++tested;
    }
    for (int t = 0; t < 30; ++t) {
        const auto& base = bases[t % bases.size()];
        const auto L = oracle::change_basis(base, oracle::random_invertible(rng, 4));
        ASSERT_TRUE(oracle::jacobi_holds(L));
        const int expected = oracle::h2_dimension(L);
        EXPECT_EQ(h2(L).dim_h2, expected);
        EXPECT_EQ(expected, oracle::h2_dimension(base));
        ++tested;
    }
    EXPECT_EQ(tested, 60);
}

TEST(H2, OracleFrozenValues) {
    EXPECT_EQ(oracle::h2_dimension(e2()), 1);
    EXPECT_EQ(oracle::h2_dimension(su2()), 0);
    EXPECT_EQ(oracle::h2_dimension(heisenberg3()), 2);
    EXPECT_EQ(oracle::h2_dimension(abelian(5)), 10);
    EXPECT_EQ(oracle::h2_dimension(oracle::plus_line(e2())), 2);
}

TEST(Extension, OscillatorAlgebraFromE2) {
    const auto r = h2(e2());
    const auto ext = central_extension(e2(), r.basis);
    EXPECT_EQ(ext.dim(), 4);
    EXPECT_EQ(ext.names(), (std::vector<std::string>{"J", "P1", "P2", "E"}));
    EXPECT_EQ(ext, oscillator_algebra());
    EXPECT_FALSE(check_jacobi(ext).has_value());
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) EXPECT_EQ(ext.c(k, 3, i), 0);
}

TEST(Extension, MultipleCocyclesAndJacobi) {
    const auto r = h2(abelian(3));
    const auto ext = central_extension(abelian(3), r.basis);
    EXPECT_EQ(ext.dim(), 6);
    EXPECT_EQ(ext.names()[3], "E1");
    EXPECT_FALSE(check_jacobi(ext).has_value());
}

TEST(Extension, RejectsNonClosed) {
    // w(J, E) = 1 on the oscillator algebra: dw(J, P1, P2) = -w([P1, P2], J) = 1.
    TwoCochain w(4);
    w.set(0, 3, 1);
    EXPECT_FALSE(d2(oscillator_algebra(), w).is_zero());
    EXPECT_THROW(central_extension(oscillator_algebra(), {w}), NotClosedError);
    EXPECT_THROW(central_extension(e2(), {TwoCochain(4)}), BadParams);
}
