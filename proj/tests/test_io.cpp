#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "wigneroid/io.hpp"

using namespace wigneroid;
using namespace wigneroid::io;

TEST(Io, MetricRoundTrip) {
    for (const auto& m : {spacetime::MetricSpec::minkowski(), spacetime::MetricSpec::schwarzschild_kruskal(2.5)}) {
        EXPECT_TRUE(metric_from_json(json::parse(to_json(m).dump())) == m);
    }
    EXPECT_THROW(metric_from_json(json{{"kind", "desitter"}}), ParseError);
    EXPECT_THROW(metric_from_json(json{{"kind", "schwarzschild_kruskal"}}), ParseError);
    EXPECT_THROW(metric_from_json(json{{"kind", "schwarzschild_kruskal"}, {"mass", -1.0}}), BadParams);
}

TEST(Io, MetricFlag) {
    EXPECT_TRUE(parse_metric_flag("minkowski") == spacetime::MetricSpec::minkowski());
    EXPECT_TRUE(parse_metric_flag("schwarzschild:3") == spacetime::MetricSpec::schwarzschild_kruskal(3.0));
    EXPECT_TRUE(parse_metric_flag("schwarzschild") == spacetime::MetricSpec::schwarzschild_kruskal(1.0));
    EXPECT_THROW(parse_metric_flag("schwarzschild:x"), ParseError);
    EXPECT_THROW(parse_metric_flag("schwarzschild:1q"), ParseError);
    EXPECT_THROW(parse_metric_flag("kerr"), ParseError);
}

TEST(Io, ParseReals) {
    EXPECT_EQ(parse_reals("1,2.5,-3,4e-1", 4), (std::vector<double>{1, 2.5, -3, 0.4}));
    EXPECT_EQ(parse_reals(" 1, 2 ", 2), (std::vector<double>{1, 2}));
    EXPECT_THROW(parse_reals("1,2,3", 4), ParseError);
    EXPECT_THROW(parse_reals("1,,3,4", 4), ParseError);
    EXPECT_THROW(parse_reals("1,a,3,4", 4), ParseError);
    EXPECT_THROW(parse_reals("1,2x,3,4", 4), ParseError);
}

TEST(Io, MorphismRoundTripIsExact) {
    std::mt19937_64 rng(7);
    const auto spec = spacetime::MetricSpec::minkowski();
    for (int t = 0; t < 50; ++t) {
        const auto lam = groupoid::LorentzMatrix::random_restricted(rng);
        const groupoid::WignerMorphism w(
            groupoid::PoincareMorphism(spec, spacetime::ChartPoint{{1, 2, 3, 4}}, lam, spacetime::ChartPoint{{0, 0, 0, 0}}),
            {1.5, 0.2, -0.3, 0.1});
        const auto back = morphism_from_json(json::parse(to_json(w).dump()));
        EXPECT_EQ(back.lambda().matrix(), w.lambda().matrix());
        EXPECT_EQ(back.p_src().p, w.p_src().p);
        EXPECT_EQ(back.base().target().coords, w.base().target().coords);
    }
    EXPECT_THROW(morphism_from_json(json{{"src", 1}}), ParseError);
}

TEST(Io, AlgebraRoundTripAndFiles) {
    for (const auto& L : {cohomology::e2(), cohomology::su2(), cohomology::heisenberg3(), cohomology::abelian(2)}) {
        EXPECT_EQ(algebra_from_json(json::parse(to_json(L).dump())), L);
    }
    const json half{{"dim", 2}, {"c", {{{"i", 0}, {"j", 1}, {"k", 1}, {"val", "1/2"}}}}};
    EXPECT_EQ(algebra_from_json(half).c(1, 0, 1), Rational(1, 2));
    const json integer_val{{"dim", 2}, {"c", {{{"i", 0}, {"j", 1}, {"k", 1}, {"val", 3}}}}};
    EXPECT_EQ(algebra_from_json(integer_val).c(1, 1, 0), -3);
    const json float_val{{"dim", 2}, {"c", {{{"i", 0}, {"j", 1}, {"k", 1}, {"val", 0.5}}}}};
    EXPECT_THROW(algebra_from_json(float_val), ParseError);

    const std::string path = ::testing::TempDir() + "wigneroid_io_algebra.json";
    {
        std::ofstream out(path);
        out << to_json(cohomology::heisenberg3()).dump();
    }
    EXPECT_EQ(load_algebra("@" + path), cohomology::heisenberg3());
    std::remove(path.c_str());
    EXPECT_THROW(load_algebra("@" + path), ParseError);
    EXPECT_EQ(load_algebra("e2"), cohomology::e2());
}

TEST(Io, CohomologyEncoding) {
    const auto L = cohomology::e2();
    EXPECT_EQ(to_json(cohomology::h2(L), L.names()).dump(), R"j({"dim_h2":1,"generator":{"(P1,P2)":"1"}})j");
    const auto H = cohomology::heisenberg3();
    const auto j = to_json(cohomology::h2(H), H.names());
    EXPECT_EQ(j.at("dim_h2"), 2);
    EXPECT_EQ(j.at("generators").size(), 2u);
    EXPECT_EQ(to_json(cohomology::h2(cohomology::su2()), cohomology::su2().names()).at("generators"), json::array());
}

TEST(Io, LabelEncoding) {
    const auto j = to_json(mackey::RepLabel(mackey::Magnetic{2.0, 0.5}));
    EXPECT_EQ(j.at("provenance"), "groupoid_only");
    EXPECT_EQ(j.at("mu"), 2.0);
    EXPECT_EQ(to_json(mackey::RepLabel(mackey::Massive{1.0, 0.5})).at("provenance"), "shared");
    EXPECT_EQ(to_json(groupoid::OrbitClass(groupoid::MassivePlus{2.0})).dump(), R"({"m":2.0,"tag":"massive_plus"})");
}
