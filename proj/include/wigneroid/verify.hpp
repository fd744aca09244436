#pragma once

// Numerical witness suite behind `wigneroid verify`: each check reports its
// worst residual against a fixed tolerance.

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wigneroid/cohomology.hpp"
#include "wigneroid/covering.hpp"
#include "wigneroid/groupoid.hpp"
#include "wigneroid/repcheck.hpp"
#include "wigneroid/spacetime.hpp"

namespace wigneroid::verify {

struct CheckResult {
    std::string check;
    bool pass = false;
    double residual = 0.0;
    double tolerance = 0.0;
};

struct Options {
    std::uint64_t seed = 20240601;
    int trunc = 32;
    int grid = 12;
    double max_spin = 1.5;
    int samples = 1000;
    std::vector<double> mus{1.0, -3.0, 0.5};
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"geometry", "groupoid", "cohomology", "covering",
                                                "svn",      "circle",   "spin",       "induction"};
    return names;
}

namespace detail {

inline std::string num(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

inline CheckResult make(std::string name, double residual, double tol) {
    return {std::move(name), residual <= tol, residual, tol};
}

inline void geometry(const Options& o, std::vector<CheckResult>& out) {
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> radius(0.1, 20.0), boost(-2.0, 2.0), theta(0.05, 3.09), phi(0.0, 6.28);
    const auto spec = spacetime::MetricSpec::schwarzschild_kruskal(1.0);
    double tetrad = 0.0;
    double root = 0.0;
    for (int i = 0; i < o.samples; ++i) {
        const auto x = spacetime::kruskal_point_at_radius(1.0, radius(rng), boost(rng), theta(rng), phi(rng));
        tetrad = std::max(tetrad, spacetime::tetrad_residual(spacetime::metric_at(spec, x), spacetime::tetrad_at(spec, x)));
        const double r = spacetime::kruskal_radius(1.0, x[0], x[1]);
        const double uv = x[0] * x[1];
        root = std::max(root, std::abs(spacetime::detail::kruskal_product(r / 2.0) - uv) / std::max(1.0, std::abs(uv)));
    }
    out.push_back(make("geometry.tetrad_congruence", tetrad, 1e-10));
    out.push_back(make("geometry.kruskal_radius_residual", root, 1e-12));
    out.push_back(make("geometry.horizon_radius", std::abs(spacetime::kruskal_radius(1.0, 0.0, 3.0) - 2.0), 0.0));
}

inline void groupoid_checks(const Options& o, std::vector<CheckResult>& out) {
    using namespace groupoid;
    std::mt19937_64 rng(o.seed + 1);
    std::normal_distribution<double> gauss;
    const auto spec = spacetime::MetricSpec::minkowski();
    double assoc = 0.0;
    double invariance = 0.0;
    for (int i = 0; i < o.samples; ++i) {
        const TetradCovector p(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
        const spacetime::ChartPoint x0{{gauss(rng), gauss(rng), gauss(rng), gauss(rng)}};
        const spacetime::ChartPoint x1{{gauss(rng), gauss(rng), gauss(rng), gauss(rng)}};
        const spacetime::ChartPoint x2{{gauss(rng), gauss(rng), gauss(rng), gauss(rng)}};
        const spacetime::ChartPoint x3{{gauss(rng), gauss(rng), gauss(rng), gauss(rng)}};
        const WignerMorphism a(PoincareMorphism(spec, x1, LorentzMatrix::random_restricted(rng), x0), p);
        const WignerMorphism b(PoincareMorphism(spec, x2, LorentzMatrix::random_restricted(rng), x1), a.p_tgt());
        const WignerMorphism c(PoincareMorphism(spec, x3, LorentzMatrix::random_restricted(rng), x2), b.p_tgt());
        const auto left = compose(compose(c, b), a);
        const auto right = compose(c, compose(b, a));
        const double scale = std::max(1.0, left.lambda().matrix().norm());
        assoc = std::max(assoc, (left.lambda().matrix() - right.lambda().matrix()).norm() / scale);
        const double p2 = spacetime::p_squared(p);
        invariance = std::max(invariance, std::abs(spacetime::p_squared(left.p_tgt()) - p2) /
                                              std::max(1.0, left.p_tgt().p.squaredNorm()));
    }
    out.push_back(make("groupoid.associativity", assoc, 1e-10));
    out.push_back(make("groupoid.p2_invariance", invariance, 1e-10));
}

inline void cohomology_checks(std::vector<CheckResult>& out) {
    const auto r = cohomology::h2(cohomology::e2());
    cohomology::TwoCochain expected(3);
    expected.set(1, 2, 1);
    const bool ok = r.dim_h2 == 1 && r.basis.front() == expected;
    out.push_back(make("cohomology.h2_e2", ok ? 0.0 : 1.0, 0.0));
    const auto ext = cohomology::central_extension(cohomology::e2(), r.basis);
    out.push_back(make("cohomology.extension_jacobi", cohomology::check_jacobi(ext) ? 1.0 : 0.0, 0.0));
    out.push_back(make("cohomology.h2_su2", cohomology::h2(cohomology::su2()).dim_h2 == 0 ? 0.0 : 1.0, 0.0));
}

inline void covering_checks(const Options& o, std::vector<CheckResult>& out) {
    using namespace covering;
    std::mt19937_64 rng(o.seed + 2);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    auto random = [&] { return OscElement(u(rng), u(rng), u(rng), u(rng)); };
    double assoc = 0.0;
    double inv = 0.0;
    double hom = 0.0;
    double normal = 0.0;
    for (int i = 0; i < o.samples; ++i) {
        const auto g = random(), h = random(), k = random();
        assoc = std::max(assoc, distance(osc_mul(osc_mul(g, h), k), osc_mul(g, osc_mul(h, k))));
        inv = std::max(inv, distance(osc_mul(g, osc_inv(g)), OscElement::identity()));
        hom = std::max(hom, e2_distance(project(osc_mul(g, h)), e2_mul(project(g), project(h))));
        normal = std::max(normal, std::abs(conjugate_heisenberg(g, OscElement(h.s, h.a, 0.0)).phi));
    }
    out.push_back(make("covering.associativity", assoc, 1e-12));
    out.push_back(make("covering.inverse", inv, 1e-12));
    out.push_back(make("covering.projection_homomorphism", hom, 1e-12));
    out.push_back(make("covering.heisenberg_normality", normal, 1e-12));
}

inline void svn_checks(const Options& o, std::vector<CheckResult>& out) {
    for (double mu : o.mus) {
        const auto r = repcheck::build_svn(mu, o.trunc);
        const repcheck::CMat comm = r.P1 * r.P2 - r.P2 * r.P1;
        const std::string tag = "svn[mu=" + num(mu) + "]";
        out.push_back(make(tag + ".commutator_defect", (comm - repcheck::svn_expected_commutator(r)).norm(), 1e-12));
        double spectrum = 0.0;
        for (int n = 0; n + 1 < r.N; ++n) spectrum = std::max(spectrum, std::abs(r.J(n, n) - (n + 0.5)));
        out.push_back(make(tag + ".oscillator_spectrum", spectrum, 1e-9));
    }
}

inline void circle_checks(const Options& o, std::vector<CheckResult>& out) {
    std::mt19937_64 rng(o.seed + 3);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (double rho : {1.0, 5.0}) {
        for (double phi0 : {0.0, 0.3}) {
            const repcheck::CircleRep rep(o.grid, rho, phi0);
            double unitary = 0.0;
            double covariance = 0.0;
            for (int t = 0; t < 100; ++t) {
                const Eigen::Vector2d a(u(rng), u(rng));
                const auto ta = repcheck::circle_translation(rep, a);
                unitary = std::max(unitary, repcheck::unitarity_residual(ta));
                for (int j = 0; j < rep.M; ++j) {
                    const auto r = repcheck::circle_rotation(rep, j);
                    const Eigen::Vector2d ra = covering::rotation2(2.0 * std::numbers::pi * j / rep.M) * a;
                    covariance = std::max(covariance,
                                          (r * ta * r.adjoint() - repcheck::circle_translation(rep, ra)).norm());
                    if (t == 0) unitary = std::max(unitary, repcheck::unitarity_residual(r));
                }
            }
            const std::string tag = "circle[rho=" + num(rho) + ",phi0=" + num(phi0) + "]";
            out.push_back(make(tag + ".unitarity", unitary, 1e-13));
            out.push_back(make(tag + ".covariance", covariance, 1e-13));
            const repcheck::CMat full = repcheck::circle_rotation(rep, rep.M);
            const repcheck::CMat expected =
                std::polar(1.0, 2.0 * std::numbers::pi * phi0) * repcheck::CMat::Identity(rep.M, rep.M);
            out.push_back(make(tag + ".stabilizer_character", (full - expected).norm(), 0.0));
        }
    }
}

inline void spin_checks(const Options& o, std::vector<CheckResult>& out) {
    for (double s = 0.0; s <= o.max_spin + 1e-12; s += 0.5) {
        const auto rep = repcheck::build_spin(s);
        const repcheck::CMat comm = rep.Jx * rep.Jy - rep.Jy * rep.Jx - repcheck::I_unit * rep.Jz;
        const repcheck::CMat cas = rep.Jx * rep.Jx + rep.Jy * rep.Jy + rep.Jz * rep.Jz -
                                   s * (s + 1.0) * repcheck::CMat::Identity(rep.dim(), rep.dim());
        const repcheck::CMat turn = repcheck::spin_rotation(rep, Eigen::Vector3d(1.0, 2.0, 2.0), 2.0 * std::numbers::pi);
        const double sign = std::lround(2.0 * s) % 2 == 0 ? 1.0 : -1.0;
        const std::string tag = "spin[s=" + num(s) + "]";
        out.push_back(make(tag + ".commutator", comm.norm(), 1e-12));
        out.push_back(make(tag + ".casimir", cas.norm(), 1e-12));
        out.push_back(make(tag + ".two_pi_rotation",
                           (turn - sign * repcheck::CMat::Identity(rep.dim(), rep.dim())).norm(), 1e-10));
    }
}

inline void induction_checks(std::vector<CheckResult>& out) {
    using namespace repcheck;
    struct Case {
        std::string name;
        GroupRep rep;
    };
    const std::vector<Case> cases{{"Z3.chi1", cyclic_character(3, 1)},
                                  {"Z3.chi2", cyclic_character(3, 2)},
                                  {"S3.sign", s3_sign()},
                                  {"S3.standard", s3_standard()}};
    for (const auto& c : cases) {
        const GaugeGroupoid G(3, c.rep.group());
        const auto ind = induce_groupoid_rep(G, c.rep);
        out.push_back(make("induction[" + c.name + "].functoriality", functoriality_residual(ind), 1e-13));
        double roundtrip = 0.0;
        const auto back = restrict_rep(ind, 0);
        for (int g = 0; g < c.rep.group().order(); ++g) roundtrip = std::max(roundtrip, (back(g) - c.rep(g)).norm());
        out.push_back(make("induction[" + c.name + "].restriction_roundtrip", roundtrip, 0.0));
        const bool irr = is_irreducible(ind).irreducible;
        out.push_back(make("induction[" + c.name + "].irreducible", irr == is_irreducible(c.rep) && irr ? 0.0 : 1.0, 0.0));
    }
    const GaugeGroupoid G(3, FiniteGroup::symmetric3());
    const auto reg = is_irreducible(induce_groupoid_rep(G, regular_rep(FiniteGroup::symmetric3())));
    out.push_back(make("induction[S3.regular].reducible_witness",
                       !reg.irreducible && reg.witness ? 0.0 : 1.0, 0.0));
}

}  // namespace detail

/// Runs one suite by name, or every suite for "all". Unknown names throw BadParams.
inline std::vector<CheckResult> run(const std::string& suite, const Options& o = {}) {
    std::vector<CheckResult> out;
    const bool all = suite == "all";
    bool known = all;
    auto want = [&](const char* name) {
        const bool hit = all || suite == name;
        known = known || hit;
        return hit;
    };
    if (want("geometry")) detail::geometry(o, out);
    if (want("groupoid")) detail::groupoid_checks(o, out);
    if (want("cohomology")) detail::cohomology_checks(out);
    if (want("covering")) detail::covering_checks(o, out);
    if (want("svn")) detail::svn_checks(o, out);
    if (want("circle")) detail::circle_checks(o, out);
    if (want("spin")) detail::spin_checks(o, out);
    if (want("induction")) detail::induction_checks(out);
    if (!known) throw BadParams("unknown verify suite '" + suite + "'");
    return out;
}

}  // namespace wigneroid::verify
