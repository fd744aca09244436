#pragma once

// Classification engine. Orbits of R_phi on the dual of the Heisenberg group
// H(2), the resulting labels of irreducible projective representations of
// E(2), the orbit/little-group split of the Poincare group, and the joined
// particle table for a spacetime.

#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wigneroid/errors.hpp"
#include "wigneroid/groupoid.hpp"
#include "wigneroid/spacetime.hpp"

namespace wigneroid::mackey {

using spacetime::TetradCovector;
using Vec2 = Eigen::Vector2d;

// ---------------------------------------------------------------------------
// Dual of H(2) and its R_phi orbits

/// One-dimensional character chi_p(s, a) = e^{i p.a}; central character 0.
struct Character {
    Vec2 p = Vec2::Zero();
};

/// Stone-von Neumann representation with central character mu != 0.
struct StoneVonNeumann {
    double mu = 1.0;
};

using DualPointH2 = std::variant<Character, StoneVonNeumann>;

inline DualPointH2 stone_von_neumann(double mu) {
    if (mu == 0.0 || !std::isfinite(mu)) throw BadParams("Stone-von Neumann point needs a finite mu != 0");
    return StoneVonNeumann{mu};
}

enum class Stabilizer { FullLine, TwoPiZ };

struct OriginOrbit {};
struct CircleOrbit { double rho; };
struct FixedMagnetic { double mu; };

struct DualOrbit {
    std::variant<OriginOrbit, CircleOrbit, FixedMagnetic> kind;
    Stabilizer stabilizer;
};

/// phi . chi_p = chi_{R_phi p}
inline Vec2 rotate_character(double phi, const Vec2& p) {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    return {c * p.x() - s * p.y(), s * p.x() + c * p.y()};
}

inline DualOrbit dual_orbit(const DualPointH2& pt) {
    if (const auto* svn = std::get_if<StoneVonNeumann>(&pt)) {
        if (svn->mu == 0.0) throw BadParams("Stone-von Neumann point needs mu != 0");
        return {FixedMagnetic{svn->mu}, Stabilizer::FullLine};
    }
    const Vec2& p = std::get<Character>(pt).p;
    const double rho = p.norm();
    if (rho == 0.0) return {OriginOrbit{}, Stabilizer::FullLine};
    return {CircleOrbit{rho}, Stabilizer::TwoPiZ};
}

// ---------------------------------------------------------------------------
// Representation labels

struct Massive {
    double m;
    double s;
};
struct MasslessHelicity {
    long lambda;
};
/// phi0 is stored in [0, 1).
struct ContinuousSpin {
    double rho;
    double phi0;
};
/// Angular spectrum n + 1/2 + c0, n = 0, 1, 2, ...
struct Magnetic {
    double mu;
    double c0;

    double j_eigenvalue(int n) const { return n + 0.5 + c0; }
};
struct Vacuum {};
struct TachyonicLabel {
    double m;
};

using RepLabel = std::variant<Massive, MasslessHelicity, ContinuousSpin, Magnetic, Vacuum, TachyonicLabel>;

inline std::string label_tag(const RepLabel& l) {
    static const char* const tags[] = {"massive", "massless_helicity", "continuous_spin",
                                       "magnetic", "vacuum", "tachyonic"};
    return tags[l.index()];
}

/// Which classification the label appears in.
enum class Sector { Shared, GroupoidOnly, GroupOnly, Unsupported };

inline std::string to_string(Sector s) {
    switch (s) {
        case Sector::Shared: return "shared";
        case Sector::GroupoidOnly: return "groupoid_only";
        case Sector::GroupOnly: return "group_only";
        case Sector::Unsupported: return "unsupported";
    }
    return "unsupported";
}

inline Sector provenance(const RepLabel& l) {
    if (std::holds_alternative<Magnetic>(l)) return Sector::GroupoidOnly;
    if (std::holds_alternative<TachyonicLabel>(l)) return Sector::Unsupported;
    return Sector::Shared;
}

inline double reduce_mod1(double x) {
    double r = x - std::floor(x);
    if (r >= 1.0) r = 0.0;
    return r;
}

inline bool is_half_integer(double s) { return s >= 0.0 && std::isfinite(s) && 2.0 * s == std::round(2.0 * s); }

inline Massive massive_label(double m, double s) {
    if (!(m > 0.0)) throw BadParams("massive label needs m > 0");
    if (!is_half_integer(s)) throw BadParams("spin must be a non-negative half-integer");
    return {m, s};
}

/// Label of the irreducible representation of the covering group induced
/// from `orbit` and the little-group character with parameter
/// `character_param` (lambda, phi0 or c0 depending on the orbit). Only
/// integral lambda descends to a projective representation of E(2).
inline RepLabel classify_E2bar(const DualOrbit& orbit, double character_param) {
    if (!std::isfinite(character_param)) throw BadParams("character parameter must be finite");
    if (std::holds_alternative<OriginOrbit>(orbit.kind)) {
        if (character_param != std::round(character_param)) {
            throw NonIntegralHelicityError("helicity " + std::to_string(character_param) +
                                           " does not descend to E(2); only integers do");
        }
        return MasslessHelicity{static_cast<long>(std::llround(character_param))};
    }
    if (const auto* c = std::get_if<CircleOrbit>(&orbit.kind)) {
        return ContinuousSpin{c->rho, reduce_mod1(character_param)};
    }
    const auto& f = std::get<FixedMagnetic>(orbit.kind);
    return Magnetic{f.mu, character_param};
}

// ---------------------------------------------------------------------------
// Poincare group orbits

enum class LittleGroup { SU2, DoubleCoverE2, SO12like, SL2C };

inline std::string to_string(LittleGroup g) {
    switch (g) {
        case LittleGroup::SU2: return "SU(2)";
        case LittleGroup::DoubleCoverE2: return "double_cover_E(2)";
        case LittleGroup::SO12like: return "SO(1,2)";
        case LittleGroup::SL2C: return "SL(2,C)";
    }
    return "";
}

struct MassShell {
    double m;
    bool future;
};
struct LightCone {
    bool future;
};
struct Spacelike {
    double m;
};
struct Origin {};

struct PoincareOrbitLabel {
    std::variant<MassShell, LightCone, Spacelike, Origin> kind;
    LittleGroup little_group;
};

inline PoincareOrbitLabel classify_poincare(const spacetime::Vec4& p, double tol = groupoid::orbit_tolerance) {
    const double norm2 = p.squaredNorm();
    if (norm2 == 0.0) return {Origin{}, LittleGroup::SL2C};
    const double p2 = p[0] * p[0] - p[1] * p[1] - p[2] * p[2] - p[3] * p[3];
    if (std::abs(p2) <= tol * norm2) return {LightCone{p[0] > 0.0}, LittleGroup::DoubleCoverE2};
    if (p2 < 0.0) return {Spacelike{std::sqrt(-p2)}, LittleGroup::SO12like};
    return {MassShell{std::sqrt(p2), p[0] > 0.0}, LittleGroup::SU2};
}

/// The (sign p^2, sign p0) cell: (+1,+1), (0,+1), (0,0), (-1,0), (+1,-1), (0,-1).
/// Time orientation is reported as 0 for spacelike and zero covectors.
inline std::pair<int, int> partition_cell(const groupoid::OrbitClass& c) {
    constexpr std::pair<int, int> cells[] = {{1, 1}, {0, 1}, {0, 0}, {-1, 0}, {1, -1}, {0, -1}};
    return cells[c.index()];
}

inline std::pair<int, int> partition_cell(const PoincareOrbitLabel& l) {
    return std::visit(
        [](const auto& k) -> std::pair<int, int> {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, MassShell>) return {1, k.future ? 1 : -1};
            if constexpr (std::is_same_v<T, LightCone>) return {0, k.future ? 1 : -1};
            if constexpr (std::is_same_v<T, Spacelike>) return {-1, 0};
            return {0, 0};
        },
        l.kind);
}

// ---------------------------------------------------------------------------
// Particle table

struct RepParams {
    std::vector<double> spins{0.0, 0.5, 1.0};
    std::vector<double> helicities{-1.0, 0.0, 1.0};
    std::vector<std::pair<double, double>> continuous{{1.0, 0.0}};  ///< (rho, phi0)
    std::vector<std::pair<double, double>> magnetic{{1.0, 0.0}};    ///< (mu, c0)
};

struct TableRow {
    groupoid::OrbitClass orbit;
    double p2;
    groupoid::IsotropyGroup isotropy;
    std::vector<RepLabel> labels;
};

inline bool operator==(const RepLabel& a, const RepLabel& b);

/// Labels attached to one orbit class. Massive orbits get SU(2) spins,
/// massless orbits the E(2)-bar labels; past components mirror the future.
inline std::vector<RepLabel> labels_for_orbit(const groupoid::OrbitClass& orbit, const RepParams& params) {
    std::vector<RepLabel> labels;
    switch (groupoid::isotropy_type(orbit)) {
        case groupoid::IsotropyGroup::SO3: {
            const double m = *groupoid::orbit_mass(orbit);
            for (double s : params.spins) labels.push_back(massive_label(m, s));
            break;
        }
        case groupoid::IsotropyGroup::E2: {
            for (double lambda : params.helicities) {
                labels.push_back(classify_E2bar(dual_orbit(Character{}), lambda));
            }
            for (auto [rho, phi0] : params.continuous) {
                if (!(rho > 0.0)) throw BadParams("continuous spin needs rho > 0");
                labels.push_back(classify_E2bar(dual_orbit(Character{Vec2(rho, 0.0)}), phi0));
            }
            for (auto [mu, c0] : params.magnetic) {
                labels.push_back(classify_E2bar(dual_orbit(stone_von_neumann(mu)), c0));
            }
            break;
        }
        case groupoid::IsotropyGroup::SO0_13: labels.push_back(Vacuum{}); break;
        case groupoid::IsotropyGroup::Unsupported:
            labels.push_back(TachyonicLabel{*groupoid::orbit_mass(orbit)});
            break;
    }
    return labels;
}

/// One row per sample, in input order. Rows depend only on the frame
/// covector; chart points are validated against `spec` and otherwise unused.
inline std::vector<TableRow> particle_table(const spacetime::MetricSpec& spec,
                                            const std::vector<groupoid::CotangentPoint>& samples,
                                            const RepParams& params) {
    std::vector<TableRow> rows;
    rows.reserve(samples.size());
    for (const auto& sample : samples) {
        if (!(sample.metric == spec)) throw BadParams("sample belongs to a different spacetime");
        spacetime::check_chart_point(spec, sample.x);
        const auto orbit = groupoid::classify_orbit(sample.p);
        rows.push_back({orbit, spacetime::p_squared(sample.p), groupoid::isotropy_type(orbit),
                        labels_for_orbit(orbit, params)});
    }
    return rows;
}

inline bool operator==(const RepLabel& a, const RepLabel& b) {
    if (a.index() != b.index()) return false;
    return std::visit(
        [&b](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            const T& y = std::get<T>(b);
            if constexpr (std::is_same_v<T, Massive>) return x.m == y.m && x.s == y.s;
            if constexpr (std::is_same_v<T, MasslessHelicity>) return x.lambda == y.lambda;
            if constexpr (std::is_same_v<T, ContinuousSpin>) return x.rho == y.rho && x.phi0 == y.phi0;
            if constexpr (std::is_same_v<T, Magnetic>) return x.mu == y.mu && x.c0 == y.c0;
            if constexpr (std::is_same_v<T, TachyonicLabel>) return x.m == y.m;
            return true;
        },
        a);
}

inline bool operator==(const TableRow& a, const TableRow& b) {
    return a.orbit.index() == b.orbit.index() && groupoid::orbit_mass(a.orbit) == groupoid::orbit_mass(b.orbit) &&
           a.p2 == b.p2 && a.isotropy == b.isotropy && a.labels == b.labels;
}

// ---------------------------------------------------------------------------
// Group versus groupoid classification

/// Whether a label is realised by the Poincare-group classification, whose
/// massless little group is the double cover of E(2): helicities in Z/2 and
/// no central parameter.
inline bool in_group_classification(const RepLabel& l) {
    return std::visit(
        [](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Magnetic>) return false;
            return true;
        },
        l);
}

struct ComparisonRow {
    std::string sector;
    std::string example;
    bool in_group;
    bool in_groupoid;
};

/// Probes each sector with a representative and records which
/// classification contains it. Groupoid membership is decided by actually
/// running classify_E2bar / massive_label.
inline std::vector<ComparisonRow> compare_with_group_classification() {
    std::vector<ComparisonRow> rows;
    auto groupoid_has = [](auto&& make) {
        try {
            make();
            return true;
        } catch (const NonIntegralHelicityError&) {
            return false;
        }
    };
    const DualOrbit origin = dual_orbit(Character{});

    rows.push_back({"massive", "m=1 s=1/2", true, groupoid_has([] { return massive_label(1.0, 0.5); })});
    rows.push_back({"massive", "m=1 s=1", true, groupoid_has([] { return massive_label(1.0, 1.0); })});
    for (double lambda : {-1.0, 0.0, 1.0, 2.0}) {
        rows.push_back({"massless_integer_helicity", "lambda=" + std::to_string(static_cast<int>(lambda)), true,
                        groupoid_has([&] { return classify_E2bar(origin, lambda); })});
    }
    const std::pair<double, const char*> half_integers[] = {{-0.5, "-1/2"}, {0.5, "1/2"}, {1.5, "3/2"}};
    for (auto [lambda, text] : half_integers) {
        rows.push_back({"massless_half_integer_helicity", std::string("lambda=") + text,
                        2.0 * lambda == std::round(2.0 * lambda),
                        groupoid_has([&] { return classify_E2bar(origin, lambda); })});
    }
    {
        const RepLabel l = classify_E2bar(dual_orbit(Character{Vec2(1.0, 0.0)}), 0.3);
        rows.push_back({"continuous_spin", "rho=1 phi0=0.3", in_group_classification(l), true});
    }
    {
        const RepLabel l = classify_E2bar(dual_orbit(stone_von_neumann(1.0)), 0.0);
        rows.push_back({"magnetic", "mu=1 c0=0", in_group_classification(l), true});
    }
    return rows;
}

}  // namespace wigneroid::mackey
