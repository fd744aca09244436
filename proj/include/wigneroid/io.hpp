#pragma once

// JSON encodings of the public data types (nlohmann::json).

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "wigneroid/cohomology.hpp"
#include "wigneroid/covering.hpp"
#include "wigneroid/errors.hpp"
#include "wigneroid/groupoid.hpp"
#include "wigneroid/mackey.hpp"
#include "wigneroid/spacetime.hpp"

namespace wigneroid::io {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Spacetime

inline json to_json(const spacetime::MetricSpec& m) {
    if (m.kind() == spacetime::MetricKind::Minkowski) return {{"kind", "minkowski"}};
    return {{"kind", "schwarzschild_kruskal"}, {"mass", m.mass()}};
}

inline spacetime::MetricSpec metric_from_json(const json& j) {
    try {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "minkowski") return spacetime::MetricSpec::minkowski();
        if (kind == "schwarzschild_kruskal") return spacetime::MetricSpec::schwarzschild_kruskal(j.at("mass").get<double>());
        throw ParseError("unknown metric kind '" + kind + "'");
    } catch (const json::exception& e) {
        throw ParseError(std::string("metric: ") + e.what());
    }
}

/// "minkowski" or "schwarzschild:M"
inline spacetime::MetricSpec parse_metric_flag(const std::string& s) {
    if (s == "minkowski") return spacetime::MetricSpec::minkowski();
    const std::string prefix = "schwarzschild:";
    if (s.rfind(prefix, 0) == 0) {
        const std::string tail = s.substr(prefix.size());
        double m = 0.0;
        try {
            std::size_t used = 0;
            m = std::stod(tail, &used);
            if (used != tail.size()) throw ParseError("");
        } catch (const std::exception&) {
            throw ParseError("bad mass parameter in '" + s + "'");
        }
        return spacetime::MetricSpec::schwarzschild_kruskal(m);
    }
    if (s == "schwarzschild") return spacetime::MetricSpec::schwarzschild_kruskal(1.0);
    throw ParseError("unknown metric '" + s + "' (expected minkowski or schwarzschild:M)");
}

/// Comma-separated list of exactly `n` reals.
inline std::vector<double> parse_reals(const std::string& s, std::size_t n) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const double v = std::stod(item, &used);
            while (used < item.size() && item[used] == ' ') ++used;
            if (used != item.size()) throw ParseError("");
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("malformed number '" + item + "' in '" + s + "'");
        }
    }
    if (out.size() != n) {
        throw ParseError("expected " + std::to_string(n) + " comma-separated values, got '" + s + "'");
    }
    return out;
}

inline json to_json(const spacetime::ChartPoint& x) { return json(x.coords); }
inline json to_json(const spacetime::TetradCovector& p) { return json{p[0], p[1], p[2], p[3]}; }

inline spacetime::ChartPoint point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) throw ParseError("chart point must be an array of 4 numbers");
    return spacetime::ChartPoint{{j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()}};
}

inline spacetime::TetradCovector covector_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) throw ParseError("covector must be an array of 4 numbers");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

// ---------------------------------------------------------------------------
// Groupoid

inline json to_json(const groupoid::OrbitClass& c) {
    json j{{"tag", groupoid::orbit_tag(c)}};
    if (auto m = groupoid::orbit_mass(c)) j["m"] = *m;
    return j;
}

inline json to_json(const Eigen::Matrix4d& m) {
    json rows = json::array();
    for (int i = 0; i < 4; ++i) rows.push_back({m(i, 0), m(i, 1), m(i, 2), m(i, 3)});
    return rows;
}

inline json to_json(const groupoid::WignerMorphism& w) {
    const auto& b = w.base();
    return {{"src", {{"metric", to_json(b.metric())}, {"point", to_json(b.source())}}},
            {"tgt", {{"metric", to_json(b.metric())}, {"point", to_json(b.target())}}},
            {"lambda", to_json(w.lambda().matrix())},
            {"p_src", to_json(w.p_src())}};
}

inline groupoid::WignerMorphism morphism_from_json(const json& j) {
    try {
        const auto metric = metric_from_json(j.at("src").at("metric"));
        if (!(metric_from_json(j.at("tgt").at("metric")) == metric)) {
            throw ParseError("morphism endpoints lie in different spacetimes");
        }
        const auto& rows = j.at("lambda");
        if (!rows.is_array() || rows.size() != 4) throw ParseError("lambda must be a 4x4 array");
        Eigen::Matrix4d m;
        for (int i = 0; i < 4; ++i) {
            if (!rows[i].is_array() || rows[i].size() != 4) throw ParseError("lambda must be a 4x4 array");
            for (int k = 0; k < 4; ++k) m(i, k) = rows[i][k].get<double>();
        }
        return groupoid::WignerMorphism(
            groupoid::PoincareMorphism(metric, point_from_json(j.at("tgt").at("point")),
                                       groupoid::LorentzMatrix::from(m), point_from_json(j.at("src").at("point"))),
            covector_from_json(j.at("p_src")));
    } catch (const json::exception& e) {
        throw ParseError(std::string("morphism: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Cohomology

inline json to_json(const cohomology::LieAlgebra& L) {
    json c = json::array();
    for (const auto& e : L.entries()) {
        c.push_back({{"i", e.i}, {"j", e.j}, {"k", e.k}, {"val", to_string(e.val)}});
    }
    return {{"dim", L.dim()}, {"c", c}, {"names", L.names()}};
}

/// {"dim":3,"c":[{"i":0,"j":1,"k":2,"val":"1"}, ...], "names": [...]?}
inline cohomology::LieAlgebra algebra_from_json(const json& j) {
    try {
        const int dim = j.at("dim").get<int>();
        std::vector<cohomology::StructureConstant> entries;
        for (const auto& e : j.at("c")) {
            const auto& v = e.at("val");
            const Rational val = v.is_string() ? parse_rational(v.get<std::string>())
                                 : v.is_number_integer() ? Rational(v.get<long>())
                                 : throw ParseError("structure constant values must be rational strings");
            entries.push_back({e.at("i").get<int>(), e.at("j").get<int>(), e.at("k").get<int>(), val});
        }
        std::vector<std::string> names;
        if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
        return cohomology::LieAlgebra::from_entries(dim, entries, names);
    } catch (const json::exception& e) {
        throw ParseError(std::string("algebra: ") + e.what());
    }
}

/// Preset name, or "@path" to a structure-constants JSON file.
inline cohomology::LieAlgebra load_algebra(const std::string& spec) {
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw ParseError("cannot open algebra file '" + spec.substr(1) + "'");
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw ParseError(std::string("algebra file: ") + e.what());
        }
        return algebra_from_json(j);
    }
    return cohomology::preset(spec);
}

/// {"(A,B)": "p/q", ...} over i < j with nonzero value.
inline json to_json(const cohomology::TwoCochain& w, const std::vector<std::string>& names) {
    json j = json::object();
    for (int a = 0; a < w.dim(); ++a) {
        for (int b = a + 1; b < w.dim(); ++b) {
            if (w(a, b) != 0) j["(" + names[a] + "," + names[b] + ")"] = to_string(w(a, b));
        }
    }
    return j;
}

inline json to_json(const cohomology::CohomologyResult& r, const std::vector<std::string>& names) {
    json j{{"dim_h2", r.dim_h2}};
    if (r.dim_h2 == 1) {
        j["generator"] = to_json(r.basis.front(), names);
    } else {
        json gens = json::array();
        for (const auto& w : r.basis) gens.push_back(to_json(w, names));
        j["generators"] = gens;
    }
    return j;
}

// ---------------------------------------------------------------------------
// Covering group

inline json to_json(const covering::OscElement& g) {
    return {{"s", g.s}, {"a", {g.a.x(), g.a.y()}}, {"phi", g.phi}};
}

inline json to_json(const covering::E2Element& g) { return {{"a", {g.a.x(), g.a.y()}}, {"theta", g.theta}}; }

// ---------------------------------------------------------------------------
// Classification

inline json to_json(const mackey::RepLabel& l) {
    json j = std::visit(
        [](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, mackey::Massive>) return {{"m", x.m}, {"s", x.s}};
            if constexpr (std::is_same_v<T, mackey::MasslessHelicity>) return {{"lambda", x.lambda}};
            if constexpr (std::is_same_v<T, mackey::ContinuousSpin>) return {{"rho", x.rho}, {"phi0", x.phi0}};
            if constexpr (std::is_same_v<T, mackey::Magnetic>) return {{"mu", x.mu}, {"c0", x.c0}};
            if constexpr (std::is_same_v<T, mackey::TachyonicLabel>) return {{"m", x.m}, {"representation", "unsupported"}};
            return json::object();
        },
        l);
    j["tag"] = mackey::label_tag(l);
    j["provenance"] = mackey::to_string(mackey::provenance(l));
    return j;
}

inline json to_json(const mackey::PoincareOrbitLabel& l) {
    json j = std::visit(
        [](const auto& k) -> json {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, mackey::MassShell>) return {{"tag", "mass_shell"}, {"m", k.m}, {"future", k.future}};
            if constexpr (std::is_same_v<T, mackey::LightCone>) return {{"tag", "light_cone"}, {"future", k.future}};
            if constexpr (std::is_same_v<T, mackey::Spacelike>) return {{"tag", "spacelike"}, {"m", k.m}};
            return {{"tag", "origin"}};
        },
        l.kind);
    j["little_group"] = mackey::to_string(l.little_group);
    return j;
}

inline json to_json(const mackey::TableRow& row) {
    json labels = json::array();
    for (const auto& l : row.labels) labels.push_back(to_json(l));
    return {{"orbit", to_json(row.orbit)},
            {"p2", row.p2},
            {"isotropy", groupoid::to_string(row.isotropy)},
            {"representations", labels}};
}

inline json to_json(const mackey::ComparisonRow& r) {
    return {{"sector", r.sector}, {"example", r.example}, {"group", r.in_group}, {"groupoid", r.in_groupoid}};
}

}  // namespace wigneroid::io
