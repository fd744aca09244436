#pragma once

// Command-line front end. `run` is separate from main so tests can drive it
// with captured streams.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wigneroid/cohomology.hpp"
#include "wigneroid/covering.hpp"
#include "wigneroid/errors.hpp"
#include "wigneroid/groupoid.hpp"
#include "wigneroid/io.hpp"
#include "wigneroid/mackey.hpp"
#include "wigneroid/spacetime.hpp"
#include "wigneroid/verify.hpp"

namespace wigneroid::cli {

using nlohmann::json;

enum ExitCode { ok = 0, internal_error = 1, validation_error = 2 };

namespace detail {

inline bool is_validation(const std::string& code) { return code != "convergence" && code != "not_unitary"; }

/// Shortest round-trip text, with integral values printed without a fraction.
inline std::string fmt(double x) {
    if (std::isfinite(x) && x == std::trunc(x) && std::abs(x) < 1e15) return std::to_string(static_cast<long long>(x));
    return json(x).dump();
}

inline spacetime::ChartPoint default_point(const spacetime::MetricSpec& spec) {
    if (spec.kind() == spacetime::MetricKind::Minkowski) return {{0.0, 0.0, 0.0, 0.0}};
    return spacetime::kruskal_point_at_radius(spec.mass(), 4.0 * spec.mass(), 0.0, std::numbers::pi / 2, 0.0);
}

inline spacetime::ChartPoint point_arg(const spacetime::MetricSpec& spec, const std::string& s) {
    if (s.empty()) return default_point(spec);
    const auto v = io::parse_reals(s, 4);
    const spacetime::ChartPoint x{{v[0], v[1], v[2], v[3]}};
    spacetime::check_chart_point(spec, x);
    return x;
}

inline spacetime::TetradCovector covector_arg(const std::string& s) {
    const auto v = io::parse_reals(s, 4);
    return {v[0], v[1], v[2], v[3]};
}

inline covering::OscElement osc_arg(const std::string& s) {
    const auto v = io::parse_reals(s, 4);
    return {v[0], v[1], v[2], v[3]};
}

inline std::uint64_t env_seed(std::uint64_t fallback) {
    const char* raw = std::getenv("WIGNEROID_SEED");
    if (raw == nullptr || *raw == '\0') return fallback;
    try {
        std::size_t used = 0;
        const auto v = std::stoull(raw, &used);
        if (used != std::string(raw).size()) throw ParseError("");
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string("WIGNEROID_SEED must be a non-negative integer, got '") + raw + "'");
    }
}

inline std::string label_text(const mackey::RepLabel& l) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, mackey::Massive>) return "massive m=" + fmt(x.m) + " s=" + fmt(x.s);
            if constexpr (std::is_same_v<T, mackey::MasslessHelicity>) return "helicity lambda=" + std::to_string(x.lambda);
            if constexpr (std::is_same_v<T, mackey::ContinuousSpin>) {
                return "continuous_spin rho=" + fmt(x.rho) + " phi0=" + fmt(x.phi0);
            }
            if constexpr (std::is_same_v<T, mackey::Magnetic>) return "magnetic mu=" + fmt(x.mu) + " c0=" + fmt(x.c0);
            if constexpr (std::is_same_v<T, mackey::Vacuum>) return "vacuum";
            if constexpr (std::is_same_v<T, mackey::TachyonicLabel>) return "tachyonic m=" + fmt(x.m) + " (unsupported)";
            return "";
        },
        l);
}

inline std::string orbit_text(const groupoid::OrbitClass& c) {
    std::string s = groupoid::orbit_tag(c);
    if (auto m = groupoid::orbit_mass(c)) s += " m=" + fmt(*m);
    return s;
}

inline std::string cochain_text(const cohomology::TwoCochain& w, const std::vector<std::string>& names) {
    std::string s;
    for (int a = 0; a < w.dim(); ++a) {
        for (int b = a + 1; b < w.dim(); ++b) {
            if (w(a, b) == 0) continue;
            if (!s.empty()) s += ", ";
            s += "w(" + names[a] + "," + names[b] + ") = " + to_string(w(a, b));
        }
    }
    return s.empty() ? "0" : s;
}

inline std::string bracket_text(const cohomology::LieAlgebra& L) {
    std::string s;
    const auto& names = L.names();
    for (int i = 0; i < L.dim(); ++i) {
        for (int j = i + 1; j < L.dim(); ++j) {
            std::string rhs;
            for (int k = 0; k < L.dim(); ++k) {
                const Rational& c = L.c(k, i, j);
                if (c == 0) continue;
                const bool neg = c < 0;
                const Rational mag = neg ? Rational(-c) : c;
                rhs += rhs.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
                if (mag != 1) rhs += to_string(mag) + " ";
                rhs += names[k];
            }
            if (!rhs.empty()) s += "[" + names[i] + "," + names[j] + "] = " + rhs + "\n";
        }
    }
    return s.empty() ? "abelian\n" : s;
}

}  // namespace detail

/// Parses `args` (without the program name), dispatches, and writes the
/// report to `out`. Errors go to `err`, or to `out` as a JSON record under --json.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"wigneroid: groupoid extension of Wigner's particle classification", "wigneroid"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit a single JSON document");

    std::string metric = "minkowski";
    std::string point;
    std::string algebra = "e2";
    double tolerance = groupoid::orbit_tolerance;

    auto add_common = [&](CLI::App* sub) {
        sub->fallthrough();
        sub->add_flag("--json", as_json, "emit a single JSON document");
    };
    auto add_geometry = [&](CLI::App* sub) {
        sub->add_option("--metric", metric, "minkowski or schwarzschild:M")->capture_default_str();
        sub->add_option("--point", point, "chart point x0,x1,x2,x3 (Kruskal: U,V,theta,phi)");
        sub->add_option("--tolerance", tolerance, "relative lightlike tolerance on p^2")->capture_default_str();
    };

    auto* classify = app.add_subcommand("classify", "orbit and isotropy type of a covector");
    add_common(classify);
    add_geometry(classify);
    std::string p_single;
    classify->add_option("--p", p_single, "tetrad covector p0,p1,p2,p3")->required();

    auto* table = app.add_subcommand("particle-table", "orbit decomposition with representation labels");
    add_common(table);
    add_geometry(table);
    std::vector<std::string> p_list;
    table->add_option("--p", p_list, "tetrad covector p0,p1,p2,p3 (repeatable)");
    std::vector<double> spins;
    std::vector<double> helicities;
    std::vector<std::string> continuous;
    std::vector<double> mus;
    double c0 = 0.0;
    table->add_option("--spin", spins, "little-group spins for massive rows");
    table->add_option("--helicity", helicities, "helicities for massless rows");
    table->add_option("--continuous", continuous, "continuous-spin parameters rho,phi0 (repeatable)");
    table->add_option("--mu", mus, "central parameters for the magnetic sector");
    table->add_option("--c0", c0, "angular offset of the magnetic sector")->capture_default_str();

    auto* coh = app.add_subcommand("cohomology", "second Lie algebra cohomology H^2(g, R)");
    add_common(coh);
    coh->add_option("--algebra", algebra, "preset (e2, su2, heisenberg3, abelian:n) or @file.json")->capture_default_str();

    auto* ext = app.add_subcommand("extend", "central extension by a basis of H^2");
    add_common(ext);
    ext->add_option("--algebra", algebra, "preset (e2, su2, heisenberg3, abelian:n) or @file.json")->capture_default_str();

    auto* cov = app.add_subcommand("covering", "projective covering group of E(2)");
    add_common(cov);
    std::string op = "structure";
    std::string g_arg = "0,0,0,0";
    std::string h_arg = "0,0,0,0";
    cov->add_option("--op", op, "structure, mul, inv, project or conjugate")
        ->check(CLI::IsMember({"structure", "mul", "inv", "project", "conjugate"}))
        ->capture_default_str();
    cov->add_option("--g", g_arg, "element s,ax,ay,phi")->capture_default_str();
    cov->add_option("--k", h_arg, "second element s,ax,ay,phi (mul: g k, conjugate: g k g^-1)")->capture_default_str();

    auto* ver = app.add_subcommand("verify", "numerical witness suite");
    add_common(ver);
    verify::Options vopts;
    std::string suite = "all";
    std::vector<std::string> suite_choices = verify::suite_names();
    suite_choices.push_back("all");
    ver->add_option("--suite", suite, "suite name or all")->check(CLI::IsMember(suite_choices))->capture_default_str();
    ver->add_option("--trunc", vopts.trunc, "Fock-space truncation N")->check(CLI::Range(2, 4096))->capture_default_str();
    ver->add_option("--grid", vopts.grid, "circle grid size M")->check(CLI::Range(3, 4096))->capture_default_str();
    ver->add_option("--spin", vopts.max_spin, "largest SU(2) spin checked")->check(CLI::Range(0.0, 20.0))->capture_default_str();
    ver->add_option("--mu", vopts.mus, "central parameters for the Stone-von Neumann checks");

    auto* cmp = app.add_subcommand("compare", "group versus groupoid classification");
    add_common(cmp);

    auto fail = [&](const std::string& code, const std::string& message, int exit_code) {
        if (as_json) {
            out << json{{"code", code}, {"message", message}}.dump() << "\n";
        } else {
            err << "error [" << code << "]: " << message << "\n";
        }
        return exit_code;
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        return fail("usage", e.what(), validation_error);
    }

    try {
        if (classify->parsed()) {
            const auto spec = io::parse_metric_flag(metric);
            const auto x = detail::point_arg(spec, point);
            const auto p = detail::covector_arg(p_single);
            const auto orbit = groupoid::classify_orbit(p, tolerance);
            const auto iso = groupoid::isotropy_type(orbit);
            const auto poincare = mackey::classify_poincare(p.p, tolerance);
            const auto stab_dim = groupoid::stabilizer_generators(p).size();
            const auto labels = mackey::labels_for_orbit(orbit, {});
            if (as_json) {
                json reps = json::array();
                for (const auto& l : labels) reps.push_back(io::to_json(l));
                out << json{{"metric", io::to_json(spec)},
                            {"point", io::to_json(x)},
                            {"p", io::to_json(p)},
                            {"p2", spacetime::p_squared(p)},
                            {"orbit", io::to_json(orbit)},
                            {"isotropy", groupoid::to_string(iso)},
                            {"stabilizer_dim", stab_dim},
                            {"poincare", io::to_json(poincare)},
                            {"representations", reps}}
                           .dump()
                    << "\n";
            } else {
                out << "orbit: " << detail::orbit_text(orbit) << "\n"
                    << "isotropy: " << groupoid::to_string(iso) << "\n"
                    << "p2: " << detail::fmt(spacetime::p_squared(p)) << "\n"
                    << "stabilizer dimension: " << stab_dim << "\n"
                    << "poincare little group: " << mackey::to_string(poincare.little_group) << "\n";
                for (const auto& l : labels) {
                    out << "  " << detail::label_text(l) << " [" << mackey::to_string(mackey::provenance(l)) << "]\n";
                }
            }
            return ok;
        }

        if (table->parsed()) {
            const auto spec = io::parse_metric_flag(metric);
            const auto x = detail::point_arg(spec, point);
            if (p_list.empty()) p_list = {"2,0,0,0", "1,0,0,1", "0,0,0,0", "0,0,1,0", "-2,0,0,0", "-1,0,0,1"};
            std::vector<groupoid::CotangentPoint> samples;
            for (const auto& s : p_list) samples.push_back({spec, x, detail::covector_arg(s)});
            mackey::RepParams params;
            if (!spins.empty()) params.spins = spins;
            if (!helicities.empty()) params.helicities = helicities;
            if (!continuous.empty()) {
                params.continuous.clear();
                for (const auto& c : continuous) {
                    const auto v = io::parse_reals(c, 2);
                    params.continuous.emplace_back(v[0], v[1]);
                }
            }
            if (!mus.empty()) {
                params.magnetic.clear();
                for (double mu : mus) params.magnetic.emplace_back(mu, c0);
            } else {
                for (auto& m : params.magnetic) m.second = c0;
            }
            const auto rows = mackey::particle_table(spec, samples, params);
            if (as_json) {
                json jrows = json::array();
                for (const auto& r : rows) jrows.push_back(io::to_json(r));
                out << json{{"metric", io::to_json(spec)}, {"point", io::to_json(x)}, {"rows", jrows}}.dump() << "\n";
            } else {
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    out << "p = (" << p_list[i] << "): " << detail::orbit_text(rows[i].orbit)
                        << ", isotropy " << groupoid::to_string(rows[i].isotropy) << "\n";
                    for (const auto& l : rows[i].labels) {
                        out << "  " << detail::label_text(l) << " [" << mackey::to_string(mackey::provenance(l))
                            << "]\n";
                    }
                }
            }
            return ok;
        }

        if (coh->parsed()) {
            const auto L = io::load_algebra(algebra);
            const auto r = cohomology::h2(L);
            if (as_json) {
                out << io::to_json(r, L.names()).dump() << "\n";
            } else {
                out << "dim H^2 = " << r.dim_h2 << "\n";
                for (const auto& w : r.basis) out << "generator: " << detail::cochain_text(w, L.names()) << "\n";
            }
            return ok;
        }

        if (ext->parsed()) {
            const auto L = io::load_algebra(algebra);
            const auto r = cohomology::h2(L);
            const auto E = cohomology::central_extension(L, r.basis);
            if (as_json) {
                json cocycles = json::array();
                for (const auto& w : r.basis) cocycles.push_back(io::to_json(w, L.names()));
                out << json{{"cocycles", cocycles}, {"extension", io::to_json(E)}}.dump() << "\n";
            } else {
                out << "central extension by " << r.dim_h2 << " cocycle(s), dimension " << E.dim() << "\n"
                    << detail::bracket_text(E);
            }
            return ok;
        }

        if (cov->parsed()) {
            const auto g = detail::osc_arg(g_arg);
            const auto h = detail::osc_arg(h_arg);
            json result;
            std::string text;
            if (op == "structure") {
                const auto c = covering::numerical_structure_constants();
                const std::vector<std::string> names{"J", "P1", "P2", "E"};
                json entries = json::array();
                for (int i = 0; i < 4; ++i) {
                    for (int j = i + 1; j < 4; ++j) {
                        for (int k = 0; k < 4; ++k) {
                            const double v = std::round(c[k][i][j] * 1e6) / 1e6;
                            if (v == 0.0) continue;
                            entries.push_back({{"i", names[i]}, {"j", names[j]}, {"k", names[k]}, {"val", v}});
                            text += "[" + names[i] + "," + names[j] + "] ~ " + detail::fmt(v) + " " + names[k] + "\n";
                        }
                    }
                }
                result = {{"structure_constants", entries}};
            } else if (op == "mul") {
                result = io::to_json(covering::osc_mul(g, h));
            } else if (op == "inv") {
                result = io::to_json(covering::osc_inv(g));
            } else if (op == "project") {
                result = io::to_json(covering::project(g));
            } else {
                result = io::to_json(covering::conjugate_heisenberg(g, h));
            }
            if (as_json) {
                out << result.dump() << "\n";
            } else if (!text.empty()) {
                out << text;
            } else {
                out << result.dump(2) << "\n";
            }
            return ok;
        }

        if (ver->parsed()) {
            vopts.seed = detail::env_seed(vopts.seed);
            const auto results = verify::run(suite, vopts);
            const auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.pass; });
            if (as_json) {
                json checks = json::array();
                for (const auto& r : results) {
                    checks.push_back({{"check", r.check},
                                      {"status", r.pass ? "pass" : "fail"},
                                      {"residual", r.residual},
                                      {"tolerance", r.tolerance}});
                }
                out << json{{"suite", suite},
                            {"seed", vopts.seed},
                            {"checks", checks},
                            {"passed", static_cast<long>(results.size()) - failed},
                            {"failed", failed}}
                           .dump()
                    << "\n";
            } else {
                for (const auto& r : results) {
                    out << (r.pass ? "PASS " : "FAIL ") << r.check << " residual=" << detail::fmt(r.residual)
                        << " tolerance=" << detail::fmt(r.tolerance) << "\n";
                }
                out << results.size() - failed << "/" << results.size() << " checks passed\n";
            }
            return failed == 0 ? ok : internal_error;
        }

        if (cmp->parsed()) {
            const auto rows = mackey::compare_with_group_classification();
            if (as_json) {
                json jrows = json::array();
                for (const auto& r : rows) jrows.push_back(io::to_json(r));
                out << json{{"rows", jrows}}.dump() << "\n";
            } else {
                out << "sector                          example             group  groupoid\n";
                for (const auto& r : rows) {
                    std::string line = r.sector;
                    line.resize(32, ' ');
                    std::string example = r.example;
                    example.resize(20, ' ');
                    out << line << example << (r.in_group ? "yes    " : "no     ") << (r.in_groupoid ? "yes" : "no")
                        << "\n";
                }
            }
            return ok;
        }
    } catch (const Error& e) {
        return fail(e.code(), e.what(), detail::is_validation(e.code()) ? validation_error : internal_error);
    } catch (const std::exception& e) {
        return fail("internal", e.what(), internal_error);
    }
    return fail("usage", "no subcommand given", validation_error);
}

}  // namespace wigneroid::cli
