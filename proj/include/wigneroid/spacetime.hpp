#pragma once

// Lorentzian metrics and orthonormal tetrads on the built-in charts.
//
// Signature convention is (+,-,-,-). Geometric units, G = c = 1.
// Minkowski chart coordinates are (t, x, y, z); Schwarzschild uses the
// Kruskal chart (U, V, theta, phi) with r(U V) defined implicitly by
//     U V = (1 - r/2M) exp(r/2M).

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "wigneroid/errors.hpp"

namespace wigneroid::spacetime {

using Mat4 = Eigen::Matrix4d;
using Vec4 = Eigen::Vector4d;

/// diag(1, -1, -1, -1)
inline Mat4 minkowski_eta() {
    return Eigen::Vector4d(1.0, -1.0, -1.0, -1.0).asDiagonal();
}

enum class MetricKind { Minkowski, SchwarzschildKruskal };

class MetricSpec {
public:
    static MetricSpec minkowski() { return MetricSpec(MetricKind::Minkowski, 0.0); }

    static MetricSpec schwarzschild_kruskal(double mass) {
        if (!(mass > 0.0) || !std::isfinite(mass)) {
            throw BadParams("schwarzschild mass parameter must be positive and finite");
        }
        return MetricSpec(MetricKind::SchwarzschildKruskal, mass);
    }

    MetricKind kind() const noexcept { return kind_; }
    /// Zero for Minkowski.
    double mass() const noexcept { return mass_; }

    friend bool operator==(const MetricSpec&, const MetricSpec&) = default;

private:
    MetricSpec(MetricKind kind, double mass) : kind_(kind), mass_(mass) {}

    MetricKind kind_;
    double mass_;
};

struct ChartPoint {
    std::array<double, 4> coords{};

    double operator[](std::size_t i) const { return coords[i]; }
    friend bool operator==(const ChartPoint&, const ChartPoint&) = default;
};

/// Column I holds the chart components e^mu_I of frame vector e_I.
struct TetradFrame {
    Mat4 e;
};

/// Covector components p_I in the dual tetrad basis.
struct TetradCovector {
    Vec4 p = Vec4::Zero();

    TetradCovector() = default;
    explicit TetradCovector(const Vec4& v) : p(v) {}
    TetradCovector(double p0, double p1, double p2, double p3) : p(p0, p1, p2, p3) {}

    double operator[](Eigen::Index i) const { return p[i]; }
};

/// eta^{-1}(p, p) in frame components: p0^2 - p1^2 - p2^2 - p3^2.
inline double p_squared(const TetradCovector& c) {
    const Vec4& p = c.p;
    return p[0] * p[0] - p[1] * p[1] - p[2] * p[2] - p[3] * p[3];
}

namespace detail {

// (1 - x) e^x with x = r / 2M. Strictly decreasing on x > 0, from 1 to -inf.
inline double kruskal_product(double x) { return (1.0 - x) * std::exp(x); }

inline std::string fmt_point(const ChartPoint& x) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << x[0] << ", " << x[1] << ", " << x[2] << ", " << x[3] << ")";
    return os.str();
}

}  // namespace detail

/// Areal radius r solving U V = (1 - r/2M) e^{r/2M}.
///
/// Safeguarded Newton on x = r/2M inside a bracket [lo, hi] that is grown
/// until it contains the root. Falls back to bisection whenever a Newton
/// step leaves the bracket.
inline double kruskal_radius(double mass, double u, double v) {
    if (!(mass > 0.0)) throw BadParams("kruskal_radius: mass must be positive");
    const double uv = u * v;
    if (!std::isfinite(uv)) throw ChartDomainError("kruskal_radius: non-finite U*V");
    if (uv >= 1.0) {
        throw ChartDomainError("kruskal_radius: U*V >= 1 lies beyond the r = 0 singularity");
    }
    if (uv == 0.0) return 2.0 * mass;

    // f(x) = (1-x)e^x - uv, f(lo) > 0 > f(hi).
    auto f = [uv](double x) { return detail::kruskal_product(x) - uv; };
    double lo = 0.0;
    double hi = 1.0;
    if (uv < 0.0) {
        lo = 1.0;
        hi = 2.0;
        while (f(hi) > 0.0) {
            lo = hi;
            hi *= 2.0;
            if (hi > 1e4) throw ConvergenceError("kruskal_radius: failed to bracket root");
        }
    }

    double x = uv > 0.0 ? 0.5 * (lo + hi) : hi;
    for (int iter = 0; iter < 200; ++iter) {
        const double fx = f(x);
        if (fx == 0.0) return 2.0 * mass * x;
        if (fx > 0.0) {
            lo = x;
        } else {
            hi = x;
        }
        const double dfx = -x * std::exp(x);
        double next = x - fx / dfx;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - x) <= 4.0 * std::numeric_limits<double>::epsilon() * next) {
            return 2.0 * mass * next;
        }
        x = next;
    }
    throw ConvergenceError("kruskal_radius: Newton iteration did not converge");
}

/// Chart point (U, V, theta, phi) at areal radius r. `boost` moves the point
/// along the hyperbola U V = const (U scales by e^{boost}, V by e^{-boost}).
inline ChartPoint kruskal_point_at_radius(double mass, double r, double boost, double theta,
                                          double phi) {
    if (!(r > 0.0)) throw ChartDomainError("kruskal_point_at_radius: r must be positive");
    const double uv = detail::kruskal_product(r / (2.0 * mass));
    const double root = std::sqrt(std::abs(uv));
    const double u = root * std::exp(boost);
    double v = root * std::exp(-boost);
    if (uv < 0.0) v = -v;
    return ChartPoint{{u, v, theta, phi}};
}

namespace detail {

inline void check_chart(const MetricSpec& spec, const ChartPoint& x) {
    for (double c : x.coords) {
        if (!std::isfinite(c)) throw ChartDomainError("non-finite chart coordinate " + fmt_point(x));
    }
    if (spec.kind() == MetricKind::Minkowski) return;
    if (x[0] * x[1] >= 1.0) {
        throw ChartDomainError("Kruskal chart requires U*V < 1, got " + fmt_point(x));
    }
    if (!(x[2] > 0.0 && x[2] < std::numbers::pi)) {
        throw ChartDomainError("Kruskal chart requires 0 < theta < pi, got " + fmt_point(x));
    }
}

}  // namespace detail

/// Validates `x` against the chart of `spec`, throwing ChartDomainError.
inline void check_chart_point(const MetricSpec& spec, const ChartPoint& x) {
    detail::check_chart(spec, x);
}

/// Metric components g_{mu nu}(x) in chart coordinates.
inline Mat4 metric_at(const MetricSpec& spec, const ChartPoint& x) {
    detail::check_chart(spec, x);
    if (spec.kind() == MetricKind::Minkowski) return minkowski_eta();

    const double m = spec.mass();
    const double r = kruskal_radius(m, x[0], x[1]);
    // -(32 M^3 / r) e^{-r/2M} dU (x)_S dV, with (x)_S = dU dV + dV dU.
    const double g_uv = -32.0 * m * m * m / r * std::exp(-r / (2.0 * m));
    const double s = std::sin(x[2]);
    Mat4 g = Mat4::Zero();
    g(0, 1) = g_uv;
    g(1, 0) = g_uv;
    g(2, 2) = -r * r;
    g(3, 3) = -r * r * s * s;
    return g;
}

/// Orthonormal frame from an arbitrary (1,3) metric by Gram-Schmidt on the
/// coordinate frame, timelike vector first. Used for metrics without a
/// closed-form tetrad; deterministic for a given g.
inline TetradFrame gram_schmidt_tetrad(const Mat4& g) {
    const Mat4 eta = minkowski_eta();
    auto dot = [&g](const Vec4& a, const Vec4& b) { return a.dot(g * b); };

    // Candidates: coordinate vectors, then pairwise differences and sums.
    std::vector<Vec4> candidates;
    for (int i = 0; i < 4; ++i) candidates.push_back(Vec4::Unit(i));
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            candidates.push_back(Vec4::Unit(j) - Vec4::Unit(i));
            candidates.push_back(Vec4::Unit(j) + Vec4::Unit(i));
        }
    }
    const double scale = g.cwiseAbs().maxCoeff();
    const double tiny = 1e-12 * scale;

    TetradFrame frame{Mat4::Zero()};
    int filled = 0;
    auto orthogonalize = [&](Vec4 w) {
        for (int k = 0; k < filled; ++k) {
            const Vec4 ek = frame.e.col(k);
            w -= eta(k, k) * dot(w, ek) * ek;
        }
        return w;
    };

    for (const Vec4& c : candidates) {
        if (dot(c, c) > tiny) {
            frame.e.col(0) = c / std::sqrt(dot(c, c));
            filled = 1;
            break;
        }
    }
    if (filled == 0) throw ChartDomainError("gram_schmidt_tetrad: no timelike direction");

    for (const Vec4& c : candidates) {
        if (filled == 4) break;
        const Vec4 w = orthogonalize(c);
        const double n = dot(w, w);
        if (n < -tiny) {
            frame.e.col(filled) = w / std::sqrt(-n);
            ++filled;
        }
    }
    if (filled != 4) throw ChartDomainError("gram_schmidt_tetrad: metric is not of signature (1,3)");
    return frame;
}

/// Tetrad e_I(x) with e^T g e = eta.
///
/// Kruskal frame, with A = sqrt(r / 32 M^3) e^{r/4M} / sqrt(2):
///   e_0 = A (d_V - d_U),  e_1 = A (d_V + d_U),
///   e_2 = (1/r) d_theta,  e_3 = 1/(r sin theta) d_phi.
inline TetradFrame tetrad_at(const MetricSpec& spec, const ChartPoint& x) {
    detail::check_chart(spec, x);
    if (spec.kind() == MetricKind::Minkowski) return TetradFrame{Mat4::Identity()};

    const double m = spec.mass();
    const double r = kruskal_radius(m, x[0], x[1]);
    const double a = std::sqrt(r / (32.0 * m * m * m)) * std::exp(r / (4.0 * m)) / std::numbers::sqrt2;
    Mat4 e = Mat4::Zero();
    e(0, 0) = -a;
    e(1, 0) = a;
    e(0, 1) = a;
    e(1, 1) = a;
    e(2, 2) = 1.0 / r;
    e(3, 3) = 1.0 / (r * std::sin(x[2]));
    return TetradFrame{e};
}

/// Frobenius norm of e^T g e - eta.
inline double tetrad_residual(const Mat4& g, const TetradFrame& frame) {
    return (frame.e.transpose() * g * frame.e - minkowski_eta()).norm();
}

}  // namespace wigneroid::spacetime
