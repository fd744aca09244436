#pragma once

// Poincare and Wigner groupoid morphisms written in tetrad frames.
//
// A Poincare morphism (y, T_yx, x) is stored as the matrix Lambda with
// T_yx e_I(x) = Lambda^J_I e_J(y). Because both frames are orthonormal the
// isometry condition T^* eta_y = eta_x is the algebraic condition
// Lambda^T eta Lambda = eta. A Wigner morphism adds the source covector p_x;
// the target covector is derived from T^* p_y = p_x, i.e.
// p_y = Lambda^{-T} p_x = eta Lambda eta p_x.

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>
#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "wigneroid/errors.hpp"
#include "wigneroid/spacetime.hpp"

namespace wigneroid::groupoid {

using spacetime::ChartPoint;
using spacetime::Mat4;
using spacetime::MetricSpec;
using spacetime::TetradCovector;
using spacetime::Vec4;
using spacetime::minkowski_eta;

enum class LorentzComponent { Restricted, Full };

class LorentzMatrix {
public:
    static constexpr double default_tolerance = 1e-10;

    /// Validates Lambda^T eta Lambda = eta (relative to |Lambda|^2) and, for
    /// the restricted component, det = +1 and Lambda^0_0 >= 1.
    static LorentzMatrix from(const Mat4& m, LorentzComponent comp = LorentzComponent::Restricted,
                              double tol = default_tolerance) {
        const Mat4 eta = minkowski_eta();
        const double scale = std::max(1.0, m.squaredNorm());
        const double defect = (m.transpose() * eta * m - eta).norm();
        if (!(defect <= tol * scale)) {
            throw NotLorentzError("matrix does not preserve eta (defect " + std::to_string(defect) + ")");
        }
        if (comp == LorentzComponent::Restricted && !in_restricted_component(m)) {
            throw NotLorentzError("matrix is Lorentz but not in the restricted component");
        }
        return LorentzMatrix(m);
    }

    static LorentzMatrix identity() { return LorentzMatrix(Mat4::Identity()); }

    /// Pure boost with the given rapidity along spatial axis 1..3.
    static LorentzMatrix boost(int axis, double rapidity) {
        check_axis(axis);
        Mat4 m = Mat4::Identity();
        m(0, 0) = std::cosh(rapidity);
        m(axis, axis) = std::cosh(rapidity);
        m(0, axis) = std::sinh(rapidity);
        m(axis, 0) = std::sinh(rapidity);
        return LorentzMatrix(m);
    }

    /// Pure boost with velocity v (|v| < 1).
    static LorentzMatrix boost_velocity(const Eigen::Vector3d& v) {
        const double v2 = v.squaredNorm();
        if (!(v2 < 1.0)) throw NotLorentzError("boost velocity must satisfy |v| < 1");
        const double gamma = 1.0 / std::sqrt(1.0 - v2);
        Mat4 m = Mat4::Identity();
        m(0, 0) = gamma;
        m.block<1, 3>(0, 1) = gamma * v.transpose();
        m.block<3, 1>(1, 0) = gamma * v;
        if (v2 > 0.0) {
            m.block<3, 3>(1, 1) += (gamma - 1.0) * v * v.transpose() / v2;
        }
        return LorentzMatrix(m);
    }

    /// Right-handed rotation by `angle` about spatial axis 1..3.
    static LorentzMatrix rotation(int axis, double angle) {
        check_axis(axis);
        const int i = axis % 3 + 1;
        const int j = (axis + 1) % 3 + 1;
        Mat4 m = Mat4::Identity();
        m(i, i) = std::cos(angle);
        m(j, j) = std::cos(angle);
        m(i, j) = -std::sin(angle);
        m(j, i) = std::sin(angle);
        return LorentzMatrix(m);
    }

    /// exp(X) for X in so(1,3), i.e. X^T eta + eta X = 0.
    static LorentzMatrix exp_generator(const Mat4& x) {
        const Mat4 eta = minkowski_eta();
        if ((x.transpose() * eta + eta * x).norm() > 1e-12 * std::max(1.0, x.norm())) {
            throw NotLorentzError("exp_generator: argument is not in so(1,3)");
        }
        return from(Mat4(x.exp()));
    }

    /// Rotation (uniform Euler angles) times a boost with rapidity up to
    /// `max_rapidity` in a random direction.
    template <class Rng>
    static LorentzMatrix random_restricted(Rng& rng, double max_rapidity = 2.0) {
        std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
        std::uniform_real_distribution<double> rap(0.0, max_rapidity);
        std::normal_distribution<double> gauss;
        const Eigen::Vector3d dir = Eigen::Vector3d(gauss(rng), gauss(rng), gauss(rng)).normalized();
        const Eigen::Vector3d v = std::tanh(rap(rng)) * dir;
        const Mat4 m = rotation(3, angle(rng)).matrix() * rotation(1, angle(rng)).matrix() *
                       rotation(3, angle(rng)).matrix() * boost_velocity(v).matrix();
        return LorentzMatrix(m);
    }

    const Mat4& matrix() const noexcept { return m_; }
    double operator()(int i, int j) const { return m_(i, j); }

    bool restricted() const { return in_restricted_component(m_); }

    /// eta Lambda^T eta
    LorentzMatrix inverse() const {
        const Mat4 eta = minkowski_eta();
        return LorentzMatrix(eta * m_.transpose() * eta);
    }

    friend LorentzMatrix operator*(const LorentzMatrix& a, const LorentzMatrix& b) {
        return LorentzMatrix(a.m_ * b.m_);
    }

private:
    explicit LorentzMatrix(const Mat4& m) : m_(m) {}

    static bool in_restricted_component(const Mat4& m) {
        // det is +-1 and Lambda^0_0 is >= 1 or <= -1 on O(1,3); the midpoints
        // separate the components robustly.
        return m.determinant() > 0.0 && m(0, 0) > 0.0;
    }

    static void check_axis(int axis) {
        if (axis < 1 || axis > 3) throw BadParams("spatial axis must be 1, 2 or 3");
    }

    Mat4 m_;
};

/// p_tgt = Lambda^{-T} p_src, so that Lambda^T p_tgt = p_src.
inline TetradCovector transport_covector(const LorentzMatrix& lambda, const TetradCovector& p_src) {
    if (!lambda.restricted()) throw NotLorentzError("transport_covector requires a restricted Lorentz matrix");
    const Mat4 eta = minkowski_eta();
    return TetradCovector(Vec4(eta * lambda.matrix() * eta * p_src.p));
}

/// Validating overload for raw matrices.
inline TetradCovector transport_covector(const Mat4& lambda, const TetradCovector& p_src) {
    return transport_covector(LorentzMatrix::from(lambda), p_src);
}

/// Object of the Wigner groupoid: a chart point with a frame covector.
struct CotangentPoint {
    MetricSpec metric;
    ChartPoint x;
    TetradCovector p;
};

class PoincareMorphism {
public:
    PoincareMorphism(MetricSpec metric, ChartPoint tgt, LorentzMatrix lambda, ChartPoint src)
        : metric_(metric), tgt_(tgt), lambda_(std::move(lambda)), src_(src) {
        spacetime::check_chart_point(metric_, src_);
        spacetime::check_chart_point(metric_, tgt_);
    }

    const MetricSpec& metric() const noexcept { return metric_; }
    const ChartPoint& source() const noexcept { return src_; }
    const ChartPoint& target() const noexcept { return tgt_; }
    const LorentzMatrix& lambda() const noexcept { return lambda_; }

    /// Chart components of T_yx: e(y) Lambda e(x)^{-1}.
    Mat4 chart_matrix() const {
        const Mat4 ex = spacetime::tetrad_at(metric_, src_).e;
        const Mat4 ey = spacetime::tetrad_at(metric_, tgt_).e;
        return ey * lambda_.matrix() * ex.inverse();
    }

private:
    MetricSpec metric_;
    ChartPoint tgt_;
    LorentzMatrix lambda_;
    ChartPoint src_;
};

class WignerMorphism {
public:
    WignerMorphism(PoincareMorphism base, TetradCovector p_src) : base_(std::move(base)), p_src_(p_src) {
        if (!base_.lambda().restricted()) {
            throw NotLorentzError("Wigner morphisms use the restricted Lorentz group");
        }
    }

    const PoincareMorphism& base() const noexcept { return base_; }
    const LorentzMatrix& lambda() const noexcept { return base_.lambda(); }
    const TetradCovector& p_src() const noexcept { return p_src_; }
    TetradCovector p_tgt() const { return transport_covector(base_.lambda(), p_src_); }

    CotangentPoint source() const { return {base_.metric(), base_.source(), p_src_}; }
    CotangentPoint target() const { return {base_.metric(), base_.target(), p_tgt()}; }

private:
    PoincareMorphism base_;
    TetradCovector p_src_;
};

inline constexpr double covector_match_tolerance = 1e-10;

inline double covector_distance(const TetradCovector& a, const TetradCovector& b) {
    return (a.p - b.p).norm() / std::max(1.0, std::max(a.p.norm(), b.p.norm()));
}

/// beta o alpha. Requires t(alpha) = s(beta) exactly as chart points and
/// the transported covector of alpha to match p_src of beta.
inline WignerMorphism compose(const WignerMorphism& beta, const WignerMorphism& alpha) {
    const PoincareMorphism& a = alpha.base();
    const PoincareMorphism& b = beta.base();
    if (!(a.metric() == b.metric()) || !(a.target() == b.source())) {
        throw NonComposableError("target of the first morphism differs from the source of the second");
    }
    if (covector_distance(alpha.p_tgt(), beta.p_src()) > covector_match_tolerance) {
        throw CovectorMismatchError("transported covector does not match the source covector of the next morphism");
    }
    return WignerMorphism(PoincareMorphism(a.metric(), b.target(), b.lambda() * a.lambda(), a.source()),
                          alpha.p_src());
}

inline WignerMorphism inverse(const WignerMorphism& alpha) {
    const PoincareMorphism& a = alpha.base();
    return WignerMorphism(PoincareMorphism(a.metric(), a.source(), a.lambda().inverse(), a.target()),
                          alpha.p_tgt());
}

inline WignerMorphism unit(const CotangentPoint& xi) {
    return WignerMorphism(PoincareMorphism(xi.metric, xi.x, LorentzMatrix::identity(), xi.x), xi.p);
}

// ---------------------------------------------------------------------------
// Orbits and isotropy

struct MassivePlus { double m; };
struct MasslessPlus {};
struct Zero {};
struct Tachyonic { double m; };
struct MassiveMinus { double m; };
struct MasslessMinus {};

using OrbitClass = std::variant<MassivePlus, MasslessPlus, Zero, Tachyonic, MassiveMinus, MasslessMinus>;

/// Relative width of the null stratum: |p^2| <= orbit_tolerance * |p|_E^2.
inline constexpr double orbit_tolerance = 1e-9;

inline std::string orbit_tag(const OrbitClass& c) {
    static const char* const tags[] = {"massive_plus", "massless_plus", "zero",
                                       "tachyonic", "massive_minus", "massless_minus"};
    return tags[c.index()];
}

/// Mass of the orbit where it has one.
inline std::optional<double> orbit_mass(const OrbitClass& c) {
    if (auto* m = std::get_if<MassivePlus>(&c)) return m->m;
    if (auto* m = std::get_if<MassiveMinus>(&c)) return m->m;
    if (auto* m = std::get_if<Tachyonic>(&c)) return m->m;
    return std::nullopt;
}

inline bool same_orbit_type(const OrbitClass& a, const OrbitClass& b) { return a.index() == b.index(); }

inline OrbitClass classify_orbit(const TetradCovector& c, double tol = orbit_tolerance) {
    const double norm2 = c.p.squaredNorm();
    if (norm2 == 0.0) return Zero{};
    const double p2 = spacetime::p_squared(c);
    if (std::abs(p2) <= tol * norm2) {
        if (c[0] > 0.0) return MasslessPlus{};
        return MasslessMinus{};
    }
    if (p2 < 0.0) return Tachyonic{std::sqrt(-p2)};
    if (c[0] > 0.0) return MassivePlus{std::sqrt(p2)};
    return MassiveMinus{std::sqrt(p2)};
}

/// Exact classification for rational covectors; no tolerance involved.
/// Masses are returned as doubles (sqrt of the exact p^2).
inline OrbitClass classify_orbit(const std::array<mpq_class, 4>& p) {
    const mpq_class p2 = p[0] * p[0] - p[1] * p[1] - p[2] * p[2] - p[3] * p[3];
    const bool zero = p[0] == 0 && p[1] == 0 && p[2] == 0 && p[3] == 0;
    if (zero) return Zero{};
    const int s = sgn(p2);
    if (s == 0) return sgn(p[0]) > 0 ? OrbitClass{MasslessPlus{}} : OrbitClass{MasslessMinus{}};
    if (s < 0) return Tachyonic{std::sqrt(-p2.get_d())};
    if (sgn(p[0]) > 0) return MassivePlus{std::sqrt(p2.get_d())};
    return MassiveMinus{std::sqrt(p2.get_d())};
}

enum class IsotropyGroup { SO3, E2, SO0_13, Unsupported };

inline std::string to_string(IsotropyGroup g) {
    switch (g) {
        case IsotropyGroup::SO3: return "SO(3)";
        case IsotropyGroup::E2: return "E(2)";
        case IsotropyGroup::SO0_13: return "SO0(1,3)";
        case IsotropyGroup::Unsupported: return "unsupported";
    }
    return "unsupported";
}

/// Past components share the isotropy type of their future counterparts.
inline IsotropyGroup isotropy_type(const OrbitClass& c) {
    return std::visit(
        [](const auto& o) {
            using T = std::decay_t<decltype(o)>;
            if constexpr (std::is_same_v<T, MassivePlus> || std::is_same_v<T, MassiveMinus>) {
                return IsotropyGroup::SO3;
            } else if constexpr (std::is_same_v<T, MasslessPlus> || std::is_same_v<T, MasslessMinus>) {
                return IsotropyGroup::E2;
            } else if constexpr (std::is_same_v<T, Zero>) {
                return IsotropyGroup::SO0_13;
            } else {
                return IsotropyGroup::Unsupported;
            }
        },
        c);
}

inline bool stabilizer_check(const LorentzMatrix& lambda, const TetradCovector& p,
                             double tol = covector_match_tolerance) {
    return covector_distance(transport_covector(lambda, p), p) <= tol;
}

/// Standard basis of so(1,3): rotations J_1..J_3 then boosts K_1..K_3.
inline std::array<Mat4, 6> lorentz_algebra_basis() {
    std::array<Mat4, 6> basis;
    for (int a = 1; a <= 3; ++a) {
        const int i = a % 3 + 1;
        const int j = (a + 1) % 3 + 1;
        Mat4 rot = Mat4::Zero();
        rot(i, j) = -1.0;
        rot(j, i) = 1.0;
        basis[a - 1] = rot;
        Mat4 boost = Mat4::Zero();
        boost(0, a) = 1.0;
        boost(a, 0) = 1.0;
        basis[a + 2] = boost;
    }
    return basis;
}

/// Orthonormal (w.r.t. the coefficient inner product) basis of the
/// subalgebra of so(1,3) whose exponentials fix p under transport.
/// Three generators for a null covector (the e(2) little algebra), three for
/// a timelike covector (so(3)), six for p = 0.
inline std::vector<Mat4> stabilizer_generators(const TetradCovector& p) {
    // Transport fixes p iff Lambda k = k for the vector k = eta p.
    const Vec4 k = minkowski_eta() * p.p;
    const auto basis = lorentz_algebra_basis();
    Eigen::Matrix<double, 4, 6> action;
    for (int a = 0; a < 6; ++a) action.col(a) = basis[a] * k;
    Eigen::JacobiSVD<Eigen::Matrix<double, 4, 6>> svd(action, Eigen::ComputeFullV);
    const double cutoff = 1e-12 * std::max(1.0, k.norm());
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i) {
        if (svd.singularValues()(i) > cutoff) ++rank;
    }
    std::vector<Mat4> generators;
    const auto& v = svd.matrixV();
    for (int col = rank; col < 6; ++col) {
        Mat4 x = Mat4::Zero();
        for (int a = 0; a < 6; ++a) x += v(a, col) * basis[a];
        generators.push_back(x);
    }
    return generators;
}

}  // namespace wigneroid::groupoid
