#pragma once

// The projective covering group of E(2): the universal cover of the
// oscillator group, globally parametrised by (s, a, phi) in R x R^2 x R with
//
//   (s,a,phi)(s',a',phi') = (s + s' + 1/2 a x R_phi a', a + R_phi a', phi + phi')
//
// where a x b = a_x b_y - a_y b_x. The angle phi is never reduced; reduction
// mod 2 pi happens only in the projection to E(2).

#include <array>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "wigneroid/errors.hpp"

namespace wigneroid::covering {

using Vec2 = Eigen::Vector2d;

inline Eigen::Matrix2d rotation2(double phi) {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    Eigen::Matrix2d r;
    r << c, -s, s, c;
    return r;
}

inline double cross(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

struct OscElement {
    double s = 0.0;
    Vec2 a = Vec2::Zero();
    double phi = 0.0;

    OscElement() = default;
    OscElement(double s_, Vec2 a_, double phi_) : s(s_), a(std::move(a_)), phi(phi_) {}
    OscElement(double s_, double ax, double ay, double phi_) : s(s_), a(ax, ay), phi(phi_) {}

    static OscElement identity() { return {}; }
};

/// Element (a, R_theta) of E(2) with theta in [0, 2 pi).
struct E2Element {
    Vec2 a = Vec2::Zero();
    double theta = 0.0;
};

/// Largest componentwise difference, the residual used by the group-law checks.
inline double distance(const OscElement& g, const OscElement& h) {
    return std::max({std::abs(g.s - h.s), (g.a - h.a).cwiseAbs().maxCoeff(), std::abs(g.phi - h.phi)});
}

inline OscElement osc_mul(const OscElement& g, const OscElement& h) {
    const Vec2 rotated = rotation2(g.phi) * h.a;
    return {g.s + h.s + 0.5 * cross(g.a, rotated), g.a + rotated, g.phi + h.phi};
}

inline OscElement operator*(const OscElement& g, const OscElement& h) { return osc_mul(g, h); }

/// (s, a, phi)^{-1} = (-s, -R_{-phi} a, -phi)
inline OscElement osc_inv(const OscElement& g) { return {-g.s, -(rotation2(-g.phi) * g.a), -g.phi}; }

/// Floor-based remainder into [0, 2 pi); anything rounding to 2 pi maps to 0.
inline double reduce_angle(double theta) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = theta - two_pi * std::floor(theta / two_pi);
    if (r >= two_pi || r < 0.0) r = 0.0;
    return r;
}

inline E2Element e2_mul(const E2Element& g, const E2Element& h) {
    return {g.a + rotation2(g.theta) * h.a, reduce_angle(g.theta + h.theta)};
}

/// Difference of two E(2) elements; angles compared on the circle.
inline double e2_distance(const E2Element& g, const E2Element& h) {
    const double d = std::remainder(g.theta - h.theta, 2.0 * std::numbers::pi);
    return std::max((g.a - h.a).cwiseAbs().maxCoeff(), std::abs(d));
}

/// p(s, a, phi) = (a, R_phi)
inline E2Element project(const OscElement& g) { return {g.a, reduce_angle(g.phi)}; }

inline bool in_heisenberg(const OscElement& h) { return h.phi == 0.0; }

/// g h g^{-1} for h in the Heisenberg subgroup H(2) = {(s, a, 0)}.
inline OscElement conjugate_heisenberg(const OscElement& g, const OscElement& h) {
    if (!in_heisenberg(h)) throw NotInSubgroupError("conjugate_heisenberg: h must have phi = 0");
    return osc_mul(osc_mul(g, h), osc_inv(g));
}

/// g = h r with h = (s, a, 0) in H(2) and r = (0, 0, phi) in R_phi.
inline std::pair<OscElement, OscElement> factor_semidirect(const OscElement& g) {
    return {OscElement(g.s, g.a, 0.0), OscElement(0.0, Vec2::Zero(), g.phi)};
}

/// Structure constants of the group's Lie algebra by central finite
/// differences of conjugation at the identity:
///   [X, Y] = d^2/dt du (exp(tX) exp(uY) exp(-tX)) at 0.
/// Basis order (J, P1, P2, E) with J ~ phi, P1 ~ a_x, P2 ~ a_y, E ~ s.
/// Result indexed [k][i][j] = c^k_{ij}.
inline std::array<std::array<std::array<double, 4>, 4>, 4> numerical_structure_constants(double h = 1e-4) {
    auto direction = [](int basis, double t) {
        switch (basis) {
            case 0: return OscElement(0.0, 0.0, 0.0, t);
            case 1: return OscElement(0.0, t, 0.0, 0.0);
            case 2: return OscElement(0.0, 0.0, t, 0.0);
            default: return OscElement(t, 0.0, 0.0, 0.0);
        }
    };
    auto coords = [](const OscElement& g) { return std::array<double, 4>{g.phi, g.a.x(), g.a.y(), g.s}; };
    std::array<std::array<std::array<double, 4>, 4>, 4> c{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            auto conj = [&](double t, double u) {
                const OscElement x = direction(i, t);
                return coords(osc_mul(osc_mul(x, direction(j, u)), osc_inv(x)));
            };
            const auto pp = conj(h, h);
            const auto pm = conj(h, -h);
            const auto mp = conj(-h, h);
            const auto mm = conj(-h, -h);
            for (int k = 0; k < 4; ++k) c[k][i][j] = (pp[k] - pm[k] - mp[k] + mm[k]) / (4.0 * h * h);
        }
    }
    return c;
}

}  // namespace wigneroid::covering
