#pragma once

// Finite-dimensional witnesses for the representations named by the
// classification, and a finite model of induction on transitive groupoids.
//
//  * TruncatedSvN   - Stone-von Neumann operators on the first N Fock states
//  * CircleRep      - continuous-spin representation on an M-point grid of S^1
//  * SpinRep        - spin-s representation of su(2)
//  * GroupRep / GroupoidRep - unitary representations of finite groups and of
//    the gauge groupoids built from them, with induction, restriction,
//    intertwiners and invariant-subbundle search.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "wigneroid/covering.hpp"
#include "wigneroid/errors.hpp"
#include "wigneroid/gauge_groupoid.hpp"

namespace wigneroid::repcheck {

using cd = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using groupoid::FiniteGroup;
using groupoid::GaugeGroupoid;
using groupoid::GaugeMorphism;

inline constexpr cd I_unit{0.0, 1.0};

inline double unitarity_residual(const CMat& u) {
    return (u.adjoint() * u - CMat::Identity(u.cols(), u.cols())).norm();
}

// ---------------------------------------------------------------------------
// Truncated Stone-von Neumann representation

struct TruncatedSvN {
    int N = 0;
    double mu = 0.0;
    CMat a;        ///< annihilation, a(n-1, n) = sqrt(n)
    CMat Q;        ///< (a + a^dag) / sqrt 2
    CMat P;        ///< -i (a - a^dag) / sqrt 2
    CMat P1;       ///< sqrt|mu| Q
    CMat P2;       ///< sgn(mu) sqrt|mu| P
    CMat E;        ///< mu 1
    CMat J;        ///< (Q^2 + P^2) / 2, truncated: last diagonal entry (N-1)/2
    CMat J_exact;  ///< diag(n + 1/2)
};

inline TruncatedSvN build_svn(double mu, int N) {
    if (N < 2) throw BadParams("build_svn: truncation N must be at least 2");
    if (mu == 0.0 || !std::isfinite(mu)) throw BadParams("build_svn: mu must be finite and nonzero");
    TruncatedSvN r;
    r.N = N;
    r.mu = mu;
    r.a = CMat::Zero(N, N);
    for (int n = 1; n < N; ++n) r.a(n - 1, n) = std::sqrt(static_cast<double>(n));
    const CMat ad = r.a.adjoint();
    r.Q = (r.a + ad) / std::numbers::sqrt2;
    r.P = -I_unit * (r.a - ad) / std::numbers::sqrt2;
    const double root = std::sqrt(std::abs(mu));
    r.P1 = root * r.Q;
    r.P2 = (mu > 0.0 ? 1.0 : -1.0) * root * r.P;
    r.E = mu * CMat::Identity(N, N);
    r.J = 0.5 * (r.Q * r.Q + r.P * r.P);
    r.J_exact = CMat::Zero(N, N);
    for (int n = 0; n < N; ++n) r.J_exact(n, n) = n + 0.5;
    return r;
}

/// The truncation defect of [P1, P2]: i mu (1 - N e_{N-1} e_{N-1}^T).
inline CMat svn_expected_commutator(const TruncatedSvN& r) {
    CMat c = I_unit * r.mu * CMat::Identity(r.N, r.N);
    c(r.N - 1, r.N - 1) = I_unit * r.mu * (1.0 - r.N);
    return c;
}

/// J shifted by the R_phi character e^{i c0 phi}: spectrum n + 1/2 + c0.
inline CMat svn_angular_operator(const TruncatedSvN& r, double c0) {
    return r.J_exact + c0 * CMat::Identity(r.N, r.N);
}

// ---------------------------------------------------------------------------
// Continuous-spin representation on a grid of the circle

struct CircleRep {
    int M;
    double rho;
    double phi0;

    CircleRep(int grid, double rho_, double phi0_) : M(grid), rho(rho_), phi0(phi0_) {
        if (M < 3) throw BadParams("circle grid needs M >= 3");
        if (!(rho > 0.0)) throw BadParams("circle representation needs rho > 0");
    }

    double theta(int k) const { return 2.0 * std::numbers::pi * k / M; }
};

/// (T_a f)(theta_k) = e^{i rho a . n(theta_k)} f(theta_k)
inline CMat circle_translation(const CircleRep& rep, const Eigen::Vector2d& a) {
    CMat t = CMat::Zero(rep.M, rep.M);
    for (int k = 0; k < rep.M; ++k) {
        const double th = rep.theta(k);
        t(k, k) = std::polar(1.0, rep.rho * (a.x() * std::cos(th) + a.y() * std::sin(th)));
    }
    return t;
}

/// (R_phi f)(theta_k) = e^{i phi0 phi} f(theta_{k-j}) for phi = 2 pi j / M.
inline CMat circle_rotation(const CircleRep& rep, long j) {
    const double phase = 2.0 * std::numbers::pi * rep.phi0 * (static_cast<double>(j) / rep.M);
    const cd c = std::polar(1.0, phase);
    const long m = rep.M;
    CMat r = CMat::Zero(rep.M, rep.M);
    for (long k = 0; k < m; ++k) {
        const long src = ((k - j) % m + m) % m;
        r(k, src) = c;
    }
    return r;
}

/// Operator of an element (s, a, phi) of the covering group with phi on the
/// grid: T_a R_phi. The central coordinate s acts trivially (mu = 0).
inline CMat circle_element(const CircleRep& rep, const covering::OscElement& g) {
    const double steps = g.phi * rep.M / (2.0 * std::numbers::pi);
    const double j = std::round(steps);
    if (std::abs(steps - j) > 1e-9 * std::max(1.0, std::abs(steps))) {
        throw BadParams("circle_element: rotation angle is not a multiple of 2 pi / M");
    }
    return circle_translation(rep, g.a) * circle_rotation(rep, static_cast<long>(j));
}

// ---------------------------------------------------------------------------
// su(2)

struct SpinRep {
    double s = 0.0;
    CMat Jx, Jy, Jz;

    int dim() const { return static_cast<int>(Jz.rows()); }
};

/// Basis |s, m> ordered m = s, s-1, ..., -s.
inline SpinRep build_spin(double s) {
    if (!(s >= 0.0) || 2.0 * s != std::round(2.0 * s)) throw BadParams("spin must be a non-negative half-integer");
    const int d = static_cast<int>(std::lround(2.0 * s)) + 1;
    CMat jz = CMat::Zero(d, d);
    CMat jp = CMat::Zero(d, d);
    for (int k = 0; k < d; ++k) {
        const double m = s - k;
        jz(k, k) = m;
        if (k > 0) jp(k - 1, k) = std::sqrt(s * (s + 1.0) - m * (m + 1.0));
    }
    const CMat jm = jp.adjoint();
    return {s, (jp + jm) / 2.0, (jp - jm) / (2.0 * I_unit), jz};
}

/// exp(-i angle n.J) for a unit axis n.
inline CMat spin_rotation(const SpinRep& rep, const Eigen::Vector3d& axis, double angle) {
    const Eigen::Vector3d n = axis.normalized();
    const CMat gen = n.x() * rep.Jx + n.y() * rep.Jy + n.z() * rep.Jz;
    return CMat(-I_unit * angle * gen).exp();
}

// ---------------------------------------------------------------------------
// Finite group representations

class GroupRep {
public:
    /// Validates unitarity of every matrix and the homomorphism property.
    GroupRep(FiniteGroup group, std::vector<CMat> mats, double tol = 1e-10)
        : group_(std::move(group)), mats_(std::move(mats)) {
        if (static_cast<int>(mats_.size()) != group_.order()) throw BadParams("one matrix per group element required");
        const auto d = mats_.front().rows();
        for (const auto& m : mats_) {
            if (m.rows() != d || m.cols() != d) throw BadParams("representation matrices must be square of equal size");
            if (unitarity_residual(m) > tol) throw NotUnitaryError("representation matrix is not unitary");
        }
        for (int a = 0; a < group_.order(); ++a) {
            for (int b = 0; b < group_.order(); ++b) {
                if ((mats_[a] * mats_[b] - mats_[group_.mul(a, b)]).norm() > tol) {
                    throw BadParams("matrices do not form a homomorphism");
                }
            }
        }
    }

    const FiniteGroup& group() const noexcept { return group_; }
    int dim() const { return static_cast<int>(mats_.front().rows()); }
    const CMat& operator()(int g) const { return mats_.at(g); }
    const std::vector<CMat>& matrices() const noexcept { return mats_; }

private:
    FiniteGroup group_;
    std::vector<CMat> mats_;
};

inline GroupRep trivial_rep(const FiniteGroup& g, int dim = 1) {
    return GroupRep(g, std::vector<CMat>(g.order(), CMat::Identity(dim, dim)));
}

/// chi_q(k) = e^{2 pi i q k / n} on Z/n.
inline GroupRep cyclic_character(int n, int q) {
    std::vector<CMat> mats;
    for (int k = 0; k < n; ++k) mats.push_back(CMat::Constant(1, 1, std::polar(1.0, 2.0 * std::numbers::pi * q * k / n)));
    return GroupRep(FiniteGroup::cyclic(n), std::move(mats));
}

inline GroupRep s3_sign() {
    const auto perms = FiniteGroup::s3_permutations();
    std::vector<CMat> mats;
    for (const auto& p : perms) {
        int inversions = 0;
        for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j) inversions += p[i] > p[j];
        }
        mats.push_back(CMat::Constant(1, 1, inversions % 2 == 0 ? 1.0 : -1.0));
    }
    return GroupRep(FiniteGroup::symmetric3(), std::move(mats));
}

/// Permutation action restricted to the complement of (1,1,1).
inline GroupRep s3_standard() {
    Eigen::Matrix<double, 2, 3> basis;
    basis << 1.0 / std::numbers::sqrt2, -1.0 / std::numbers::sqrt2, 0.0,
        1.0 / std::sqrt(6.0), 1.0 / std::sqrt(6.0), -2.0 / std::sqrt(6.0);
    std::vector<CMat> mats;
    for (const auto& p : FiniteGroup::s3_permutations()) {
        Eigen::Matrix3d perm = Eigen::Matrix3d::Zero();
        for (int i = 0; i < 3; ++i) perm(p[i], i) = 1.0;
        mats.push_back((basis * perm * basis.transpose()).cast<cd>());
    }
    return GroupRep(FiniteGroup::symmetric3(), std::move(mats));
}

inline GroupRep regular_rep(const FiniteGroup& g) {
    std::vector<CMat> mats;
    for (int a = 0; a < g.order(); ++a) {
        CMat m = CMat::Zero(g.order(), g.order());
        for (int b = 0; b < g.order(); ++b) m(g.mul(a, b), b) = 1.0;
        mats.push_back(m);
    }
    return GroupRep(g, std::move(mats));
}

inline GroupRep direct_sum(const GroupRep& x, const GroupRep& y) {
    std::vector<CMat> mats;
    const int d = x.dim() + y.dim();
    for (int g = 0; g < x.group().order(); ++g) {
        CMat m = CMat::Zero(d, d);
        m.topLeftCorner(x.dim(), x.dim()) = x(g);
        m.bottomRightCorner(y.dim(), y.dim()) = y(g);
        mats.push_back(m);
    }
    return GroupRep(x.group(), std::move(mats));
}

/// sum_g |chi(g)|^2 / |G|, the dimension of the commutant.
inline double character_norm(const GroupRep& t) {
    double s = 0.0;
    for (const auto& m : t.matrices()) s += std::norm(m.trace());
    return s / t.group().order();
}

namespace detail {

/// Orthonormal basis (as matrices) of {X : A_g X = X B_g for all g}.
inline std::vector<CMat> intertwiner_space(const std::vector<CMat>& a, const std::vector<CMat>& b) {
    const Eigen::Index da = a.front().rows();
    const Eigen::Index db = b.front().rows();
    const Eigen::Index unknowns = da * db;
    CMat system(static_cast<Eigen::Index>(a.size()) * unknowns, unknowns);
    // vec(A X - X B) = (I (x) A - B^T (x) I) vec(X), column-major vec.
    for (std::size_t g = 0; g < a.size(); ++g) {
        CMat block = CMat::Zero(unknowns, unknowns);
        for (Eigen::Index col = 0; col < db; ++col) {
            block.block(col * da, col * da, da, da) += a[g];
        }
        for (Eigen::Index i = 0; i < db; ++i) {
            for (Eigen::Index j = 0; j < db; ++j) {
                block.block(j * da, i * da, da, da) -= b[g](i, j) * CMat::Identity(da, da);
            }
        }
        system.block(static_cast<Eigen::Index>(g) * unknowns, 0, unknowns, unknowns) = block;
    }
    Eigen::JacobiSVD<CMat> svd(system, Eigen::ComputeFullV);
    const double cutoff = 1e-9 * std::max(1.0, svd.singularValues().size() ? svd.singularValues()(0) : 1.0);
    std::vector<CMat> out;
    for (Eigen::Index k = 0; k < unknowns; ++k) {
        if (k < svd.singularValues().size() && svd.singularValues()(k) > cutoff) continue;
        const Eigen::VectorXcd v = svd.matrixV().col(k);
        out.push_back(Eigen::Map<const CMat>(v.data(), da, db));
    }
    return out;
}

}  // namespace detail

/// Basis of the commutant {C : C T(g) = T(g) C}.
inline std::vector<CMat> commutant_basis(const GroupRep& t) {
    return detail::intertwiner_space(t.matrices(), t.matrices());
}

inline int commutant_dimension(const GroupRep& t) { return static_cast<int>(commutant_basis(t).size()); }

/// Unitary V with V T1(g) V^dag = T2(g), if one exists.
inline std::optional<CMat> find_group_intertwiner(const GroupRep& t1, const GroupRep& t2, double tol = 1e-9) {
    if (t1.dim() != t2.dim() || t1.group().order() != t2.group().order()) return std::nullopt;
    const auto space = detail::intertwiner_space(t2.matrices(), t1.matrices());
    if (space.empty()) return std::nullopt;
    std::mt19937_64 rng(0x5eed);
    std::normal_distribution<double> gauss;
    CMat v = CMat::Zero(t1.dim(), t1.dim());
    for (const auto& x : space) v += cd(gauss(rng), gauss(rng)) * x;
    Eigen::JacobiSVD<CMat> svd(v, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (svd.singularValues().minCoeff() < 1e-8 * svd.singularValues().maxCoeff()) return std::nullopt;
    // Polar part of an intertwiner of unitary representations intertwines.
    const CMat u = svd.matrixU() * svd.matrixV().adjoint();
    for (int g = 0; g < t1.group().order(); ++g) {
        if ((u * t1(g) * u.adjoint() - t2(g)).norm() > tol) return std::nullopt;
    }
    return u;
}

// ---------------------------------------------------------------------------
// Groupoid representations

class GroupoidRep {
public:
    /// `assignment[G.index(alpha)]` is the unitary attached to alpha.
    GroupoidRep(GaugeGroupoid groupoid, std::vector<CMat> assignment, double tol = 1e-10)
        : g_(std::move(groupoid)), phi_(std::move(assignment)) {
        if (static_cast<int>(phi_.size()) != g_.n_morphisms()) throw BadParams("one matrix per morphism required");
        for (const auto& m : phi_) {
            if (m.rows() != phi_.front().rows() || m.cols() != m.rows()) throw BadParams("fiber dimensions differ");
            if (unitarity_residual(m) > tol) throw NotUnitaryError("groupoid representation matrix is not unitary");
        }
    }

    const GaugeGroupoid& groupoid() const noexcept { return g_; }
    int fiber_dim() const { return static_cast<int>(phi_.front().rows()); }
    const CMat& operator()(const GaugeMorphism& a) const { return phi_.at(g_.index(a)); }
    const std::vector<CMat>& assignment() const noexcept { return phi_; }

private:
    GaugeGroupoid g_;
    std::vector<CMat> phi_;
};

/// max || Phi(beta o alpha) - Phi(beta) Phi(alpha) || over composable pairs.
inline double functoriality_residual(const GroupoidRep& rep) {
    const auto& G = rep.groupoid();
    double worst = 0.0;
    for (const auto& alpha : G.morphisms()) {
        for (int g = 0; g < G.group().order(); ++g) {
            for (int z = 0; z < G.n_objects(); ++z) {
                const GaugeMorphism beta{z, g, alpha.y};
                worst = std::max(worst, (rep(G.compose(beta, alpha)) - rep(beta) * rep(alpha)).norm());
            }
        }
    }
    return worst;
}

/// Induced representation from the isotropy group at `x0` using the section
/// sigma_x = (x, h_x, x0): Phi(y, g, x) = T(h_y^{-1} g h_x). An empty
/// section means h_x = e, so Phi(y, g, x) = T(g).
inline GroupoidRep induce_groupoid_rep(const GaugeGroupoid& G, const GroupRep& t, int x0 = 0,
                                       std::vector<int> section = {}) {
    if (t.group().order() != G.group().order()) throw BadParams("representation is of a different group");
    if (x0 < 0 || x0 >= G.n_objects()) throw BadParams("base point out of range");
    const auto& grp = G.group();
    if (section.empty()) section.assign(G.n_objects(), grp.identity());
    if (static_cast<int>(section.size()) != G.n_objects()) throw BadParams("section needs one element per object");
    if (section[x0] != grp.identity()) throw BadParams("section must be the unit at the base point");
    std::vector<CMat> phi;
    phi.reserve(G.n_morphisms());
    for (const auto& a : G.morphisms()) phi.push_back(t(grp.mul(grp.inv(section[a.y]), grp.mul(a.g, section[a.x]))));
    return GroupoidRep(G, std::move(phi));
}

/// g -> Phi(x0, g, x0)
inline GroupRep restrict_rep(const GroupoidRep& rep, int x0) {
    const auto& G = rep.groupoid();
    if (x0 < 0 || x0 >= G.n_objects()) throw BadParams("base point out of range");
    std::vector<CMat> mats;
    for (int g = 0; g < G.group().order(); ++g) mats.push_back(rep({x0, g, x0}));
    return GroupRep(G.group(), std::move(mats));
}

/// Phi'(y, g, x) = U_y Phi(y, g, x) U_x^dag
inline GroupoidRep gauge_transform(const GroupoidRep& rep, const std::vector<CMat>& u) {
    const auto& G = rep.groupoid();
    if (static_cast<int>(u.size()) != G.n_objects()) throw BadParams("one unitary per object required");
    std::vector<CMat> phi;
    for (const auto& a : G.morphisms()) phi.push_back(u[a.y] * rep(a) * u[a.x].adjoint());
    return GroupoidRep(G, std::move(phi));
}

/// Unitaries V_x with V_y Phi(alpha) = Psi(alpha) V_x for every alpha.
inline std::optional<std::vector<CMat>> find_groupoid_intertwiner(const GroupoidRep& phi, const GroupoidRep& psi,
                                                                  double tol = 1e-9) {
    const auto& G = phi.groupoid();
    if (phi.fiber_dim() != psi.fiber_dim() || G.n_morphisms() != psi.groupoid().n_morphisms()) return std::nullopt;
    const int x0 = 0;
    const auto v0 = find_group_intertwiner(restrict_rep(phi, x0), restrict_rep(psi, x0), tol);
    if (!v0) return std::nullopt;
    const int e = G.group().identity();
    std::vector<CMat> v(G.n_objects());
    for (int x = 0; x < G.n_objects(); ++x) {
        const GaugeMorphism to_x{x, e, x0};
        v[x] = psi(to_x) * *v0 * phi(to_x).adjoint();
    }
    for (const auto& a : G.morphisms()) {
        if ((v[a.y] * phi(a) - psi(a) * v[a.x]).norm() > tol) return std::nullopt;
    }
    return v;
}

/// |<u, v>|^2 / (|u|^2 |v|^2)
inline double transition_probability(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v) {
    return std::norm(u.dot(v)) / (u.squaredNorm() * v.squaredNorm());
}

/// Orthonormal column bases W_x of an invariant subbundle.
struct InvariantSubbundle {
    std::vector<CMat> fibers;
};

struct IrreducibilityResult {
    bool irreducible = false;
    int commutant_dim = 0;
    std::optional<InvariantSubbundle> witness;
};

inline constexpr int max_brute_force_fiber = 8;
inline constexpr int max_brute_force_order = 24;

/// max || (1 - P_y) Phi(alpha) P_x || over all morphisms, P_x the projector
/// onto W_x. Zero iff the family W is invariant.
inline double subbundle_invariance_residual(const GroupoidRep& rep, const InvariantSubbundle& w) {
    std::vector<CMat> proj;
    for (const auto& f : w.fibers) proj.push_back(f * f.adjoint());
    const CMat id = CMat::Identity(rep.fiber_dim(), rep.fiber_dim());
    double worst = 0.0;
    for (const auto& a : rep.groupoid().morphisms()) {
        worst = std::max(worst, ((id - proj[a.y]) * rep(a) * proj[a.x]).norm());
    }
    return worst;
}

/// Irreducibility of a finite groupoid representation.
///
/// Searches for a proper invariant subbundle: a non-scalar Hermitian element
/// of the commutant of the isotropy representation at object 0 has an
/// eigenspace W_0 invariant under the isotropy group, transported to every
/// object along (x, e, 0). The candidate is then checked against every
/// morphism. Throws TooLargeError beyond fiber dimension 8 or group order 24;
/// use character_norm on the isotropy representation there.
inline IrreducibilityResult is_irreducible(const GroupoidRep& rep, double tol = 1e-9) {
    const auto& G = rep.groupoid();
    const int d = rep.fiber_dim();
    if (d > max_brute_force_fiber || G.group().order() > max_brute_force_order) {
        throw TooLargeError("is_irreducible: brute-force search is capped at fiber dim 8 and group order 24");
    }
    const GroupRep iso = restrict_rep(rep, 0);
    const auto commutant = commutant_basis(iso);
    IrreducibilityResult out;
    out.commutant_dim = static_cast<int>(commutant.size());
    if (commutant.size() <= 1) {
        out.irreducible = true;
        return out;
    }

    const CMat id = CMat::Identity(d, d);
    CMat h;
    for (const auto& c : commutant) {
        for (const CMat& cand : {CMat(c + c.adjoint()), CMat(I_unit * (c - c.adjoint()))}) {
            const CMat traceless = cand - (cand.trace() / static_cast<double>(d)) * id;
            if (traceless.norm() > 1e-6) {
                h = cand;
                break;
            }
        }
        if (h.size() != 0) break;
    }
    if (h.size() == 0) throw std::logic_error("is_irreducible: commutant has no non-scalar Hermitian element");

    Eigen::SelfAdjointEigenSolver<CMat> eig(h);
    const auto& values = eig.eigenvalues();
    const double spread = values(d - 1) - values(0);
    int count = 1;
    while (count < d && values(count) - values(0) <= 1e-6 * std::max(1.0, spread)) ++count;
    const CMat w0 = eig.eigenvectors().leftCols(count);

    InvariantSubbundle w;
    for (int x = 0; x < G.n_objects(); ++x) w.fibers.push_back(rep({x, G.group().identity(), 0}) * w0);
    if (subbundle_invariance_residual(rep, w) > tol) {
        throw std::logic_error("is_irreducible: transported eigenspace is not invariant");
    }
    out.irreducible = false;
    out.witness = std::move(w);
    return out;
}

/// Irreducibility of a group representation through its commutant.
inline bool is_irreducible(const GroupRep& t) { return commutant_dimension(t) == 1; }

}  // namespace wigneroid::repcheck
