#pragma once

// Chevalley-Eilenberg cochains of a finite-dimensional real Lie algebra with
// trivial coefficients, in exact rational arithmetic, up to degree 3.
//
// Sign conventions:
//   (d1 a)(X, Y)    = -a([X, Y])
//   (d2 w)(X, Y, Z) = -w([X, Y], Z) + w([X, Z], Y) - w([Y, Z], X)
// H^2 does not depend on them; `Convention` flips either sign globally.

#include <optional>
#include <string>
#include <vector>

#include "wigneroid/errors.hpp"
#include "wigneroid/rational_linalg.hpp"

namespace wigneroid::cohomology {

struct StructureConstant {
    int i = 0;
    int j = 0;
    int k = 0;
    Rational val;
};

/// Structure constants c^k_{ij}: [X_i, X_j] = sum_k c^k_{ij} X_k.
class LieAlgebra {
public:
    LieAlgebra(int dim, std::vector<std::string> names = {}) : n_(dim), c_(static_cast<std::size_t>(dim) * dim * dim) {
        if (dim < 1) throw BadParams("Lie algebra dimension must be positive");
        if (names.empty()) {
            for (int i = 0; i < dim; ++i) names.push_back("X" + std::to_string(i));
        }
        if (static_cast<int>(names.size()) != dim) throw BadParams("basis name count does not match dimension");
        names_ = std::move(names);
    }

    /// Each entry sets c^k_{ij} = val and c^k_{ji} = -val. Conflicting
    /// entries or a nonzero c^k_{ii} violate antisymmetry and throw.
    static LieAlgebra from_entries(int dim, const std::vector<StructureConstant>& entries,
                                   std::vector<std::string> names = {}) {
        LieAlgebra L(dim, std::move(names));
        std::vector<bool> set(static_cast<std::size_t>(dim) * dim * dim, false);
        for (const auto& e : entries) {
            if (e.i < 0 || e.i >= dim || e.j < 0 || e.j >= dim || e.k < 0 || e.k >= dim) {
                throw BadParams("structure constant index out of range");
            }
            if (e.i == e.j) {
                if (e.val != 0) throw BadParams("c^k_ii must vanish (antisymmetry)");
                continue;
            }
            auto& slot = L.c_[L.idx(e.k, e.i, e.j)];
            if (set[L.idx(e.k, e.i, e.j)] && slot != e.val) {
                throw BadParams("conflicting structure constants for (" + std::to_string(e.i) + "," +
                                std::to_string(e.j) + "," + std::to_string(e.k) + ")");
            }
            slot = e.val;
            L.c_[L.idx(e.k, e.j, e.i)] = -e.val;
            set[L.idx(e.k, e.i, e.j)] = true;
            set[L.idx(e.k, e.j, e.i)] = true;
        }
        return L;
    }

    int dim() const noexcept { return n_; }
    const std::vector<std::string>& names() const noexcept { return names_; }

    /// c^k_{ij}
    const Rational& c(int k, int i, int j) const { return c_[idx(k, i, j)]; }

    /// Nonzero constants with i < j, ordered by (i, j, k).
    std::vector<StructureConstant> entries() const {
        std::vector<StructureConstant> out;
        for (int i = 0; i < n_; ++i) {
            for (int j = i + 1; j < n_; ++j) {
                for (int k = 0; k < n_; ++k) {
                    if (c(k, i, j) != 0) out.push_back({i, j, k, c(k, i, j)});
                }
            }
        }
        return out;
    }

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

private:
    std::size_t idx(int k, int i, int j) const {
        return (static_cast<std::size_t>(k) * n_ + i) * n_ + j;
    }

    int n_;
    std::vector<Rational> c_;
    std::vector<std::string> names_;
};

// ---------------------------------------------------------------------------
// Presets

/// e(2) with basis (J, P1, P2): [J,P1] = P2, [J,P2] = -P1, [P1,P2] = 0.
inline LieAlgebra e2() { return LieAlgebra::from_entries(3, {{0, 1, 2, 1}, {0, 2, 1, -1}}, {"J", "P1", "P2"}); }

/// su(2): c^k_{ij} = epsilon_{ijk}.
inline LieAlgebra su2() {
    return LieAlgebra::from_entries(3, {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1}}, {"X1", "X2", "X3"});
}

/// Heisenberg algebra: [P1, P2] = E.
inline LieAlgebra heisenberg3() { return LieAlgebra::from_entries(3, {{0, 1, 2, 1}}, {"P1", "P2", "E"}); }

inline LieAlgebra abelian(int n) { return LieAlgebra(n); }

/// Recognises "e2", "su2", "heisenberg3" and "abelian:n".
inline LieAlgebra preset(const std::string& name) {
    if (name == "e2") return e2();
    if (name == "su2") return su2();
    if (name == "heisenberg3") return heisenberg3();
    if (name.rfind("abelian:", 0) == 0) {
        const std::string tail = name.substr(8);
        int n = 0;
        try {
            std::size_t used = 0;
            n = std::stoi(tail, &used);
            if (used != tail.size()) throw ParseError("");
        } catch (const std::exception&) {
            throw ParseError("abelian preset needs an integer dimension, got '" + tail + "'");
        }
        if (n < 1) throw ParseError("abelian preset dimension must be positive");
        return abelian(n);
    }
    throw ParseError("unknown algebra preset '" + name + "'");
}

// ---------------------------------------------------------------------------
// Cochains

/// w_{ij} = w(X_i, X_j), antisymmetric.
class TwoCochain {
public:
    explicit TwoCochain(int n) : n_(n), w_(static_cast<std::size_t>(n) * n) {}

    int dim() const noexcept { return n_; }
    const Rational& operator()(int i, int j) const { return w_[static_cast<std::size_t>(i) * n_ + j]; }

    /// Sets w(i,j) = v and w(j,i) = -v.
    void set(int i, int j, const Rational& v) {
        if (i == j) {
            if (v != 0) throw BadParams("2-cochain must be antisymmetric");
            return;
        }
        w_[static_cast<std::size_t>(i) * n_ + j] = v;
        w_[static_cast<std::size_t>(j) * n_ + i] = -v;
    }

    bool is_zero() const {
        for (const auto& v : w_) {
            if (v != 0) return false;
        }
        return true;
    }

    friend bool operator==(const TwoCochain&, const TwoCochain&) = default;

private:
    int n_;
    std::vector<Rational> w_;
};

/// Fully antisymmetric three-index array.
class ThreeCochain {
public:
    explicit ThreeCochain(int n) : n_(n), w_(static_cast<std::size_t>(n) * n * n) {}

    int dim() const noexcept { return n_; }
    Rational& operator()(int i, int j, int k) { return w_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k]; }
    const Rational& operator()(int i, int j, int k) const {
        return w_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
    }

    bool is_zero() const {
        for (const auto& v : w_) {
            if (v != 0) return false;
        }
        return true;
    }

private:
    int n_;
    std::vector<Rational> w_;
};

struct Convention {
    int d1_sign = 1;
    int d2_sign = 1;
};

struct JacobiViolation {
    int i, j, k, l;
};

/// First (i,j,k,l) in lexicographic order with
/// sum_m c^m_{ij} c^l_{mk} + c^m_{jk} c^l_{mi} + c^m_{ki} c^l_{mj} != 0.
inline std::optional<JacobiViolation> check_jacobi(const LieAlgebra& L) {
    const int n = L.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                for (int l = 0; l < n; ++l) {
                    Rational s = 0;
                    for (int m = 0; m < n; ++m) {
                        s += L.c(m, i, j) * L.c(l, m, k) + L.c(m, j, k) * L.c(l, m, i) + L.c(m, k, i) * L.c(l, m, j);
                    }
                    if (s != 0) return JacobiViolation{i, j, k, l};
                }
            }
        }
    }
    return std::nullopt;
}

inline TwoCochain d1(const LieAlgebra& L, const QVector& alpha, Convention conv = {}) {
    const int n = L.dim();
    if (static_cast<int>(alpha.size()) != n) throw BadParams("d1: 1-cochain has wrong length");
    TwoCochain out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Rational s = 0;
            for (int k = 0; k < n; ++k) s += L.c(k, i, j) * alpha[k];
            out.set(i, j, -conv.d1_sign * s);
        }
    }
    return out;
}

inline ThreeCochain d2(const LieAlgebra& L, const TwoCochain& w, Convention conv = {}) {
    const int n = L.dim();
    if (w.dim() != n) throw BadParams("d2: 2-cochain has wrong dimension");
    // w([X_a, X_b], X_c)
    auto wb = [&](int a, int b, int c) {
        Rational s = 0;
        for (int m = 0; m < n; ++m) {
            if (L.c(m, a, b) != 0) s += L.c(m, a, b) * w(m, c);
        }
        return s;
    };
    ThreeCochain out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                out(i, j, k) = conv.d2_sign * (-wb(i, j, k) + wb(i, k, j) - wb(j, k, i));
            }
        }
    }
    return out;
}

struct CohomologyResult {
    int dim_h2 = 0;
    /// Representatives in reduced echelon form on the (i<j) coordinates,
    /// each supported off the pivot coordinates of the coboundary space.
    std::vector<TwoCochain> basis;
    int dim_cocycles = 0;
    int dim_coboundaries = 0;
};

namespace detail {

inline std::vector<std::pair<int, int>> pair_index(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    return pairs;
}

inline QVector to_pair_coords(const TwoCochain& w) {
    QVector v;
    for (auto [i, j] : pair_index(w.dim())) v.push_back(w(i, j));
    return v;
}

inline TwoCochain from_pair_coords(int n, const QVector& v) {
    TwoCochain w(n);
    const auto pairs = pair_index(n);
    for (std::size_t p = 0; p < pairs.size(); ++p) w.set(pairs[p].first, pairs[p].second, v[p]);
    return w;
}

}  // namespace detail

/// H^2(L, R) as dim ker d2 - rank d1 with canonical representatives.
inline CohomologyResult h2(const LieAlgebra& L, Convention conv = {}) {
    if (auto bad = check_jacobi(L)) {
        throw JacobiError("Jacobi identity fails at (" + std::to_string(bad->i) + "," + std::to_string(bad->j) +
                          "," + std::to_string(bad->k) + "," + std::to_string(bad->l) + ")");
    }
    const int n = L.dim();
    const auto pairs = detail::pair_index(n);
    const int m2 = static_cast<int>(pairs.size());

    CohomologyResult result;
    if (m2 == 0) return result;

    // d2 on 2-cochains, rows indexed by i<j<k.
    std::vector<QVector> d2_rows;
    {
        std::vector<ThreeCochain> images;
        for (int p = 0; p < m2; ++p) {
            TwoCochain e(n);
            e.set(pairs[p].first, pairs[p].second, 1);
            images.push_back(d2(L, e, conv));
        }
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                for (int k = j + 1; k < n; ++k) {
                    QVector row(m2);
                    for (int p = 0; p < m2; ++p) row[p] = images[p](i, j, k);
                    d2_rows.push_back(std::move(row));
                }
            }
        }
    }
    const std::vector<QVector> cocycles = nullspace(QMatrix::from_rows(d2_rows, m2));

    // Coboundaries: rows d1(e_k) in pair coordinates, reduced.
    std::vector<QVector> b_rows;
    for (int k = 0; k < n; ++k) {
        QVector alpha(n);
        alpha[k] = 1;
        b_rows.push_back(detail::to_pair_coords(d1(L, alpha, conv)));
    }
    QMatrix b = QMatrix::from_rows(b_rows, m2);
    const auto b_pivots = rref(b);

    // Reduce cocycles modulo coboundaries, then echelonize the residues.
    std::vector<QVector> residues;
    for (QVector z : cocycles) {
        for (std::size_t r = 0; r < b_pivots.size(); ++r) {
            const Rational f = z[b_pivots[r]];
            if (f == 0) continue;
            for (int c = 0; c < m2; ++c) z[c] -= f * b(static_cast<int>(r), c);
        }
        residues.push_back(std::move(z));
    }
    QMatrix res = QMatrix::from_rows(residues, m2);
    const auto res_pivots = rref(res);

    result.dim_cocycles = static_cast<int>(cocycles.size());
    result.dim_coboundaries = static_cast<int>(b_pivots.size());
    result.dim_h2 = result.dim_cocycles - result.dim_coboundaries;
    if (static_cast<int>(res_pivots.size()) != result.dim_h2) {
        throw std::logic_error("h2: coboundaries not contained in cocycles (d2 d1 != 0)");
    }
    for (std::size_t r = 0; r < res_pivots.size(); ++r) {
        result.basis.push_back(detail::from_pair_coords(n, res.row(static_cast<int>(r))));
    }
    return result;
}

/// Central extension by the given cocycles: new basis vectors n..n+k-1 are
/// central and [X_i, X_j] gains the component w_r(X_i, X_j) along X_{n+r}.
inline LieAlgebra central_extension(const LieAlgebra& L, const std::vector<TwoCochain>& cocycles) {
    const int n = L.dim();
    const int k = static_cast<int>(cocycles.size());
    for (int r = 0; r < k; ++r) {
        if (cocycles[r].dim() != n) throw BadParams("cocycle dimension does not match the algebra");
        if (!d2(L, cocycles[r]).is_zero()) {
            throw NotClosedError("cocycle " + std::to_string(r) + " is not closed");
        }
    }
    std::vector<std::string> names = L.names();
    for (int r = 0; r < k; ++r) names.push_back(k == 1 ? "E" : "E" + std::to_string(r + 1));
    std::vector<StructureConstant> entries = L.entries();
    for (int r = 0; r < k; ++r) {
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (cocycles[r](i, j) != 0) entries.push_back({i, j, n + r, cocycles[r](i, j)});
            }
        }
    }
    return LieAlgebra::from_entries(n + k, entries, names);
}

}  // namespace wigneroid::cohomology
