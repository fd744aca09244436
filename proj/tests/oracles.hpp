#pragma once

// Reference computations used only by the tests. They share no code with the
// library beyond the LieAlgebra container and GMP rationals.

#include <gmpxx.h>

#include <random>
#include <utility>
#include <vector>

#include "wigneroid/cohomology.hpp"

namespace oracle {

using Q = mpq_class;
using QRows = std::vector<std::vector<Q>>;

/// Rank by plain Gaussian elimination with first-nonzero pivoting.
inline int rank(QRows m) {
    if (m.empty()) return 0;
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            const Q f = m[i][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return static_cast<int>(r);
}

/// Jacobi identity checked on every ordered triple and output index.
inline bool jacobi_holds(const wigneroid::cohomology::LieAlgebra& L) {
    const int n = L.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Q s = 0;
                    for (int m = 0; m < n; ++m) {
                        s += L.c(m, i, j) * L.c(l, m, k) + L.c(m, j, k) * L.c(l, m, i) + L.c(m, k, i) * L.c(l, m, j);
                    }
                    if (s != 0) return false;
                }
    return true;
}

/// dim H^2 over the full n^2 space of bilinear forms: antisymmetry and the
/// cocycle identity w([x,y],z) + w([y,z],x) + w([z,x],y) = 0 are imposed as
/// linear constraints; coboundaries are the forms a([x,y]).
inline int h2_dimension(const wigneroid::cohomology::LieAlgebra& L) {
    const int n = L.dim();
    const int vars = n * n;
    auto at = [n](int a, int b) { return a * n + b; };
    QRows constraints;
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            std::vector<Q> row(vars);
            row[at(a, b)] += 1;
            row[at(b, a)] += 1;
            constraints.push_back(row);
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                std::vector<Q> row(vars);
                for (int l = 0; l < n; ++l) {
                    row[at(l, k)] += L.c(l, i, j);
                    row[at(l, i)] += L.c(l, j, k);
                    row[at(l, j)] += L.c(l, k, i);
                }
                constraints.push_back(row);
            }
    const int cocycles = vars - rank(constraints);
    QRows boundaries;
    for (int m = 0; m < n; ++m) {
        std::vector<Q> row(vars);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) row[at(i, j)] = L.c(m, i, j);
        boundaries.push_back(row);
    }
    return cocycles - rank(boundaries);
}

/// Gauss-Jordan inverse; empty result when singular.
inline QRows inverse(QRows m) {
    const std::size_t n = m.size();
    QRows inv(n, std::vector<Q>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return {};
        std::swap(m[p], m[c]);
        std::swap(inv[p], inv[c]);
        const Q piv = m[c][c];
        for (std::size_t k = 0; k < n; ++k) {
            m[c][k] /= piv;
            inv[c][k] /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            const Q f = m[i][c];
            for (std::size_t k = 0; k < n; ++k) {
                m[i][k] -= f * m[c][k];
                inv[i][k] -= f * inv[c][k];
            }
        }
    }
    return inv;
}

/// Structure constants in the basis Y_a = sum_i P[i][a] X_i.
inline wigneroid::cohomology::LieAlgebra change_basis(const wigneroid::cohomology::LieAlgebra& L, const QRows& P) {
    const int n = L.dim();
    const QRows Pinv = inverse(P);
    std::vector<wigneroid::cohomology::StructureConstant> entries;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                Q v = 0;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        if (P[i][a] == 0 || P[j][b] == 0) continue;
                        for (int k = 0; k < n; ++k) v += Pinv[c][k] * P[i][a] * P[j][b] * L.c(k, i, j);
                    }
                if (v != 0) entries.push_back({a, b, c, v});
            }
    return wigneroid::cohomology::LieAlgebra::from_entries(n, entries);
}

/// Direct sum of L with a one-dimensional abelian factor appended last.
inline wigneroid::cohomology::LieAlgebra plus_line(const wigneroid::cohomology::LieAlgebra& L) {
    return wigneroid::cohomology::LieAlgebra::from_entries(L.dim() + 1, L.entries());
}

/// R x_A R^3: [X0, Xi] = sum_k A[k-1][i-1] X_k, all other brackets zero.
inline wigneroid::cohomology::LieAlgebra semidirect(const QRows& A) {
    std::vector<wigneroid::cohomology::StructureConstant> entries;
    for (int i = 1; i <= 3; ++i)
        for (int k = 1; k <= 3; ++k)
            if (A[k - 1][i - 1] != 0) entries.push_back({0, i, k, A[k - 1][i - 1]});
    return wigneroid::cohomology::LieAlgebra::from_entries(4, entries);
}

inline QRows random_matrix(std::mt19937_64& rng, int n, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    QRows m(n, std::vector<Q>(n));
    for (auto& row : m)
        for (auto& v : row) v = d(rng);
    return m;
}

inline QRows random_invertible(std::mt19937_64& rng, int n) {
    for (;;) {
        QRows m = random_matrix(rng, n, -2, 2);
        if (!inverse(m).empty()) return m;
    }
}

}  // namespace oracle
