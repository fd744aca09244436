#pragma once

// Dense exact linear algebra over Q (GMP rationals).

#include <string>
#include <vector>

#include <gmpxx.h>

#include "wigneroid/errors.hpp"

namespace wigneroid {

using Rational = mpq_class;
using QVector = std::vector<Rational>;

/// Parses "p", "p/q" or "-p/q". Throws ParseError on malformed input or q = 0.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational");
    const auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i) {
            if (t[i] < '0' || t[i] > '9') return false;
        }
        return true;
    };
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.find_first_of("+-") != std::string::npos) {
        throw ParseError("malformed rational '" + s + "'");
    }
    mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
    mpz_class d(den, 10);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

/// "p/q" in lowest terms, or "p" when q = 1.
inline std::string to_string(Rational q) {
    q.canonicalize();
    return q.get_str(10);
}

class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    QVector row(int i) const {
        return QVector(a_.begin() + static_cast<std::ptrdiff_t>(i) * cols_,
                       a_.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols_);
    }

    QMatrix transpose() const {
        QMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        }
        return t;
    }

    static QMatrix from_rows(const std::vector<QVector>& rows, int cols) {
        QMatrix m(static_cast<int>(rows.size()), cols);
        for (int i = 0; i < m.rows(); ++i) {
            for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

/// In-place reduced row echelon form. Returns the pivot column of each
/// nonzero row, in order; rows beyond pivots.size() are zero.
inline std::vector<int> rref(QMatrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r) {
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        }
        const Rational inv = 1 / m(r, c);
        for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rational f = m(i, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline int rank(QMatrix m) { return static_cast<int>(rref(m).size()); }

/// Basis of {v : m v = 0}, one vector per free column, with a 1 in that
/// free column (the standard RREF kernel basis).
inline std::vector<QVector> nullspace(QMatrix m) {
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<QVector> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        QVector v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace wigneroid
