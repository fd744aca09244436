#pragma once

// Finite groups given by multiplication tables and the finite gauge
// groupoids built from them: objects 0..n-1, morphisms (y, g, x) : x -> y,
// composition (z, h, y) o (y, g, x) = (z, h g, x).

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "wigneroid/errors.hpp"

namespace wigneroid::groupoid {

class FiniteGroup {
public:
    using Table = std::vector<std::vector<int>>;

    /// Validates closure, associativity, identity and inverses.
    explicit FiniteGroup(Table table, std::string name = "G") : table_(std::move(table)), name_(std::move(name)) {
        const int n = static_cast<int>(table_.size());
        if (n == 0) throw InvalidGroupError("group must be non-empty");
        for (const auto& row : table_) {
            if (static_cast<int>(row.size()) != n) throw InvalidGroupError("multiplication table must be square");
            for (int v : row) {
                if (v < 0 || v >= n) throw InvalidGroupError("multiplication table is not closed");
            }
        }
        identity_ = -1;
        for (int e = 0; e < n && identity_ < 0; ++e) {
            bool ok = true;
            for (int g = 0; g < n && ok; ++g) ok = table_[e][g] == g && table_[g][e] == g;
            if (ok) identity_ = e;
        }
        if (identity_ < 0) throw InvalidGroupError("no two-sided identity");
        inverse_.assign(n, -1);
        for (int g = 0; g < n; ++g) {
            for (int h = 0; h < n; ++h) {
                if (table_[g][h] == identity_ && table_[h][g] == identity_) {
                    inverse_[g] = h;
                    break;
                }
            }
            if (inverse_[g] < 0) throw InvalidGroupError("element " + std::to_string(g) + " has no inverse");
        }
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                for (int c = 0; c < n; ++c) {
                    if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
                        throw InvalidGroupError("multiplication is not associative");
                    }
                }
            }
        }
    }

    static FiniteGroup trivial() { return FiniteGroup(Table{{0}}, "1"); }

    static FiniteGroup cyclic(int n) {
        if (n < 1) throw InvalidGroupError("cyclic group order must be positive");
        Table t(n, std::vector<int>(n));
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
        }
        return FiniteGroup(std::move(t), "Z/" + std::to_string(n));
    }

    /// S_3 with elements the permutations of {0,1,2} in lexicographic order;
    /// element 0 is the identity. Product (s t)(i) = s(t(i)).
    static FiniteGroup symmetric3() {
        const auto perms = s3_permutations();
        Table t(6, std::vector<int>(6));
        for (int a = 0; a < 6; ++a) {
            for (int b = 0; b < 6; ++b) {
                std::array<int, 3> c{};
                for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
                t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
            }
        }
        return FiniteGroup(std::move(t), "S3");
    }

    static std::vector<std::array<int, 3>> s3_permutations() {
        std::vector<std::array<int, 3>> perms;
        std::array<int, 3> p{0, 1, 2};
        do {
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        return perms;
    }

    int order() const noexcept { return static_cast<int>(table_.size()); }
    int identity() const noexcept { return identity_; }
    int mul(int a, int b) const { return table_.at(a).at(b); }
    int inv(int a) const { return inverse_.at(a); }
    const std::string& name() const noexcept { return name_; }

private:
    Table table_;
    std::string name_;
    int identity_ = 0;
    std::vector<int> inverse_;
};

/// (target, element, source)
struct GaugeMorphism {
    int y = 0;
    int g = 0;
    int x = 0;

    friend bool operator==(const GaugeMorphism&, const GaugeMorphism&) = default;
};

class GaugeGroupoid {
public:
    GaugeGroupoid(int n_objects, FiniteGroup group) : n_(n_objects), group_(std::move(group)) {
        if (n_ < 1) throw BadParams("gauge groupoid needs at least one object");
    }

    int n_objects() const noexcept { return n_; }
    const FiniteGroup& group() const noexcept { return group_; }
    int n_morphisms() const noexcept { return n_ * n_ * group_.order(); }

    void check(const GaugeMorphism& a) const {
        if (a.x < 0 || a.x >= n_ || a.y < 0 || a.y >= n_ || a.g < 0 || a.g >= group_.order()) {
            throw BadParams("morphism out of range for this gauge groupoid");
        }
    }

    /// Dense index in [0, n_morphisms()).
    int index(const GaugeMorphism& a) const {
        check(a);
        return (a.y * group_.order() + a.g) * n_ + a.x;
    }

    GaugeMorphism morphism(int index) const {
        const int x = index % n_;
        const int rest = index / n_;
        return {rest / group_.order(), rest % group_.order(), x};
    }

    std::vector<GaugeMorphism> morphisms() const {
        std::vector<GaugeMorphism> out;
        out.reserve(n_morphisms());
        for (int i = 0; i < n_morphisms(); ++i) out.push_back(morphism(i));
        return out;
    }

    GaugeMorphism compose(const GaugeMorphism& beta, const GaugeMorphism& alpha) const {
        check(alpha);
        check(beta);
        if (alpha.y != beta.x) {
            throw NonComposableError("gauge_compose: target " + std::to_string(alpha.y) +
                                     " != source " + std::to_string(beta.x));
        }
        return {beta.y, group_.mul(beta.g, alpha.g), alpha.x};
    }

    GaugeMorphism inverse(const GaugeMorphism& a) const {
        check(a);
        return {a.x, group_.inv(a.g), a.y};
    }

    GaugeMorphism unit(int x) const {
        if (x < 0 || x >= n_) throw BadParams("object out of range");
        return {x, group_.identity(), x};
    }

private:
    int n_;
    FiniteGroup group_;
};

inline GaugeMorphism gauge_compose(const GaugeGroupoid& G, const GaugeMorphism& beta, const GaugeMorphism& alpha) {
    return G.compose(beta, alpha);
}
inline GaugeMorphism gauge_inverse(const GaugeGroupoid& G, const GaugeMorphism& a) { return G.inverse(a); }
inline GaugeMorphism gauge_unit(const GaugeGroupoid& G, int x) { return G.unit(x); }

}  // namespace wigneroid::groupoid
