#pragma once

// Quivers with admissible relations, dimension vectors, Euler forms and the
// Ext^1-dimension matrices R, R' used by the cluster character.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "hallcat/numeric.hpp"

namespace hallcat {

using DimVector = std::vector<int>;

inline DimVector operator+(const DimVector& a, const DimVector& b) {
    DimVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline DimVector operator-(const DimVector& a, const DimVector& b) {
    DimVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
        if (r[i] < 0) throw std::invalid_argument("DimVector subtraction went negative");
    }
    return r;
}
inline bool leq(const DimVector& a, const DimVector& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}
inline int total(const DimVector& d) {
    int t = 0;
    for (int x : d) t += x;
    return t;
}

struct Arrow {
    int source;  // 0-based
    int target;
};

// A path is a list of arrow indices in application order: arrows[0] acts
// first.  (The CLI's relation syntax lists them target-to-source and is
// reversed at parse time.)
struct Path {
    std::vector<int> arrows;
};

struct Relation {
    struct Term {
        long coeff;
        Path path;
    };
    std::vector<Term> terms;
};

class Quiver {
public:
    Quiver(int vertex_count, std::vector<Arrow> arrows, std::vector<Relation> relations = {})
        : n_(vertex_count), arrows_(std::move(arrows)), relations_(std::move(relations)) {
        if (n_ <= 0) throw std::invalid_argument("quiver needs at least one vertex");
        for (const Arrow& a : arrows_)
            if (a.source < 0 || a.source >= n_ || a.target < 0 || a.target >= n_)
                throw std::invalid_argument("arrow endpoint out of range");
        for (const Relation& r : relations_) validate_relation(r);
    }

    int vertex_count() const { return n_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<Relation>& relations() const { return relations_; }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }

    int path_source(const Path& p) const { return arrows_[p.arrows.front()].source; }
    int path_target(const Path& p) const { return arrows_[p.arrows.back()].target; }

    bool path_composable(const Path& p) const {
        for (size_t i = 0; i + 1 < p.arrows.size(); ++i)
            if (arrows_[p.arrows[i]].target != arrows_[p.arrows[i + 1]].source) return false;
        return true;
    }

    bool is_acyclic() const {
        // Kahn's algorithm.
        std::vector<int> indeg(n_, 0);
        for (const Arrow& a : arrows_) ++indeg[a.target];
        std::vector<int> stack;
        for (int i = 0; i < n_; ++i)
            if (!indeg[i]) stack.push_back(i);
        int seen = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++seen;
            for (const Arrow& a : arrows_)
                if (a.source == v && --indeg[a.target] == 0) stack.push_back(a.target);
        }
        return seen == n_;
    }

    bool is_hereditary() const { return relations_.empty() && is_acyclic(); }

    int arrows_between(int i, int j) const {
        int c = 0;
        for (const Arrow& a : arrows_)
            if (a.source == i && a.target == j) ++c;
        return c;
    }

    // All paths of the (acyclic) quiver, trivial paths excluded, grouped by
    // nothing in particular; used for projective/injective path bases.
    std::vector<Path> all_paths() const {
        if (!is_acyclic()) throw std::invalid_argument("path enumeration needs an acyclic quiver");
        std::vector<Path> out;
        std::vector<Path> frontier;
        for (int a = 0; a < arrow_count(); ++a) frontier.push_back(Path{{a}});
        while (!frontier.empty()) {
            std::vector<Path> next;
            for (const Path& p : frontier) {
                out.push_back(p);
                int t = path_target(p);
                for (int a = 0; a < arrow_count(); ++a)
                    if (arrows_[a].source == t) {
                        Path q = p;
                        q.arrows.push_back(a);
                        next.push_back(std::move(q));
                    }
            }
            frontier = std::move(next);
        }
        return out;
    }

private:
    void validate_relation(const Relation& r) const {
        if (r.terms.empty()) throw std::invalid_argument("empty relation");
        int src = -1, tgt = -1;
        for (const auto& t : r.terms) {
            if (t.path.arrows.size() < 2)
                throw std::invalid_argument("relation path shorter than 2 (not admissible)");
            for (int a : t.path.arrows)
                if (a < 0 || a >= arrow_count())
                    throw std::invalid_argument("relation references unknown arrow");
            if (!path_composable(t.path))
                throw std::invalid_argument("relation path is not composable");
            int s = path_source(t.path), e = path_target(t.path);
            if (src < 0) { src = s; tgt = e; }
            else if (s != src || e != tgt)
                throw std::invalid_argument("relation terms have mismatched endpoints");
        }
    }

    int n_;
    std::vector<Arrow> arrows_;
    std::vector<Relation> relations_;
};

struct EulerData {
    std::vector<std::vector<int>> euler;  // <S_i, S_j>
    std::vector<std::vector<int>> R;      // dim Ext^1(S_i, S_j)
    std::vector<std::vector<int>> Rp;     // dim Ext^1(S_j, S_i)
};

// <a,b> = sum_i a_i b_i - sum_{alpha: i->j} a_i b_j, hereditary case only.
inline long euler_form(const Quiver& q, const DimVector& a, const DimVector& b) {
    if (!q.is_hereditary())
        throw std::invalid_argument("Euler form requires an acyclic relation-free quiver");
    if (static_cast<int>(a.size()) != q.vertex_count() ||
        static_cast<int>(b.size()) != q.vertex_count())
        throw std::invalid_argument("dimension vector length mismatch");
    long r = 0;
    for (int i = 0; i < q.vertex_count(); ++i) r += static_cast<long>(a[i]) * b[i];
    for (const Arrow& ar : q.arrows()) r -= static_cast<long>(a[ar.source]) * b[ar.target];
    return r;
}

inline EulerData r_matrices(const Quiver& q) {
    if (!q.is_hereditary())
        throw std::invalid_argument("R matrices require an acyclic relation-free quiver");
    int n = q.vertex_count();
    EulerData d;
    d.euler.assign(n, std::vector<int>(n, 0));
    d.R.assign(n, std::vector<int>(n, 0));
    d.Rp.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int arr = q.arrows_between(i, j);
            d.euler[i][j] = (i == j ? 1 : 0) - arr;
            d.R[i][j] = arr;
            d.Rp[j][i] = arr;
        }
    return d;
}

inline std::vector<std::vector<long>> cartan_counterpart(
    const std::vector<std::vector<long>>& B) {
    size_t n = B.size();
    for (size_t i = 0; i < n; ++i) {
        if (B[i].size() != n) throw std::invalid_argument("B must be square");
        for (size_t j = 0; j < n; ++j)
            if (B[i][j] != -B[j][i]) throw std::invalid_argument("B must be antisymmetric");
    }
    std::vector<std::vector<long>> A(n, std::vector<long>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) A[i][j] = (i == j) ? 2 : -std::abs(B[i][j]);
    return A;
}

// --- stock quivers used throughout the tests and the paper's examples ---

inline Quiver a2_quiver() { return Quiver(2, {{0, 1}}); }                    // 1 -> 2
inline Quiver a3_quiver() { return Quiver(3, {{0, 1}, {2, 1}}); }            // 1 -> 2 <- 3
inline Quiver kronecker_quiver() { return Quiver(2, {{0, 1}, {0, 1}}); }     // 1 => 2
inline Quiver a3_linear_quiver() { return Quiver(3, {{2, 1}, {1, 0}}); }     // 3 -> 2 -> 1
// 3 -> 2 -> 1 with the length-two composite forced to zero.
inline Quiver a3_linear_relation_quiver() {
    return Quiver(3, {{2, 1}, {1, 0}}, {Relation{{{1, Path{{0, 1}}}}}});
}

}  // namespace hallcat
