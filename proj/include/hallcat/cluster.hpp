#pragma once

// Seeds and mutation: the exchange relation on variables, the matrix rule on
// the antisymmetric B-matrix, breadth-first cluster enumeration, and the
// Cartan-counterpart finite-type detector.

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "hallcat/laurent.hpp"

namespace hallcat {

using BMatrix = std::vector<std::vector<int>>;

inline bool is_antisymmetric(const BMatrix& b) {
    for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            if (b[i][j] != -b[j][i]) return false;
    return true;
}

struct Seed {
    std::vector<RationalExpr> vars;  // in terms of the initial cluster
    BMatrix b;

    static Seed initial(const BMatrix& b) {
        if (!is_antisymmetric(b))
            throw std::invalid_argument("exchange matrix must be antisymmetric");
        Seed s;
        s.b = b;
        int n = static_cast<int>(b.size());
        for (int i = 0; i < n; ++i) s.vars.push_back(RationalExpr::var(n, i));
        return s;
    }
};

inline BMatrix mutate_matrix(const BMatrix& b, int j) {
    int n = static_cast<int>(b.size());
    BMatrix r = b;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (i == j || k == j) r[i][k] = -b[i][k];
            else r[i][k] = b[i][k] + (std::abs(b[i][j]) * b[j][k] +
                                      b[i][j] * std::abs(b[j][k])) / 2;
        }
    return r;
}

inline Seed mutate(const Seed& s, int j) {
    int n = static_cast<int>(s.b.size());
    if (j < 0 || j >= n) throw std::invalid_argument("mutation direction out of range");
    RationalExpr plus = RationalExpr::of(LaurentPoly::one(n));
    RationalExpr minus = plus;
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < s.b[i][j]; ++k) plus = plus * s.vars[i];
        for (int k = 0; k < -s.b[i][j]; ++k) minus = minus * s.vars[i];
    }
    Seed r = s;
    r.vars[j] = (plus + minus) / s.vars[j];
    r.b = mutate_matrix(s.b, j);
    return r;
}

// Laurent normal form of a seed variable; throws when the phenomenon fails
// (it must not, for mutation-reachable seeds).
inline LaurentPoly variable_normal_form(const RationalExpr& e) {
    auto nf = laurent_check(e);
    if (!nf) throw std::logic_error("cluster variable is not a Laurent polynomial");
    return *nf;
}

struct ClusterEnumeration {
    std::set<std::string> variables;  // Laurent normal-form strings
    std::vector<LaurentPoly> variable_polys;
    long seeds_visited = 0;
    bool closed = false;  // BFS exhausted the mutation class under the ceiling
};

namespace detail {
inline std::string seed_key(const Seed& s) {
    std::vector<std::string> names;
    for (const RationalExpr& v : s.vars) names.push_back(variable_normal_form(v).str());
    std::sort(names.begin(), names.end());
    std::string key;
    for (const std::string& n : names) key += n + " | ";
    return key;
}
}  // namespace detail

inline ClusterEnumeration enumerate_clusters(const Seed& start, long seed_ceiling) {
    ClusterEnumeration out;
    std::set<std::string> seen;
    std::deque<Seed> frontier;
    frontier.push_back(start);
    seen.insert(detail::seed_key(start));
    int n = static_cast<int>(start.b.size());
    while (!frontier.empty()) {
        Seed s = std::move(frontier.front());
        frontier.pop_front();
        ++out.seeds_visited;
        for (const RationalExpr& v : s.vars) {
            LaurentPoly nf = variable_normal_form(v);
            if (out.variables.insert(nf.str()).second) out.variable_polys.push_back(nf);
        }
        for (int j = 0; j < n; ++j) {
            Seed next = mutate(s, j);
            if (seen.insert(detail::seed_key(next)).second) {
                if (static_cast<long>(seen.size()) > seed_ceiling)
                    throw GuardExceeded("cluster seed ceiling exceeded", Int(seen.size()),
                                        Int(seed_ceiling));
                frontier.push_back(next);
            }
        }
    }
    out.closed = true;
    return out;
}

// Cartan counterpart of an antisymmetric matrix: 2 on the diagonal,
// -|b_ij| off it.  Symmetric, so definiteness is by principal minors.
inline std::vector<std::vector<long>> cartan_of(const BMatrix& b) {
    int n = static_cast<int>(b.size());
    std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = i == j ? 2 : -std::abs(b[i][j]);
    return a;
}

inline std::vector<Rat> leading_minors(const std::vector<std::vector<long>>& a) {
    int n = static_cast<int>(a.size());
    std::vector<Rat> minors;
    for (int k = 1; k <= n; ++k) {
        // rational Gaussian elimination on the leading k x k block
        std::vector<std::vector<Rat>> m(k, std::vector<Rat>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) m[i][j] = Rat(a[i][j]);
        Rat det = 1;
        for (int c = 0; c < k; ++c) {
            int piv = -1;
            for (int r = c; r < k; ++r)
                if (m[r][c] != 0) { piv = r; break; }
            if (piv < 0) { det = 0; break; }
            if (piv != c) { std::swap(m[piv], m[c]); det = -det; }
            det *= m[c][c];
            for (int r = c + 1; r < k; ++r) {
                Rat t = m[r][c] / m[c][c];
                for (int j = c; j < k; ++j) m[r][j] -= t * m[c][j];
            }
        }
        minors.push_back(det);
    }
    return minors;
}

inline bool positive_definite(const std::vector<std::vector<long>>& a) {
    for (const Rat& d : leading_minors(a))
        if (!(d > 0)) return false;
    return true;
}
inline bool positive_semidefinite_witness(const std::vector<std::vector<long>>& a) {
    bool zero_seen = false;
    for (const Rat& d : leading_minors(a)) {
        if (d < 0) return false;
        if (d == 0) zero_seen = true;
    }
    return zero_seen;
}

struct FiniteTypeReport {
    enum Verdict { FINITE, INCONCLUSIVE } verdict = INCONCLUSIVE;
    BMatrix witness;          // B whose Cartan counterpart decided/illustrated it
    bool semidefinite_witness = false;  // witness Cartan is degenerate psd
    long matrices_visited = 0;
};

namespace detail {
// canonical form of B under simultaneous index permutation
inline std::string bmatrix_key(const BMatrix& b) {
    int n = static_cast<int>(b.size());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::string best;
    do {
        std::string s;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) s += std::to_string(b[perm[i]][perm[j]]) + ",";
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}
}  // namespace detail

// BFS over the mutation class of B-matrices.  FINITE needs a witness whose
// Cartan counterpart is positive definite; otherwise the verdict stays
// INCONCLUSIVE (with a positive-semidefinite witness when one shows up).
inline FiniteTypeReport finite_type_test(const BMatrix& b, long search_bound) {
    if (!is_antisymmetric(b))
        throw std::invalid_argument("exchange matrix must be antisymmetric");
    FiniteTypeReport rep;
    int n = static_cast<int>(b.size());
    std::set<std::string> seen;
    std::deque<BMatrix> frontier;
    frontier.push_back(b);
    seen.insert(detail::bmatrix_key(b));
    while (!frontier.empty() && rep.matrices_visited < search_bound) {
        BMatrix m = std::move(frontier.front());
        frontier.pop_front();
        ++rep.matrices_visited;
        auto cartan = cartan_of(m);
        if (positive_definite(cartan)) {
            rep.verdict = FiniteTypeReport::FINITE;
            rep.witness = m;
            return rep;
        }
        if (!rep.semidefinite_witness && positive_semidefinite_witness(cartan)) {
            rep.semidefinite_witness = true;
            rep.witness = m;
        }
        for (int j = 0; j < n; ++j) {
            BMatrix next = mutate_matrix(m, j);
            if (seen.insert(detail::bmatrix_key(next)).second) frontier.push_back(next);
        }
    }
    return rep;
}

}  // namespace hallcat
