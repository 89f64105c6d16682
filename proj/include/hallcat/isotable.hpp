#pragma once

// Isomorphism testing, automorphism counting, exhaustive iso-class tables for
// a fixed dimension vector, submodule scans and Hall numbers.  Everything is
// a finite scan with a guard; the tables are memoized per (quiver, p, dim).

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hallcat/ext.hpp"
#include "hallcat/rep.hpp"

namespace hallcat {

inline bool all_mats_zero(const Rep& m) {
    for (const FfMatrix& mat : m.mats)
        if (!mat.is_zero()) return false;
    return true;
}

inline bool is_isomorphic(const Rep& m, const Rep& n,
                          const Guards& guards = default_guards()) {
    if (m.dims != n.dims) return false;
    if (m.total_dim() == 0) return true;
    // semisimple reps (every arrow acts as zero) are pinned down by dims
    bool mz = all_mats_zero(m), nz = all_mats_zero(n);
    if (mz || nz) return mz && nz;
    auto basis = hom_space(m, n);
    // quick necessary check: a graded iso needs full hom rank vertexwise
    if (basis.empty()) return false;
    Int scans = int_pow(m.p, static_cast<unsigned>(basis.size()));
    if (scans > guards.hom_scan)
        throw GuardExceeded("isomorphism scan too large", scans, guards.hom_scan);
    bool found = false;
    for_each_coeff(m.p, basis.size(), [&](const std::vector<long>& c) {
        GradedMap g = combine(basis, c, m.p, m, n);
        if (all_invertible(g)) { found = true; return true; }
        return false;
    });
    return found;
}

inline Int gl_order(long p, int n) {
    Int r = 1, pn = int_pow(p, static_cast<unsigned>(n));
    for (int i = 0; i < n; ++i) r *= pn - int_pow(p, static_cast<unsigned>(i));
    return r;
}

inline Int aut_order(const Rep& m, const Guards& guards = default_guards()) {
    if (m.total_dim() == 0) return 1;
    if (all_mats_zero(m)) {  // semisimple: block automorphisms per vertex
        Int r = 1;
        for (int d : m.dims) r *= gl_order(m.p, d);
        return r;
    }
    auto basis = hom_space(m, m);
    Int scans = int_pow(m.p, static_cast<unsigned>(basis.size()));
    if (scans > guards.hom_scan)
        throw GuardExceeded("automorphism scan too large", scans, guards.hom_scan);
    Int count = 0;
    for_each_coeff(m.p, basis.size(), [&](const std::vector<long>& c) {
        if (all_invertible(combine(basis, c, m.p, m, m))) ++count;
        return false;
    });
    return count;
}

// |G_d| = prod_i |GL_{d_i}(F_p)|; orbits of G_d on the matrix tuples are the
// iso classes, so each class holds |G_d| / |Aut| points.
inline Int group_order(long p, const DimVector& d) {
    Int r = 1;
    for (int x : d) r *= gl_order(p, x);
    return r;
}

struct IsoClass {
    Rep rep;
    std::string label;     // stable within one table: c0, c1, ...
    Int orbit_size = 0;    // points of the class in the representation space
    Int aut = 0;
};

// cheap invariant to pre-bucket candidates before the real iso test
inline std::vector<int> rep_signature(const Rep& m) {
    std::vector<int> sig;
    for (const FfMatrix& mat : m.mats) sig.push_back(mat.rank());
    RadSocTop rst = rad_soc_top(m);
    for (const Subspace& s : rst.radical) sig.push_back(s.dim());
    for (const Subspace& s : rst.socle) sig.push_back(s.dim());
    // products of consecutive arrow pairs catch deeper structure
    for (int a = 0; a < m.quiver->arrow_count(); ++a)
        for (int b = 0; b < m.quiver->arrow_count(); ++b) {
            const Arrow& aa = m.quiver->arrows()[a];
            const Arrow& ab = m.quiver->arrows()[b];
            if (aa.target == ab.source) sig.push_back((m.mats[b] * m.mats[a]).rank());
        }
    return sig;
}

struct IsoTable {
    std::shared_ptr<const Quiver> quiver;
    long p = 0;
    DimVector dims;
    bool nilpotent_only = false;
    std::vector<IsoClass> classes;
    Int point_count = 0;  // relation points (after the nilpotency filter if set)

    const IsoClass* find(const Rep& m, const Guards& guards = default_guards()) const {
        for (const IsoClass& c : classes)
            if (is_isomorphic(c.rep, m, guards)) return &c;
        return nullptr;
    }
    const IsoClass& classify(const Rep& m,
                             const Guards& guards = default_guards()) const {
        const IsoClass* c = find(m, guards);
        if (!c) throw std::logic_error("module not present in its iso table");
        return *c;
    }
};

// Exhaustive orbit table: scans every matrix tuple of the dimension vector.
inline IsoTable build_iso_table(std::shared_ptr<const Quiver> q, long p, DimVector dims,
                                bool nilpotent_only,
                                const Guards& guards = default_guards()) {
    IsoTable t;
    t.quiver = q;
    t.p = p;
    t.dims = dims;
    t.nilpotent_only = nilpotent_only;

    unsigned coords = 0;
    for (const Arrow& a : q->arrows())
        coords += static_cast<unsigned>(dims[a.target] * dims[a.source]);
    Int points = int_pow(p, coords);
    if (points > guards.point_scan)
        throw GuardExceeded("representation point scan too large", points,
                            guards.point_scan);

    std::map<std::vector<int>, std::vector<size_t>> buckets;
    for_each_coeff(p, coords, [&](const std::vector<long>& c) {
        Rep m = Rep::make(q, p, dims);
        size_t k = 0;
        for (int a = 0; a < q->arrow_count(); ++a) {
            const Arrow& ar = q->arrows()[a];
            for (int i = 0; i < dims[ar.target]; ++i)
                for (int j = 0; j < dims[ar.source]; ++j) m.mats[a].at(i, j) = c[k++];
        }
        if (!m.satisfies_relations()) return false;
        if (nilpotent_only && !m.is_nilpotent()) return false;
        ++t.point_count;
        auto sig = rep_signature(m);
        bool matched = false;
        for (size_t idx : buckets[sig])
            if (is_isomorphic(t.classes[idx].rep, m, guards)) {
                ++t.classes[idx].orbit_size;
                matched = true;
                break;
            }
        if (!matched) {
            IsoClass cl;
            cl.rep = m;
            cl.label = "c" + std::to_string(t.classes.size());
            cl.orbit_size = 1;
            buckets[sig].push_back(t.classes.size());
            t.classes.push_back(std::move(cl));
        }
        return false;
    });

    Int check = 0;
    Int gd = group_order(p, dims);
    for (IsoClass& c : t.classes) {
        if (gd % c.orbit_size != 0)
            throw std::logic_error("orbit size does not divide the group order");
        c.aut = gd / c.orbit_size;
        // cross-check by direct endomorphism scan when that scan is affordable
        Int scans = int_pow(p, static_cast<unsigned>(hom_dim(c.rep, c.rep)));
        if (scans <= guards.hom_scan && aut_order(c.rep, guards) != c.aut)
            throw std::logic_error("orbit-stabilizer mismatch in iso table");
        check += c.orbit_size;
    }
    if (check != t.point_count) throw std::logic_error("iso table lost points");
    return t;
}

// Memoized access keyed by (quiver identity, p, dims, nilpotent flag).
class Universe {
public:
    explicit Universe(std::shared_ptr<const Quiver> q, long p, bool nilpotent_only = true,
                      Guards guards = default_guards())
        : q_(std::move(q)), p_(p), nilp_(nilpotent_only), guards_(guards) {}

    const IsoTable& table(const DimVector& dims) {
        auto it = tables_.find(dims);
        if (it == tables_.end())
            it = tables_.emplace(dims, build_iso_table(q_, p_, dims, nilp_, guards_)).first;
        return it->second;
    }
    std::shared_ptr<const Quiver> quiver() const { return q_; }
    long p() const { return p_; }
    const Guards& guards() const { return guards_; }

    const IsoClass& classify(const Rep& m) { return table(m.dims).classify(m, guards_); }

private:
    std::shared_ptr<const Quiver> q_;
    long p_;
    bool nilp_;
    Guards guards_;
    std::map<DimVector, IsoTable> tables_;
};

// Visits each submodule tuple of l whose vertexwise dimensions are sub_dims.
inline void for_each_submodule(const Rep& l, const DimVector& sub_dims,
                               const std::function<void(const SubTuple&)>& visit,
                               const Guards& guards = default_guards()) {
    Int count = 1;
    for (size_t i = 0; i < sub_dims.size(); ++i)
        count *= gaussian_binomial(l.p, l.dims[i], sub_dims[i]);
    if (count > guards.subspace_scan)
        throw GuardExceeded("submodule scan too large", count, guards.subspace_scan);

    int nv = l.quiver->vertex_count();
    SubTuple u(nv, Subspace::zero(l.p, 0));
    std::function<void(int)> rec = [&](int i) {
        if (i == nv) {
            if (is_stable(l, u)) visit(u);
            return;
        }
        for_each_subspace(l.p, l.dims[i], sub_dims[i], [&](const Subspace& s) {
            u[i] = s;
            rec(i + 1);
        }, guards);
    };
    rec(0);
}

// g^L_{XY}: submodules of L isomorphic to Y with quotient isomorphic to X.
inline Int hall_number(const Rep& x, const Rep& y, const Rep& l,
                       const Guards& guards = default_guards()) {
    if (x.dims + y.dims != l.dims) return 0;
    Int count = 0;
    for_each_submodule(l, y.dims, [&](const SubTuple& u) {
        if (is_isomorphic(sub_rep(l, u), y, guards) &&
            is_isomorphic(quotient_rep(l, u), x, guards))
            ++count;
    }, guards);
    return count;
}

// |Ext^1(X,Y)_E|: Ext classes (one representative tuple each) whose glued
// middle term is isomorphic to e.
inline Int ext_stratum_count(const Rep& x, const Rep& y, const Rep& e,
                             const Guards& guards = default_guards()) {
    if (!(x.dims + y.dims == e.dims)) return 0;
    Int count = 0;
    for (const ArrowTuple& d : ext_class_reps(x, y, guards))
        if (is_isomorphic(middle_term(x, y, d), e, guards)) ++count;
    return count;
}

// |Hom(L1,L2)_{Y[1] + X}|: maps with kernel isomorphic to Y and cokernel
// isomorphic to X, by exhaustive scan of the Hom space.
inline Int hom_stratum_count(const Rep& l1, const Rep& l2, const Rep& y, const Rep& x,
                             const Guards& guards = default_guards()) {
    auto basis = hom_space(l1, l2);
    Int scans = int_pow(l1.p, static_cast<unsigned>(basis.size()));
    if (scans > guards.hom_scan)
        throw GuardExceeded("Hom stratum scan too large", scans, guards.hom_scan);
    Int count = 0;
    for_each_coeff(l1.p, basis.size(), [&](const std::vector<long>& c) {
        GradedMap g = combine(basis, c, l1.p, l1, l2);
        SubTuple ker = kernel_tuple(l1, g);
        DimVector kd(l1.quiver->vertex_count());
        for (size_t i = 0; i < ker.size(); ++i) kd[i] = ker[i].dim();
        if (kd != y.dims) return false;
        SubTuple img = image_tuple(l2, g);
        DimVector id(l1.quiver->vertex_count());
        for (size_t i = 0; i < img.size(); ++i) id[i] = img[i].dim();
        if (l2.dims - id != x.dims) return false;
        if (is_isomorphic(sub_rep(l1, ker), y, guards) &&
            is_isomorphic(quotient_rep(l2, img), x, guards))
            ++count;
        return false;
    });
    return count;
}

// Chains L = V^0 >= V^1 >= ... >= V^m = 0 of arrow-stable tuples with
// V^{k-1}/V^k isomorphic to c_k copies of the simple at vertex j_k.
// Steps with bit 0 contribute an equality V^{k-1} = V^k.
inline Int flag_count(const Rep& l, const std::vector<std::pair<int, int>>& type,
                      size_t step = 0, const Guards& guards = default_guards()) {
    if (step == type.size()) return l.total_dim() == 0 ? 1 : 0;
    auto [j, c] = type[step];
    if (c == 0) return flag_count(l, type, step + 1, guards);
    if (l.dims[j] < 1) return 0;
    DimVector sub_dims = l.dims;
    sub_dims[j] -= 1;
    Rep sj = simple_rep(l.quiver, l.p, j);
    Int count = 0;
    for_each_submodule(l, sub_dims, [&](const SubTuple& u) {
        if (!is_isomorphic(quotient_rep(l, u), sj, guards)) return;
        count += flag_count(sub_rep(l, u), type, step + 1, guards);
    }, guards);
    return count;
}

}  // namespace hallcat
