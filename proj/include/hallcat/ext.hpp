#pragma once

// Ext^1(X, Y) modeled on arrow-indexed difference tuples: a tuple d assigns to
// each arrow a matrix d_a : X_{s(a)} -> Y_{t(a)}, and the glued representation
//
//     E(d)_a = [ Y_a  d_a ]
//              [ 0    X_a ]
//
// is an extension of X by Y.  Tuples differing by the image of the graded-map
// differential  (phi_i)_i  |->  (Y_a phi_{s(a)} - phi_{t(a)} X_a)_a  give
// isomorphic extensions, so Ext^1 = D / im(del).  Over a quiver with
// relations, D is cut out by the requirement that E(d) satisfy them.

#include <vector>

#include "hallcat/rep.hpp"

namespace hallcat {

// An arrow tuple d with d[a] : X_{s(a)} -> Y_{t(a)}.
using ArrowTuple = std::vector<FfMatrix>;

inline ArrowTuple zero_arrow_tuple(const Rep& x, const Rep& y) {
    ArrowTuple d;
    for (const Arrow& a : x.quiver->arrows())
        d.emplace_back(x.p, y.dims[a.target], x.dims[a.source]);
    return d;
}

// Glue X under Y along d (Y occupies the leading block at every vertex).
inline Rep middle_term(const Rep& x, const Rep& y, const ArrowTuple& d) {
    Rep e = Rep::make(x.quiver, x.p, y.dims + x.dims);
    for (int a = 0; a < x.quiver->arrow_count(); ++a) {
        const Arrow& ar = x.quiver->arrows()[a];
        for (int i = 0; i < y.dims[ar.target]; ++i) {
            for (int j = 0; j < y.dims[ar.source]; ++j)
                e.mats[a].at(i, j) = y.mats[a].at(i, j);
            for (int j = 0; j < x.dims[ar.source]; ++j)
                e.mats[a].at(i, y.dims[ar.source] + j) = d[a].at(i, j);
        }
        for (int i = 0; i < x.dims[ar.target]; ++i)
            for (int j = 0; j < x.dims[ar.source]; ++j)
                e.mats[a].at(y.dims[ar.target] + i, y.dims[ar.source] + j) =
                    x.mats[a].at(i, j);
    }
    return e;
}

// The inclusion Y -> E(d) and projection E(d) -> X of the glued extension.
inline GradedMap glue_inclusion(const Rep& x, const Rep& y) {
    GradedMap g;
    for (int i = 0; i < x.quiver->vertex_count(); ++i) {
        FfMatrix m(x.p, y.dims[i] + x.dims[i], y.dims[i]);
        for (int r = 0; r < y.dims[i]; ++r) m.at(r, r) = 1;
        g.vertex.push_back(std::move(m));
    }
    return g;
}
inline GradedMap glue_projection(const Rep& x, const Rep& y) {
    GradedMap g;
    for (int i = 0; i < x.quiver->vertex_count(); ++i) {
        FfMatrix m(x.p, x.dims[i], y.dims[i] + x.dims[i]);
        for (int r = 0; r < x.dims[i]; ++r) m.at(r, y.dims[i] + r) = 1;
        g.vertex.push_back(std::move(m));
    }
    return g;
}

// Flattening of arrow tuples into one coordinate vector (for linear algebra).
struct ExtSpace {
    long p = 0;
    std::vector<int> arrow_offset;  // per-arrow start into the flat vector
    int total = 0;                  // dim D before relation constraints
    std::vector<std::vector<long>> d_basis;    // basis of D (flat vectors)
    Subspace coboundaries;                     // im(del), inside D's coordinates
    // d_basis spans D as a subspace of the full tuple space; coboundaries is
    // expressed in *flat* coordinates of the full tuple space as well.
};

namespace detail {
inline std::vector<int> tuple_offsets(const Rep& x, const Rep& y, int& total) {
    std::vector<int> off;
    total = 0;
    for (const Arrow& a : x.quiver->arrows()) {
        off.push_back(total);
        total += y.dims[a.target] * x.dims[a.source];
    }
    return off;
}
inline std::vector<long> flatten(const ArrowTuple& d, const std::vector<int>& off,
                                 int total) {
    std::vector<long> v(total, 0);
    for (size_t a = 0; a < d.size(); ++a) {
        int k = off[a];
        for (int i = 0; i < d[a].rows(); ++i)
            for (int j = 0; j < d[a].cols(); ++j) v[k++] = d[a].at(i, j);
    }
    return v;
}
inline ArrowTuple unflatten(const Rep& x, const Rep& y, const std::vector<long>& v,
                            const std::vector<int>& off) {
    ArrowTuple d = zero_arrow_tuple(x, y);
    for (size_t a = 0; a < d.size(); ++a) {
        int k = off[a];
        for (int i = 0; i < d[a].rows(); ++i)
            for (int j = 0; j < d[a].cols(); ++j) d[a].at(i, j) = v[k++];
    }
    return d;
}
}  // namespace detail

// D(X,Y): tuples whose glued representation satisfies the relations.  For a
// relation-free quiver this is the whole tuple space.
inline ExtSpace ext_space(const Rep& x, const Rep& y) {
    ExtSpace s;
    s.p = x.p;
    s.arrow_offset = detail::tuple_offsets(x, y, s.total);

    // Relation constraints, evaluated on unit tuples: the off-diagonal block
    // of a path product is linear in d, so columns of the constraint matrix
    // are the relation residuals of the unit tuples.
    std::vector<std::vector<long>> cons_cols;
    int cons_rows = -1;
    for (int u = 0; u < s.total; ++u) {
        std::vector<long> unit(s.total, 0);
        unit[u] = 1;
        ArrowTuple d = detail::unflatten(x, y, unit, s.arrow_offset);
        Rep e = middle_term(x, y, d);
        std::vector<long> residual;
        for (const Relation& rel : x.quiver->relations()) {
            int src = x.quiver->path_source(rel.terms.front().path);
            int tgt = x.quiver->path_target(rel.terms.front().path);
            FfMatrix acc(x.p, e.dims[tgt], e.dims[src]);
            for (const auto& t : rel.terms)
                acc = acc + e.path_matrix(t.path).scaled(t.coeff);
            // only the off-diagonal block can be nonzero (X and Y satisfy
            // the relations themselves)
            for (int i = 0; i < y.dims[tgt]; ++i)
                for (int j = 0; j < x.dims[src]; ++j)
                    residual.push_back(acc.at(i, y.dims[src] + j));
        }
        cons_rows = static_cast<int>(residual.size());
        cons_cols.push_back(std::move(residual));
    }
    if (cons_rows <= 0) {
        s.d_basis.clear();
        for (int u = 0; u < s.total; ++u) {
            std::vector<long> unit(s.total, 0);
            unit[u] = 1;
            s.d_basis.push_back(std::move(unit));
        }
    } else {
        FfMatrix cons(x.p, cons_rows, s.total);
        for (int j = 0; j < s.total; ++j)
            for (int i = 0; i < cons_rows; ++i) cons.at(i, j) = cons_cols[j][i];
        s.d_basis = cons.kernel_basis();
    }

    // im(del) spanned by images of the unit graded maps phi.
    std::vector<std::vector<long>> cob;
    for (int i = 0; i < x.quiver->vertex_count(); ++i)
        for (int r = 0; r < y.dims[i]; ++r)
            for (int c = 0; c < x.dims[i]; ++c) {
                GradedMap phi;
                for (int v = 0; v < x.quiver->vertex_count(); ++v)
                    phi.vertex.emplace_back(x.p, y.dims[v], x.dims[v]);
                phi.vertex[i].at(r, c) = 1;
                ArrowTuple d = zero_arrow_tuple(x, y);
                for (int a = 0; a < x.quiver->arrow_count(); ++a) {
                    const Arrow& ar = x.quiver->arrows()[a];
                    d[a] = y.mats[a] * phi.vertex[ar.source] -
                           phi.vertex[ar.target] * x.mats[a];
                }
                cob.push_back(detail::flatten(d, s.arrow_offset, s.total));
            }
    FfMatrix rows(x.p, static_cast<int>(cob.size()), s.total);
    for (size_t r = 0; r < cob.size(); ++r)
        for (int c = 0; c < s.total; ++c) rows.at(static_cast<int>(r), c) = cob[r][c];
    s.coboundaries = Subspace::span(rows);
    return s;
}

inline int ext_dim(const Rep& x, const Rep& y) {
    ExtSpace s = ext_space(x, y);
    return static_cast<int>(s.d_basis.size()) - s.coboundaries.dim();
}

// One representative tuple per Ext class: standard-vector complement of
// im(del) inside D.  Representatives are complete and pairwise inequivalent.
inline std::vector<ArrowTuple> ext_class_reps(const Rep& x, const Rep& y,
                                              const Guards& guards = default_guards()) {
    ExtSpace s = ext_space(x, y);
    int ddim = static_cast<int>(s.d_basis.size());
    int edim = ddim - s.coboundaries.dim();
    Int count = int_pow(x.p, static_cast<unsigned>(edim));
    if (count > guards.ext_scan)
        throw GuardExceeded("Ext class enumeration too large", count, guards.ext_scan);

    // Express im(del) in coordinates of the D basis, then take standard
    // vectors at non-pivot columns of its RREF as the complement basis.
    FfMatrix dmat(x.p, ddim, s.total);
    for (int r = 0; r < ddim; ++r)
        for (int c = 0; c < s.total; ++c) dmat.at(r, c) = s.d_basis[r][c];
    FfMatrix dmat_t = dmat.transposed();
    std::vector<std::vector<long>> cob_in_d;
    for (int r = 0; r < s.coboundaries.dim(); ++r) {
        auto sol = dmat_t.solve(s.coboundaries.basis.row(r));
        if (!sol) throw std::logic_error("coboundary escapes D");
        cob_in_d.push_back(*sol);
    }
    FfMatrix crows(x.p, static_cast<int>(cob_in_d.size()), ddim);
    for (size_t r = 0; r < cob_in_d.size(); ++r)
        for (int c = 0; c < ddim; ++c) crows.at(static_cast<int>(r), c) = cob_in_d[r][c];
    Subspace cob = Subspace::span(crows);
    std::vector<bool> is_piv(ddim, false);
    for (int c : cob.pivot_columns()) is_piv[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < ddim; ++c)
        if (!is_piv[c]) free_cols.push_back(c);

    std::vector<ArrowTuple> reps;
    for_each_coeff(x.p, free_cols.size(), [&](const std::vector<long>& coeff) {
        std::vector<long> flat(s.total, 0);
        for (size_t k = 0; k < free_cols.size(); ++k)
            if (coeff[k])
                for (int c = 0; c < s.total; ++c)
                    flat[c] = (flat[c] + coeff[k] * s.d_basis[free_cols[k]][c]) % x.p;
        reps.push_back(detail::unflatten(x, y, flat, s.arrow_offset));
        return false;
    });
    return reps;
}

inline bool is_split_tuple(const Rep& x, const Rep& y, const ArrowTuple& d) {
    ExtSpace s = ext_space(x, y);
    return s.coboundaries.contains(detail::flatten(d, s.arrow_offset, s.total));
}

}  // namespace hallcat
