#pragma once

// Representations of a quiver-with-relations over F_p: one matrix per arrow,
// graded maps, sub/quotient constructions, radical/socle, nilpotency.

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "hallcat/ffmatrix.hpp"
#include "hallcat/quiver.hpp"

namespace hallcat {

struct Rep {
    std::shared_ptr<const Quiver> quiver;
    long p = 0;
    DimVector dims;
    std::vector<FfMatrix> mats;  // mats[a]: d_target x d_source

    static Rep make(std::shared_ptr<const Quiver> q, long p, DimVector dims) {
        Rep r;
        r.quiver = std::move(q);
        r.p = p;
        r.dims = std::move(dims);
        for (const Arrow& a : r.quiver->arrows())
            r.mats.emplace_back(p, r.dims[a.target], r.dims[a.source]);
        return r;
    }

    static Rep zero(std::shared_ptr<const Quiver> q, long p) {
        DimVector d(q->vertex_count(), 0);
        return make(std::move(q), p, std::move(d));
    }

    int total_dim() const { return total(dims); }
    bool is_zero_module() const { return total_dim() == 0; }

    FfMatrix path_matrix(const Path& path) const {
        const auto& arrows = quiver->arrows();
        FfMatrix m = FfMatrix::identity(p, dims[arrows[path.arrows.front()].source]);
        for (int a : path.arrows) m = mats[a] * m;
        return m;
    }

    bool satisfies_relations() const {
        for (const Relation& rel : quiver->relations()) {
            int src = quiver->path_source(rel.terms.front().path);
            int tgt = quiver->path_target(rel.terms.front().path);
            FfMatrix acc(p, dims[tgt], dims[src]);
            for (const auto& t : rel.terms)
                acc = acc + path_matrix(t.path).scaled(t.coeff);
            if (!acc.is_zero()) return false;
        }
        return true;
    }

    // W_{k+1} = sum_alpha x_alpha(W_k); nilpotent iff the chain hits zero
    // within total_dim steps (W_k is spanned by images of length-k paths).
    bool is_nilpotent() const {
        std::vector<Subspace> w;
        for (int i = 0; i < quiver->vertex_count(); ++i)
            w.push_back(Subspace::full(p, dims[i]));
        int bound = total_dim() + 1;
        for (int step = 0; step < bound; ++step) {
            std::vector<std::vector<std::vector<long>>> gen(quiver->vertex_count());
            for (int a = 0; a < quiver->arrow_count(); ++a) {
                const Arrow& ar = quiver->arrows()[a];
                for (int r = 0; r < w[ar.source].dim(); ++r)
                    gen[ar.target].push_back(mats[a].apply(w[ar.source].basis.row(r)));
            }
            bool all_zero = true;
            std::vector<Subspace> next;
            for (int i = 0; i < quiver->vertex_count(); ++i) {
                FfMatrix rows(p, static_cast<int>(gen[i].size()), dims[i]);
                for (size_t r = 0; r < gen[i].size(); ++r)
                    for (int c = 0; c < dims[i]; ++c)
                        rows.at(static_cast<int>(r), c) = gen[i][r][c];
                next.push_back(Subspace::span(rows));
                if (next.back().dim() > 0) all_zero = false;
            }
            if (all_zero) return true;
            w = std::move(next);
        }
        return false;
    }
};

inline Rep direct_sum(const Rep& m, const Rep& n) {
    Rep r = Rep::make(m.quiver, m.p, m.dims + n.dims);
    for (int a = 0; a < m.quiver->arrow_count(); ++a) {
        const Arrow& ar = m.quiver->arrows()[a];
        for (int i = 0; i < m.dims[ar.target]; ++i)
            for (int j = 0; j < m.dims[ar.source]; ++j)
                r.mats[a].at(i, j) = m.mats[a].at(i, j);
        for (int i = 0; i < n.dims[ar.target]; ++i)
            for (int j = 0; j < n.dims[ar.source]; ++j)
                r.mats[a].at(m.dims[ar.target] + i, m.dims[ar.source] + j) =
                    n.mats[a].at(i, j);
    }
    return r;
}

// Simple module S_i (0-based vertex).
inline Rep simple_rep(std::shared_ptr<const Quiver> q, long p, int vertex) {
    DimVector d(q->vertex_count(), 0);
    d[vertex] = 1;
    return Rep::make(std::move(q), p, std::move(d));
}

// A graded linear map between two representations (not necessarily a module
// homomorphism); one matrix per vertex, acting M -> N.
struct GradedMap {
    std::vector<FfMatrix> vertex;  // vertex[i]: dims_N[i] x dims_M[i]
};

inline GradedMap compose(const GradedMap& g, const GradedMap& f) {
    GradedMap r;
    for (size_t i = 0; i < f.vertex.size(); ++i) r.vertex.push_back(g.vertex[i] * f.vertex[i]);
    return r;
}
inline bool graded_equal(const GradedMap& a, const GradedMap& b) {
    return a.vertex == b.vertex;
}
inline bool all_invertible(const GradedMap& g) {
    for (const FfMatrix& m : g.vertex)
        if (!m.is_invertible()) return false;
    return true;
}
inline bool all_injective(const GradedMap& g) {
    for (const FfMatrix& m : g.vertex)
        if (m.rank() != m.cols()) return false;
    return true;
}
inline bool all_surjective(const GradedMap& g) {
    for (const FfMatrix& m : g.vertex)
        if (m.rank() != m.rows()) return false;
    return true;
}

// Basis of Hom(M, N) = { phi : phi_t X_a = Y_a phi_s for every arrow }.
inline std::vector<GradedMap> hom_space(const Rep& m, const Rep& n) {
    int nv = m.quiver->vertex_count();
    std::vector<int> offset(nv + 1, 0);
    for (int i = 0; i < nv; ++i)
        offset[i + 1] = offset[i] + n.dims[i] * m.dims[i];
    int unknowns = offset[nv];
    auto var = [&](int vtx, int r, int c) { return offset[vtx] + r * m.dims[vtx] + c; };

    std::vector<std::vector<long>> rows;
    for (int a = 0; a < m.quiver->arrow_count(); ++a) {
        const Arrow& ar = m.quiver->arrows()[a];
        int s = ar.source, t = ar.target;
        // (phi_t M_a - N_a phi_s)[r][c] = 0
        for (int r = 0; r < n.dims[t]; ++r)
            for (int c = 0; c < m.dims[s]; ++c) {
                std::vector<long> row(unknowns, 0);
                for (int k = 0; k < m.dims[t]; ++k)
                    row[var(t, r, k)] = (row[var(t, r, k)] + m.mats[a].at(k, c)) % m.p;
                for (int k = 0; k < n.dims[s]; ++k)
                    row[var(s, k, c)] =
                        (row[var(s, k, c)] - n.mats[a].at(r, k) % m.p + m.p) % m.p;
                rows.push_back(std::move(row));
            }
    }
    FfMatrix sys(m.p, static_cast<int>(rows.size()), unknowns);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < unknowns; ++j) sys.at(static_cast<int>(i), j) = rows[i][j];
    std::vector<GradedMap> basis;
    for (const auto& v : sys.kernel_basis()) {
        GradedMap g;
        for (int i = 0; i < nv; ++i) {
            FfMatrix mat(m.p, n.dims[i], m.dims[i]);
            for (int r = 0; r < n.dims[i]; ++r)
                for (int c = 0; c < m.dims[i]; ++c) mat.at(r, c) = v[var(i, r, c)];
            g.vertex.push_back(std::move(mat));
        }
        basis.push_back(std::move(g));
    }
    return basis;
}

inline int hom_dim(const Rep& m, const Rep& n) {
    return static_cast<int>(hom_space(m, n).size());
}

inline GradedMap combine(const std::vector<GradedMap>& basis,
                         const std::vector<long>& coeff, long p,
                         const Rep& m, const Rep& n) {
    GradedMap g;
    for (int i = 0; i < m.quiver->vertex_count(); ++i)
        g.vertex.emplace_back(p, n.dims[i], m.dims[i]);
    for (size_t k = 0; k < basis.size(); ++k)
        if (coeff[k])
            for (size_t v = 0; v < g.vertex.size(); ++v)
                g.vertex[v] = g.vertex[v] + basis[k].vertex[v].scaled(coeff[k]);
    return g;
}

// Enumerates all p^k coefficient vectors; the visitor returns true to stop.
inline void for_each_coeff(long p, size_t k,
                           const std::function<bool(const std::vector<long>&)>& f) {
    std::vector<long> c(k, 0);
    while (true) {
        if (f(c)) return;
        size_t t = 0;
        while (t < k && c[t] == p - 1) c[t++] = 0;
        if (t == k) return;
        ++c[t];
    }
}

// A subrepresentation given by one arrow-stable subspace per vertex.
using SubTuple = std::vector<Subspace>;

inline bool is_stable(const Rep& l, const SubTuple& u) {
    for (int a = 0; a < l.quiver->arrow_count(); ++a) {
        const Arrow& ar = l.quiver->arrows()[a];
        for (int r = 0; r < u[ar.source].dim(); ++r)
            if (!u[ar.target].contains(l.mats[a].apply(u[ar.source].basis.row(r))))
                return false;
    }
    return true;
}

inline Rep sub_rep(const Rep& l, const SubTuple& u) {
    DimVector d(l.quiver->vertex_count());
    for (size_t i = 0; i < u.size(); ++i) d[i] = u[i].dim();
    Rep r = Rep::make(l.quiver, l.p, d);
    for (int a = 0; a < l.quiver->arrow_count(); ++a) {
        const Arrow& ar = l.quiver->arrows()[a];
        for (int c = 0; c < u[ar.source].dim(); ++c) {
            auto img = l.mats[a].apply(u[ar.source].basis.row(c));
            auto coords = u[ar.target].coordinates(img);
            if (!coords) throw std::logic_error("sub_rep: tuple not arrow-stable");
            for (int rr = 0; rr < u[ar.target].dim(); ++rr)
                r.mats[a].at(rr, c) = (*coords)[rr];
        }
    }
    return r;
}

// Quotient L/U in the basis of standard vectors at the non-pivot columns of
// each U_i; reduction by the RREF basis is exactly the projection.
inline Rep quotient_rep(const Rep& l, const SubTuple& u) {
    int nv = l.quiver->vertex_count();
    std::vector<std::vector<int>> compl_cols(nv);
    for (int i = 0; i < nv; ++i) {
        std::vector<bool> is_piv(l.dims[i], false);
        for (int c : u[i].pivot_columns()) is_piv[c] = true;
        for (int c = 0; c < l.dims[i]; ++c)
            if (!is_piv[c]) compl_cols[i].push_back(c);
    }
    DimVector d(nv);
    for (int i = 0; i < nv; ++i) d[i] = static_cast<int>(compl_cols[i].size());
    Rep r = Rep::make(l.quiver, l.p, d);
    for (int a = 0; a < l.quiver->arrow_count(); ++a) {
        const Arrow& ar = l.quiver->arrows()[a];
        for (size_t c = 0; c < compl_cols[ar.source].size(); ++c) {
            std::vector<long> e(l.dims[ar.source], 0);
            e[compl_cols[ar.source][c]] = 1;
            auto img = u[ar.target].reduce(l.mats[a].apply(e));
            for (size_t rr = 0; rr < compl_cols[ar.target].size(); ++rr)
                r.mats[a].at(static_cast<int>(rr), static_cast<int>(c)) =
                    img[compl_cols[ar.target][rr]];
        }
    }
    return r;
}

// Kernel of a graded module map as a subrepresentation of its source.
inline SubTuple kernel_tuple(const Rep& src, const GradedMap& g) {
    SubTuple u;
    for (int i = 0; i < src.quiver->vertex_count(); ++i) {
        auto ker = g.vertex[i].kernel_basis();
        FfMatrix rows(src.p, static_cast<int>(ker.size()), src.dims[i]);
        for (size_t r = 0; r < ker.size(); ++r)
            for (int c = 0; c < src.dims[i]; ++c)
                rows.at(static_cast<int>(r), c) = ker[r][c];
        u.push_back(Subspace::span(rows));
    }
    return u;
}

// Image of a graded module map as a subrepresentation of its target.
inline SubTuple image_tuple(const Rep& tgt, const GradedMap& g) {
    SubTuple u;
    for (int i = 0; i < tgt.quiver->vertex_count(); ++i)
        u.push_back(Subspace::span(g.vertex[i].transposed()));
    return u;
}

struct RadSocTop {
    SubTuple radical;
    SubTuple socle;
    DimVector top;
};

inline RadSocTop rad_soc_top(const Rep& m) {
    int nv = m.quiver->vertex_count();
    RadSocTop out;
    for (int i = 0; i < nv; ++i) {
        std::vector<std::vector<long>> gens;
        for (int a = 0; a < m.quiver->arrow_count(); ++a) {
            const Arrow& ar = m.quiver->arrows()[a];
            if (ar.target != i) continue;
            for (int c = 0; c < m.dims[ar.source]; ++c) {
                std::vector<long> e(m.dims[ar.source], 0);
                e[c] = 1;
                gens.push_back(m.mats[a].apply(e));
            }
        }
        FfMatrix rows(m.p, static_cast<int>(gens.size()), m.dims[i]);
        for (size_t r = 0; r < gens.size(); ++r)
            for (int c = 0; c < m.dims[i]; ++c)
                rows.at(static_cast<int>(r), c) = gens[r][c];
        out.radical.push_back(Subspace::span(rows));

        Subspace soc = Subspace::full(m.p, m.dims[i]);
        for (int a = 0; a < m.quiver->arrow_count(); ++a) {
            const Arrow& ar = m.quiver->arrows()[a];
            if (ar.source != i) continue;
            auto ker = m.mats[a].kernel_basis();
            FfMatrix krows(m.p, static_cast<int>(ker.size()), m.dims[i]);
            for (size_t r = 0; r < ker.size(); ++r)
                for (int c = 0; c < m.dims[i]; ++c)
                    krows.at(static_cast<int>(r), c) = ker[r][c];
            soc = intersect(soc, Subspace::span(krows));
        }
        out.socle.push_back(soc);
    }
    out.top = m.dims;
    for (int i = 0; i < nv; ++i) out.top[i] -= out.radical[i].dim();
    return out;
}

}  // namespace hallcat
