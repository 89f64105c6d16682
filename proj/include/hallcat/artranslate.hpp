#pragma once

// Projective and injective modules in their path bases, projective covers,
// and the Auslander-Reiten translate via the Nakayama transport of a minimal
// projective presentation (valid for relation-free acyclic quivers, including
// regular Kronecker modules where dimension vectors underdetermine classes).

#include <memory>
#include <vector>

#include "hallcat/isotable.hpp"

namespace hallcat {

// A representation with a distinguished path basis per vertex.  An empty path
// stands for the trivial path at the defining vertex.
struct PathRep {
    Rep rep;
    int defining_vertex = -1;
    std::vector<std::vector<Path>> basis;  // basis[v][k] = k-th basis path at v
};

namespace detail {
inline int path_index(const std::vector<Path>& basis, const Path& p) {
    for (size_t k = 0; k < basis.size(); ++k)
        if (basis[k].arrows == p.arrows) return static_cast<int>(k);
    return -1;
}
}  // namespace detail

// P_i: basis at vertex j = paths i -> j (trivial path included at i itself);
// the arrow alpha acts by appending alpha to the path.
inline PathRep proj_path_rep(std::shared_ptr<const Quiver> q, long p, int i) {
    if (!q->is_hereditary())
        throw std::invalid_argument("path-basis projectives need a relation-free acyclic quiver");
    PathRep pr;
    pr.defining_vertex = i;
    pr.basis.assign(q->vertex_count(), {});
    pr.basis[i].push_back(Path{{}});
    for (const Path& path : q->all_paths())
        if (q->path_source(path) == i) pr.basis[q->path_target(path)].push_back(path);
    DimVector d(q->vertex_count());
    for (int v = 0; v < q->vertex_count(); ++v) d[v] = static_cast<int>(pr.basis[v].size());
    pr.rep = Rep::make(q, p, d);
    for (int a = 0; a < q->arrow_count(); ++a) {
        const Arrow& ar = q->arrows()[a];
        for (size_t c = 0; c < pr.basis[ar.source].size(); ++c) {
            Path ext = pr.basis[ar.source][c];
            ext.arrows.push_back(a);
            int r = detail::path_index(pr.basis[ar.target], ext);
            if (r >= 0) pr.rep.mats[a].at(r, static_cast<int>(c)) = 1;
        }
    }
    return pr;
}

// I_i: basis at vertex j = (duals of) paths j -> i; alpha sends the dual of p
// to the dual of q exactly when p = (alpha, then q).
inline PathRep inj_path_rep(std::shared_ptr<const Quiver> q, long p, int i) {
    if (!q->is_hereditary())
        throw std::invalid_argument("path-basis injectives need a relation-free acyclic quiver");
    PathRep pr;
    pr.defining_vertex = i;
    pr.basis.assign(q->vertex_count(), {});
    pr.basis[i].push_back(Path{{}});
    for (const Path& path : q->all_paths())
        if (q->path_target(path) == i) pr.basis[q->path_source(path)].push_back(path);
    DimVector d(q->vertex_count());
    for (int v = 0; v < q->vertex_count(); ++v) d[v] = static_cast<int>(pr.basis[v].size());
    pr.rep = Rep::make(q, p, d);
    for (int a = 0; a < q->arrow_count(); ++a) {
        const Arrow& ar = q->arrows()[a];
        for (size_t c = 0; c < pr.basis[ar.source].size(); ++c) {
            const Path& full = pr.basis[ar.source][c];
            if (full.arrows.empty() || full.arrows.front() != a) continue;
            Path tail{std::vector<int>(full.arrows.begin() + 1, full.arrows.end())};
            int r = detail::path_index(pr.basis[ar.target], tail);
            if (r >= 0) pr.rep.mats[a].at(r, static_cast<int>(c)) = 1;
        }
    }
    return pr;
}

inline Rep proj_rep(std::shared_ptr<const Quiver> q, long p, int i) {
    return proj_path_rep(std::move(q), p, i).rep;
}
inline Rep inj_rep(std::shared_ptr<const Quiver> q, long p, int i) {
    return inj_path_rep(std::move(q), p, i).rep;
}

// Direct sum of path-basis projectives (or injectives) with block bookkeeping.
struct PathSum {
    std::vector<PathRep> summands;     // one entry per block
    Rep rep;                           // the assembled module
    // offset[s][v]: column where block s starts at vertex v
    std::vector<std::vector<int>> offset;
};

inline PathSum path_sum(std::shared_ptr<const Quiver> q, long p,
                        const std::vector<int>& vertices, bool injective) {
    PathSum s;
    s.rep = Rep::zero(q, p);
    for (int i : vertices) {
        PathRep pr = injective ? inj_path_rep(q, p, i) : proj_path_rep(q, p, i);
        std::vector<int> off(q->vertex_count());
        for (int v = 0; v < q->vertex_count(); ++v) off[v] = s.rep.dims[v];
        s.offset.push_back(std::move(off));
        s.rep = s.summands.empty() ? pr.rep : direct_sum(s.rep, pr.rep);
        s.summands.push_back(std::move(pr));
    }
    return s;
}

// Projective cover of M: one P_i per top generator, mapping its trivial path
// onto a lift of the top and every basis path to the corresponding iterate.
struct Cover {
    PathSum proj;
    GradedMap map;  // proj.rep -> M, vertexwise surjective
};

inline Cover projective_cover(const Rep& m) {
    auto q = m.quiver;
    RadSocTop rst = rad_soc_top(m);
    std::vector<int> gens;          // defining vertex per generator
    std::vector<std::vector<long>> lift;  // chosen top lift in M
    for (int v = 0; v < q->vertex_count(); ++v) {
        std::vector<bool> is_piv(m.dims[v], false);
        for (int c : rst.radical[v].pivot_columns()) is_piv[c] = true;
        int taken = 0;
        for (int c = 0; c < m.dims[v] && taken < rst.top[v]; ++c) {
            if (is_piv[c]) continue;
            gens.push_back(v);
            std::vector<long> e(m.dims[v], 0);
            e[c] = 1;
            lift.push_back(std::move(e));
            ++taken;
        }
    }
    Cover cov;
    cov.proj = path_sum(q, m.p, gens, false);
    GradedMap g;
    for (int v = 0; v < q->vertex_count(); ++v)
        g.vertex.emplace_back(m.p, m.dims[v], cov.proj.rep.dims[v]);
    for (size_t s = 0; s < cov.proj.summands.size(); ++s) {
        const PathRep& pr = cov.proj.summands[s];
        for (int v = 0; v < q->vertex_count(); ++v)
            for (size_t k = 0; k < pr.basis[v].size(); ++k) {
                std::vector<long> img = lift[s];
                if (!pr.basis[v][k].arrows.empty())
                    img = m.path_matrix(pr.basis[v][k]).apply(lift[s]);
                int col = cov.proj.offset[s][v] + static_cast<int>(k);
                for (int r = 0; r < m.dims[v]; ++r) g.vertex[v].at(r, col) = img[r];
            }
    }
    for (int v = 0; v < q->vertex_count(); ++v)
        if (g.vertex[v].rank() != m.dims[v])
            throw std::logic_error("projective cover failed to surject");
    cov.map = std::move(g);
    return cov;
}

inline bool has_summand(const Rep& m, const Rep& cand,
                        const Guards& guards = default_guards()) {
    if (cand.total_dim() == 0 || !leq(cand.dims, m.dims)) return false;
    auto in = hom_space(cand, m);
    auto out = hom_space(m, cand);
    Int scans = int_pow(m.p, static_cast<unsigned>(in.size() + out.size()));
    if (scans > guards.hom_scan)
        throw GuardExceeded("summand scan too large", scans, guards.hom_scan);
    GradedMap id;
    for (int v = 0; v < m.quiver->vertex_count(); ++v)
        id.vertex.push_back(FfMatrix::identity(m.p, cand.dims[v]));
    bool found = false;
    for_each_coeff(m.p, in.size(), [&](const std::vector<long>& ci) {
        GradedMap f = combine(in, ci, m.p, cand, m);
        if (!all_injective(f)) return false;
        for_each_coeff(m.p, out.size(), [&](const std::vector<long>& co) {
            GradedMap g = combine(out, co, m.p, m, cand);
            if (graded_equal(compose(g, f), id)) { found = true; return true; }
            return false;
        });
        return found;
    });
    return found;
}

inline bool has_projective_summand(const Rep& m,
                                   const Guards& guards = default_guards()) {
    for (int i = 0; i < m.quiver->vertex_count(); ++i)
        if (has_summand(m, proj_rep(m.quiver, m.p, i), guards)) return true;
    return false;
}
inline bool has_injective_summand(const Rep& m,
                                  const Guards& guards = default_guards()) {
    for (int i = 0; i < m.quiver->vertex_count(); ++i)
        if (has_summand(m, inj_rep(m.quiver, m.p, i), guards)) return true;
    return false;
}

namespace detail {
// Nakayama transport of f : P_1 -> P_0 (both with path-basis block data) to
// nu(f) : nu(P_1) -> nu(P_0), sending each right-multiplication-by-w block
// P_a -> P_b (w a path b -> a) to the block I_a -> I_b that strips w.
inline GradedMap nakayama_map(const PathSum& p1, const PathSum& p0,
                              const GradedMap& f, const PathSum& nu1,
                              const PathSum& nu0) {
    auto q = p1.rep.quiver;
    long p = p1.rep.p;
    GradedMap nf;
    for (int v = 0; v < q->vertex_count(); ++v)
        nf.vertex.emplace_back(p, nu0.rep.dims[v], nu1.rep.dims[v]);
    for (size_t s = 0; s < p1.summands.size(); ++s) {
        int a = p1.summands[s].defining_vertex;
        int gen_col = p1.offset[s][a];  // trivial path is basis element 0
        for (size_t t = 0; t < p0.summands.size(); ++t) {
            int b = p0.summands[t].defining_vertex;
            const PathRep& pb = p0.summands[t];
            // coefficient of each path w : b -> a in the image of the generator
            for (size_t wk = 0; wk < pb.basis[a].size(); ++wk) {
                long c = f.vertex[a].at(p0.offset[t][a] + static_cast<int>(wk), gen_col);
                if (!c) continue;
                const Path& w = pb.basis[a][wk];
                // nu block: dual of p (j -> a) maps to dual of q with p = q.w
                for (int v = 0; v < q->vertex_count(); ++v) {
                    const auto& ia = nu1.summands[s].basis[v];
                    const auto& ib = nu0.summands[t].basis[v];
                    for (size_t pk = 0; pk < ia.size(); ++pk) {
                        const Path& full = ia[pk];
                        if (full.arrows.size() < w.arrows.size()) continue;
                        size_t head = full.arrows.size() - w.arrows.size();
                        bool match = true;
                        for (size_t x = 0; x < w.arrows.size(); ++x)
                            if (full.arrows[head + x] != w.arrows[x]) { match = false; break; }
                        if (!match) continue;
                        Path rest{std::vector<int>(full.arrows.begin(),
                                                   full.arrows.begin() + head)};
                        int r = path_index(ib, rest);
                        if (r < 0) continue;
                        int row = nu0.offset[t][v] + r;
                        int col = nu1.offset[s][v] + static_cast<int>(pk);
                        nf.vertex[v].at(row, col) =
                            (nf.vertex[v].at(row, col) + c) % p;
                    }
                }
            }
        }
    }
    return nf;
}
}  // namespace detail

inline Rep ar_translate(const Rep& m, const Guards& guards = default_guards()) {
    if (m.total_dim() == 0)
        throw std::invalid_argument("AR translate of the zero module");
    if (has_projective_summand(m, guards))
        throw std::invalid_argument("AR translate rejected: projective direct summand");
    Cover c0 = projective_cover(m);
    SubTuple ker = kernel_tuple(c0.proj.rep, c0.map);
    Rep k = sub_rep(c0.proj.rep, ker);
    Cover c1 = projective_cover(k);
    // f = (inclusion of K) composed with the cover of K
    GradedMap incl;
    for (int v = 0; v < m.quiver->vertex_count(); ++v)
        incl.vertex.push_back(ker[v].basis.transposed());
    GradedMap f = compose(incl, c1.map);

    std::vector<int> v1, v0;
    for (const PathRep& s : c1.proj.summands) v1.push_back(s.defining_vertex);
    for (const PathRep& s : c0.proj.summands) v0.push_back(s.defining_vertex);
    PathSum nu1 = path_sum(m.quiver, m.p, v1, true);
    PathSum nu0 = path_sum(m.quiver, m.p, v0, true);
    GradedMap nf = detail::nakayama_map(c1.proj, c0.proj, f, nu1, nu0);
    return sub_rep(nu1.rep, kernel_tuple(nu1.rep, nf));
}

inline std::shared_ptr<const Quiver> opposite_quiver(const Quiver& q) {
    std::vector<Arrow> arrows;
    for (const Arrow& a : q.arrows()) arrows.push_back({a.target, a.source});
    std::vector<Relation> rels;
    for (const Relation& r : q.relations()) {
        Relation rr;
        for (const auto& t : r.terms) {
            Path rev{std::vector<int>(t.path.arrows.rbegin(), t.path.arrows.rend())};
            rr.terms.push_back({t.coeff, std::move(rev)});
        }
        rels.push_back(std::move(rr));
    }
    return std::make_shared<const Quiver>(q.vertex_count(), std::move(arrows),
                                          std::move(rels));
}

inline Rep dual_rep(const Rep& m, std::shared_ptr<const Quiver> op) {
    Rep r = Rep::make(std::move(op), m.p, m.dims);
    for (size_t a = 0; a < m.mats.size(); ++a) r.mats[a] = m.mats[a].transposed();
    return r;
}

inline Rep ar_translate_inverse(const Rep& m, const Guards& guards = default_guards()) {
    if (m.total_dim() == 0)
        throw std::invalid_argument("inverse AR translate of the zero module");
    if (has_injective_summand(m, guards))
        throw std::invalid_argument("inverse AR translate rejected: injective direct summand");
    auto op = opposite_quiver(*m.quiver);
    Rep t = ar_translate(dual_rep(m, op), guards);
    return dual_rep(t, m.quiver);
}

// Interval module of a type-A quiver: k at vertices lo..hi, identity on the
// arrows inside the interval.  Works for any orientation.
inline Rep interval_rep(std::shared_ptr<const Quiver> q, long p, int lo, int hi) {
    DimVector d(q->vertex_count(), 0);
    for (int v = lo; v <= hi; ++v) d[v] = 1;
    Rep r = Rep::make(q, p, d);
    for (int a = 0; a < q->arrow_count(); ++a) {
        const Arrow& ar = q->arrows()[a];
        if (d[ar.source] && d[ar.target]) r.mats[a].at(0, 0) = 1;
    }
    return r;
}

// Regular Kronecker representation u_lambda: both spaces k, first arrow the
// identity, second arrow lambda; lambda = -1 encodes the infinite point
// (matrices 0 and 1).
inline Rep kronecker_regular(std::shared_ptr<const Quiver> q, long p, long lambda) {
    Rep r = Rep::make(std::move(q), p, {1, 1});
    if (lambda < 0) {
        r.mats[1].at(0, 0) = 1;
    } else {
        r.mats[0].at(0, 0) = 1;
        r.mats[1].at(0, 0) = lambda % p;
    }
    return r;
}

}  // namespace hallcat
