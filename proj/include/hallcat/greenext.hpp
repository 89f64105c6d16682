#pragma once

// The four-term exact sequence 0 -> D -> S -> T -> A -> 0 attached to a
// square of submodule data (pushout S, pullback T), the factorization test
// that decides whether its class in Ext^2(A,D) vanishes, and the
// relation-aware Green verifier whose right-hand sum keeps exactly the
// quadruples with vanishing class.

#include <optional>
#include <string>

#include "hallcat/hall.hpp"

namespace hallcat {

// Projection N -> N/U in the complement-column basis used by quotient_rep.
inline GradedMap quotient_projection(const Rep& l, const SubTuple& u) {
    GradedMap g;
    for (int i = 0; i < l.quiver->vertex_count(); ++i) {
        std::vector<bool> is_piv(l.dims[i], false);
        for (int c : u[i].pivot_columns()) is_piv[c] = true;
        std::vector<int> compl_cols;
        for (int c = 0; c < l.dims[i]; ++c)
            if (!is_piv[c]) compl_cols.push_back(c);
        FfMatrix m(l.p, static_cast<int>(compl_cols.size()), l.dims[i]);
        for (int c = 0; c < l.dims[i]; ++c) {
            std::vector<long> e(l.dims[i], 0);
            e[c] = 1;
            auto res = u[i].reduce(e);
            for (size_t r = 0; r < compl_cols.size(); ++r)
                m.at(static_cast<int>(r), c) = res[compl_cols[r]];
        }
        g.vertex.push_back(std::move(m));
    }
    return g;
}

inline GradedMap sub_inclusion(const Rep& l, const SubTuple& u) {
    GradedMap g;
    for (int i = 0; i < l.quiver->vertex_count(); ++i)
        g.vertex.push_back(u[i].basis.transposed());
    return g;
}

inline bool is_module_map(const Rep& m, const Rep& n, const GradedMap& g) {
    for (int a = 0; a < m.quiver->arrow_count(); ++a) {
        const Arrow& ar = m.quiver->arrows()[a];
        if (!((g.vertex[ar.target] * m.mats[a]) == (n.mats[a] * g.vertex[ar.source])))
            return false;
    }
    return true;
}

struct LongExactDatum {
    Rep d, s, t, a;
    GradedMap d_to_s, s_to_t, t_to_a;
    std::string sign_variant;  // which pushout identification made it exact
};

namespace detail {
// One assembly attempt with a chosen sign on the pushout relation.
inline std::optional<LongExactDatum> assemble_datum(
    const Rep& m, const Rep& n, const SubTuple& b_tuple, const SubTuple& d_tuple,
    const ArrowTuple& dy, const ArrowTuple& dx, long rel_sign) {
    long p = m.p;
    Rep b = sub_rep(m, b_tuple);
    Rep a = quotient_rep(m, b_tuple);
    Rep d = sub_rep(n, d_tuple);
    Rep c = quotient_rep(n, d_tuple);
    Rep y = middle_term(b, d, dy);  // 0 -> D -> Y -> B -> 0 (D leading block)
    Rep x = middle_term(a, c, dx);  // 0 -> C -> X -> A -> 0
    GradedMap e1 = glue_inclusion(b, d), e2 = glue_projection(b, d);
    GradedMap e3 = glue_inclusion(a, c), e4 = glue_projection(a, c);
    GradedMap up = sub_inclusion(n, d_tuple);       // u': D -> N
    GradedMap vp = quotient_projection(n, d_tuple); // v': N -> C
    GradedMap xb = sub_inclusion(m, b_tuple);       // x : B -> M
    GradedMap ym = quotient_projection(m, b_tuple); // y : M -> A

    // S = (Y + N) / span{ (e1 d, rel_sign * u' d) }
    Rep yn = direct_sum(y, n);
    SubTuple rel;
    for (int v = 0; v < m.quiver->vertex_count(); ++v) {
        FfMatrix rows(p, d.dims[v], yn.dims[v]);
        for (int k = 0; k < d.dims[v]; ++k) {
            std::vector<long> e(d.dims[v], 0);
            e[k] = 1;
            auto iy = e1.vertex[v].apply(e);
            auto in = up.vertex[v].apply(e);
            for (int j = 0; j < y.dims[v]; ++j) rows.at(k, j) = iy[j];
            for (int j = 0; j < n.dims[v]; ++j)
                rows.at(k, y.dims[v] + j) = ((rel_sign * in[j]) % p + p) % p;
        }
        rel.push_back(Subspace::span(rows));
    }
    if (!is_stable(yn, rel)) return std::nullopt;
    Rep s = quotient_rep(yn, rel);
    GradedMap pi_s = quotient_projection(yn, rel);

    // T = { (x, m) : e4 x = y m } inside X + M
    Rep xm = direct_sum(x, m);
    SubTuple t_tuple;
    for (int v = 0; v < m.quiver->vertex_count(); ++v) {
        FfMatrix test(p, a.dims[v], xm.dims[v]);
        for (int j = 0; j < x.dims[v]; ++j)
            for (int r = 0; r < a.dims[v]; ++r) test.at(r, j) = e4.vertex[v].at(r, j);
        for (int j = 0; j < m.dims[v]; ++j)
            for (int r = 0; r < a.dims[v]; ++r)
                test.at(r, x.dims[v] + j) = (p - ym.vertex[v].at(r, j)) % p;
        auto ker = test.kernel_basis();
        FfMatrix rows(p, static_cast<int>(ker.size()), xm.dims[v]);
        for (size_t r = 0; r < ker.size(); ++r)
            for (int j = 0; j < xm.dims[v]; ++j)
                rows.at(static_cast<int>(r), j) = ker[r][j];
        t_tuple.push_back(Subspace::span(rows));
    }
    if (!is_stable(xm, t_tuple)) return std::nullopt;
    Rep t = sub_rep(xm, t_tuple);

    LongExactDatum datum;
    datum.d = d;
    datum.s = s;
    datum.t = t;
    datum.a = a;
    datum.sign_variant = rel_sign == 1 ? "diagonal" : "antidiagonal";

    // D -> S: include into the Y block, then project to the pushout.
    {
        GradedMap g;
        for (int v = 0; v < m.quiver->vertex_count(); ++v) {
            FfMatrix into_yn(p, yn.dims[v], d.dims[v]);
            for (int r = 0; r < y.dims[v]; ++r)
                for (int cidx = 0; cidx < d.dims[v]; ++cidx)
                    into_yn.at(r, cidx) = e1.vertex[v].at(r, cidx);
            g.vertex.push_back(pi_s.vertex[v] * into_yn);
        }
        datum.d_to_s = std::move(g);
    }

    // f: S -> T induced by (y, n) |-> (e3 v' n, x e2 y); expressed on the
    // complement basis of S and in the coordinates of T.
    {
        GradedMap g;
        for (int v = 0; v < m.quiver->vertex_count(); ++v) {
            std::vector<bool> is_piv(yn.dims[v], false);
            for (int cc : rel[v].pivot_columns()) is_piv[cc] = true;
            std::vector<int> compl_cols;
            for (int cc = 0; cc < yn.dims[v]; ++cc)
                if (!is_piv[cc]) compl_cols.push_back(cc);
            FfMatrix mat(p, t.dims[v], s.dims[v]);
            for (size_t sc = 0; sc < compl_cols.size(); ++sc) {
                std::vector<long> e(yn.dims[v], 0);
                e[compl_cols[sc]] = 1;
                std::vector<long> ypart(e.begin(), e.begin() + y.dims[v]);
                std::vector<long> npart(e.begin() + y.dims[v], e.end());
                auto xcomp = e3.vertex[v].apply(vp.vertex[v].apply(npart));
                auto mcomp = xb.vertex[v].apply(e2.vertex[v].apply(ypart));
                std::vector<long> tv;
                tv.insert(tv.end(), xcomp.begin(), xcomp.end());
                tv.insert(tv.end(), mcomp.begin(), mcomp.end());
                auto coords = t_tuple[v].coordinates(tv);
                if (!coords) return std::nullopt;  // image escaped the pullback
                for (int r = 0; r < t.dims[v]; ++r)
                    mat.at(r, static_cast<int>(sc)) = (*coords)[r];
            }
            g.vertex.push_back(std::move(mat));
        }
        datum.s_to_t = std::move(g);
    }

    // T -> A: project to the X block, then e4.
    {
        GradedMap g;
        for (int v = 0; v < m.quiver->vertex_count(); ++v) {
            FfMatrix proj_x(p, x.dims[v], t.dims[v]);
            FfMatrix incl = t_tuple[v].basis.transposed();  // xm.dims x t.dims
            for (int r = 0; r < x.dims[v]; ++r)
                for (int cc = 0; cc < t.dims[v]; ++cc) proj_x.at(r, cc) = incl.at(r, cc);
            g.vertex.push_back(e4.vertex[v] * proj_x);
        }
        datum.t_to_a = std::move(g);
    }

    // Module-map and exactness checks; reject this sign variant on failure.
    if (!is_module_map(d, s, datum.d_to_s) || !is_module_map(s, t, datum.s_to_t) ||
        !is_module_map(t, a, datum.t_to_a))
        return std::nullopt;
    for (int v = 0; v < m.quiver->vertex_count(); ++v) {
        if (datum.d_to_s.vertex[v].rank() != d.dims[v]) return std::nullopt;
        if (datum.t_to_a.vertex[v].rank() != a.dims[v]) return std::nullopt;
        // Ker f = Im(D -> S)
        int kf = s.dims[v] - datum.s_to_t.vertex[v].rank();
        if (kf != d.dims[v]) return std::nullopt;
        if (!(datum.s_to_t.vertex[v] * datum.d_to_s.vertex[v]).is_zero())
            return std::nullopt;
        // Ker(T -> A) = Im f
        int ka = t.dims[v] - datum.t_to_a.vertex[v].rank();
        if (ka != datum.s_to_t.vertex[v].rank()) return std::nullopt;
        if (!(datum.t_to_a.vertex[v] * datum.s_to_t.vertex[v]).is_zero())
            return std::nullopt;
    }
    return datum;
}
}  // namespace detail

// Builds the exact datum for chosen submodules B of M and D0 of N together
// with gluing tuples for Y and X; tries both pushout identifications.
inline LongExactDatum long_exact_datum(const Rep& m, const Rep& n,
                                       const SubTuple& b_tuple, const SubTuple& d_tuple,
                                       const ArrowTuple& dy, const ArrowTuple& dx) {
    for (long sign : {1L, -1L}) {
        auto datum = detail::assemble_datum(m, n, b_tuple, d_tuple, dy, dx, sign);
        if (datum) return *datum;
    }
    throw std::logic_error("no pushout identification made the four-term sequence exact");
}

// True iff f : S -> T factors as a surjection after an injection through some
// module of dimension dim_e (the Ext^2 vanishing criterion).
inline bool factorization_exists(Universe& u, const Rep& s, const Rep& t,
                                 const GradedMap& f, const DimVector& dim_e) {
    const Guards& guards = u.guards();
    for (const IsoClass& cls : u.table(dim_e).classes) {
        const Rep& e = cls.rep;
        auto din = hom_space(s, e);
        Int scans = int_pow(u.p(), static_cast<unsigned>(din.size()));
        if (scans > guards.hom_scan)
            throw GuardExceeded("factorization scan too large", scans, guards.hom_scan);
        auto cout_basis = hom_space(e, t);
        bool found = false;
        for_each_coeff(u.p(), din.size(), [&](const std::vector<long>& cd) {
            GradedMap dmap = combine(din, cd, u.p(), s, e);
            if (!all_injective(dmap)) return false;
            // solve c . d = f for c as a linear system in the Hom(E,T) basis
            int nb = static_cast<int>(cout_basis.size());
            std::vector<std::vector<long>> rows;
            std::vector<long> rhs;
            for (int v = 0; v < s.quiver->vertex_count(); ++v) {
                std::vector<FfMatrix> prods;
                for (int k = 0; k < nb; ++k)
                    prods.push_back(cout_basis[k].vertex[v] * dmap.vertex[v]);
                for (int r = 0; r < t.dims[v]; ++r)
                    for (int col = 0; col < s.dims[v]; ++col) {
                        std::vector<long> row(nb, 0);
                        for (int k = 0; k < nb; ++k) row[k] = prods[k].at(r, col);
                        rows.push_back(std::move(row));
                        rhs.push_back(f.vertex[v].at(r, col));
                    }
            }
            FfMatrix sys(u.p(), static_cast<int>(rows.size()), nb);
            for (size_t i = 0; i < rows.size(); ++i)
                for (int j = 0; j < nb; ++j) sys.at(static_cast<int>(i), j) = rows[i][j];
            auto sol = sys.solve(rhs);
            if (!sol) return false;
            auto free_dirs = sys.kernel_basis();
            Int cscans = int_pow(u.p(), static_cast<unsigned>(free_dirs.size()));
            if (cscans > guards.hom_scan)
                throw GuardExceeded("factorization co-scan too large", cscans,
                                    guards.hom_scan);
            for_each_coeff(u.p(), free_dirs.size(), [&](const std::vector<long>& cf) {
                std::vector<long> coeff = *sol;
                for (size_t k = 0; k < free_dirs.size(); ++k)
                    for (int j = 0; j < nb; ++j)
                        coeff[j] = (coeff[j] + cf[k] * free_dirs[k][j]) % u.p();
                GradedMap cmap = combine(cout_basis, coeff, u.p(), e, t);
                if (all_surjective(cmap)) { found = true; return true; }
                return false;
            });
            return found;
        });
        if (found) return true;
    }
    return false;
}

// Decides the epsilon filter for one class quadruple inside the fixed outer
// quadruple (xi, eta, xi', eta').  Returns nullopt when no datum can be
// realized (the corresponding Hall-number product is then zero anyway).
inline std::optional<bool> epsilon_vanishes(Universe& u, const Rep& xi, const Rep& eta,
                                            const Rep& m, const Rep& n,
                                            const Rep& alpha, const Rep& beta,
                                            const Rep& gamma, const Rep& delta) {
    const Guards& guards = u.guards();
    // B <= M with B ~ delta, M/B ~ gamma
    std::optional<SubTuple> b_found, d_found;
    for_each_submodule(m, delta.dims, [&](const SubTuple& t) {
        if (b_found) return;
        if (is_isomorphic(sub_rep(m, t), delta, guards) &&
            is_isomorphic(quotient_rep(m, t), gamma, guards))
            b_found = t;
    }, guards);
    if (!b_found) return std::nullopt;
    for_each_submodule(n, beta.dims, [&](const SubTuple& t) {
        if (d_found) return;
        if (is_isomorphic(sub_rep(n, t), beta, guards) &&
            is_isomorphic(quotient_rep(n, t), alpha, guards))
            d_found = t;
    }, guards);
    if (!d_found) return std::nullopt;

    Rep b = sub_rep(m, *b_found), a = quotient_rep(m, *b_found);
    Rep d0 = sub_rep(n, *d_found), c = quotient_rep(n, *d_found);
    std::optional<ArrowTuple> dy, dx;
    for (const ArrowTuple& t : ext_class_reps(b, d0, guards))
        if (is_isomorphic(middle_term(b, d0, t), eta, guards)) { dy = t; break; }
    if (!dy) return std::nullopt;
    for (const ArrowTuple& t : ext_class_reps(a, c, guards))
        if (is_isomorphic(middle_term(a, c, t), xi, guards)) { dx = t; break; }
    if (!dx) return std::nullopt;

    LongExactDatum datum = long_exact_datum(m, n, *b_found, *d_found, *dy, *dx);
    return factorization_exists(u, datum.s, datum.t, datum.s_to_t,
                                xi.dims + eta.dims);
}

// Every submodule Y of the glued extension E of M by N induces a pair
// (M1, N1) = (image of Y in M, Y meet N).  Within one extension class the
// nonempty fibers over a fixed pair all have p^{dim Hom(M1, N/N1)} elements;
// this verifies that for every pair arising from some Y.
inline CheckReport induced_fiber_check(const Rep& m, const Rep& n, const ArrowTuple& d,
                                       const Guards& guards = default_guards()) {
    Rep e = middle_term(m, n, d);  // N in the leading block
    int nv = m.quiver->vertex_count();
    // key: concatenated canonical bases of (M1, N1)
    std::map<std::vector<long>, Int> cells;
    std::map<std::vector<long>, std::pair<SubTuple, SubTuple>> reps;
    for (const DimVector& yd : grade_splittings(e.dims)) {
        for_each_submodule(e, yd, [&](const SubTuple& y) {
            SubTuple m1, n1;
            std::vector<long> key;
            for (int v = 0; v < nv; ++v) {
                // N1 = Y meet N, in the leading n.dims[v] coordinates
                FfMatrix lead(e.p, n.dims[v], e.dims[v]);
                for (int r = 0; r < n.dims[v]; ++r) lead.at(r, r) = 1;
                Subspace cap = intersect(y[v], Subspace::span(lead));
                FfMatrix ncoords(e.p, cap.dim(), n.dims[v]);
                for (int r = 0; r < cap.dim(); ++r)
                    for (int c = 0; c < n.dims[v]; ++c)
                        ncoords.at(r, c) = cap.basis.at(r, c);
                n1.push_back(Subspace::span(ncoords));
                // M1 = image of Y in the trailing m.dims[v] coordinates
                FfMatrix mcoords(e.p, y[v].dim(), m.dims[v]);
                for (int r = 0; r < y[v].dim(); ++r)
                    for (int c = 0; c < m.dims[v]; ++c)
                        mcoords.at(r, c) = y[v].basis.at(r, n.dims[v] + c);
                m1.push_back(Subspace::span(mcoords));
                for (int r = 0; r < m1[v].dim(); ++r)
                    for (int c = 0; c < m.dims[v]; ++c) key.push_back(m1[v].basis.at(r, c));
                key.push_back(-1);
                for (int r = 0; r < n1[v].dim(); ++r)
                    for (int c = 0; c < n.dims[v]; ++c) key.push_back(n1[v].basis.at(r, c));
                key.push_back(-2);
            }
            cells[key] += 1;
            reps.emplace(key, std::make_pair(m1, n1));
        }, guards);
    }
    CheckReport r;
    r.ok = true;
    for (const auto& [key, count] : cells) {
        const auto& [m1, n1] = reps.at(key);
        Rep m1_rep = sub_rep(m, m1);
        Rep nq_rep = quotient_rep(n, n1);
        Int expect = int_pow(e.p, static_cast<unsigned>(hom_dim(m1_rep, nq_rep)));
        if (count != expect) {
            r.ok = false;
            r.detail = "fiber has " + count.str() + " points, expected " + expect.str();
            return r;
        }
    }
    r.detail = "all " + std::to_string(cells.size()) + " fibers have the predicted size";
    return r;
}

// Green's formula with the Ext^2-vanishing filter on the right-hand side;
// valid over algebras with relations.
inline GreenReport green_nonhereditary_check(Universe& u, const Rep& xi, const Rep& eta,
                                             const Rep& xip, const Rep& etap) {
    GreenReport rep;
    if (xi.dims + eta.dims != xip.dims + etap.dims)
        throw std::invalid_argument("Green check needs matching grades");
    const Guards& guards = u.guards();
    Rat lhs_sum = 0;
    const IsoTable& tl = u.table(xi.dims + eta.dims);
    for (const IsoClass& lam : tl.classes) {
        Int g1 = hall_number(xi, eta, lam.rep, guards);
        if (g1 == 0) continue;
        Int g2 = hall_number(xip, etap, lam.rep, guards);
        if (g2 == 0) continue;
        lhs_sum += Rat(g1 * g2, lam.aut);
    }
    rep.lhs = Rat(aut_order(xi, guards) * aut_order(eta, guards) *
                  aut_order(xip, guards) * aut_order(etap, guards)) *
              lhs_sum;

    Rat rhs = 0;
    for (const DimVector& dgam : grade_splittings(xi.dims)) {
        if (!leq(dgam, xip.dims)) continue;
        DimVector dalp = xi.dims - dgam;
        DimVector ddel = xip.dims - dgam;
        if (!leq(ddel, eta.dims)) continue;
        DimVector dbet = eta.dims - ddel;
        if (dalp + dbet != etap.dims) continue;
        for (const IsoClass& G : u.table(dgam).classes)
            for (const IsoClass& Al : u.table(dalp).classes) {
                Int gxi = hall_number(G.rep, Al.rep, xi, guards);
                if (gxi == 0) continue;
                for (const IsoClass& De : u.table(ddel).classes) {
                    Int gxip = hall_number(G.rep, De.rep, xip, guards);
                    if (gxip == 0) continue;
                    for (const IsoClass& Be : u.table(dbet).classes) {
                        Int geta = hall_number(De.rep, Be.rep, eta, guards);
                        if (geta == 0) continue;
                        Int getap = hall_number(Al.rep, Be.rep, etap, guards);
                        if (getap == 0) continue;
                        auto eps = epsilon_vanishes(u, xi, eta, xip, etap, Al.rep,
                                                    Be.rep, G.rep, De.rep);
                        if (!eps)
                            throw std::logic_error(
                                "nonzero Hall product but no realizable datum");
                        if (!*eps) {
                            ++rep.filtered_quadruples;
                            continue;
                        }
                        Rat pre(int_pow(u.p(), static_cast<unsigned>(
                                                   ext_dim(G.rep, Be.rep))),
                                int_pow(u.p(), static_cast<unsigned>(
                                                   hom_dim(G.rep, Be.rep))));
                        rhs += pre * Rat(gxi * gxip * geta * getap) *
                               Rat(Al.aut * Be.aut * G.aut * De.aut);
                    }
                }
            }
    }
    rep.rhs = rhs;
    rep.ok = rep.lhs == rep.rhs;
    return rep;
}

}  // namespace hallcat
