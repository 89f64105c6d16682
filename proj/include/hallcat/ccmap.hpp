#pragma once

// The cluster character: Laurent polynomials attached to modules through
// Grassmannian Euler characteristics, plus the multiplication identities it
// satisfies (AR-sequence form, projective/injective form, the Dynkin
// two-term formula, the general one-directional formula with tau-side
// strata, and the higher-order associativity of stratified Hom counts).
//
// Classes are matched across primes by the multiset of dimension vectors of
// their indecomposable summands.  On finite-type quivers that key is a
// bijection; on the Kronecker quiver it merges the one-parameter family of
// regular classes of a fixed grade into one group, which is exactly the
// integration over P^1 the formulas ask for.

#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "hallcat/artranslate.hpp"
#include "hallcat/chihall.hpp"
#include "hallcat/hall.hpp"
#include "hallcat/laurent.hpp"

namespace hallcat {

class PrimeFamily {
public:
    explicit PrimeFamily(std::shared_ptr<const Quiver> q,
                         Guards guards = default_guards())
        : quiver_(std::move(q)), guards_(guards) {}
    Universe& at(long p) {
        auto it = universes_.find(p);
        if (it == universes_.end())
            it = universes_.emplace(p, Universe(quiver_, p, true, guards_)).first;
        return it->second;
    }
    std::shared_ptr<const Quiver> quiver() const { return quiver_; }
    const Guards& guards() const { return guards_; }

private:
    std::shared_ptr<const Quiver> quiver_;
    Guards guards_;
    std::map<long, Universe> universes_;
};

inline Int submodule_count(const Rep& m, const DimVector& e,
                           const Guards& guards = default_guards()) {
    Int count = 0;
    for_each_submodule(m, e, [&](const SubTuple&) { ++count; }, guards);
    return count;
}

// Splits a module into indecomposable summands by searching for proper
// two-part direct-sum presentations in the iso tables.
inline std::vector<Rep> decompose_summands(Universe& u, const Rep& m) {
    if (m.total_dim() == 0) return {};
    for (const DimVector& da : grade_splittings(m.dims)) {
        if (total(da) == 0 || da == m.dims) continue;
        DimVector db = m.dims - da;
        for (const IsoClass& a : u.table(da).classes)
            for (const IsoClass& b : u.table(db).classes)
                if (is_isomorphic(direct_sum(a.rep, b.rep), m, u.guards())) {
                    std::vector<Rep> out = decompose_summands(u, a.rep);
                    std::vector<Rep> right = decompose_summands(u, b.rep);
                    out.insert(out.end(), right.begin(), right.end());
                    return out;
                }
    }
    return {m};
}

// Cross-prime class key: sorted dimension vectors of the summands.
inline std::string summand_key(Universe& u, const Rep& m) {
    std::vector<DimVector> dims;
    for (const Rep& s : decompose_summands(u, m)) dims.push_back(s.dims);
    std::sort(dims.begin(), dims.end());
    std::string key;
    for (const DimVector& d : dims) {
        key += "(";
        for (size_t i = 0; i < d.size(); ++i)
            key += (i ? "," : "") + std::to_string(d[i]);
        key += ")";
    }
    return key.empty() ? "0" : key;
}

struct ClassGroup {
    std::string key;
    std::vector<int> members;  // class indices in the table of this grade
};

inline std::vector<ClassGroup> class_groups(Universe& u, const DimVector& d) {
    std::map<std::string, ClassGroup> by_key;
    const IsoTable& t = u.table(d);
    for (size_t i = 0; i < t.classes.size(); ++i) {
        std::string k = summand_key(u, t.classes[i].rep);
        auto it = by_key.emplace(k, ClassGroup{k, {}}).first;
        it->second.members.push_back(static_cast<int>(i));
    }
    std::vector<ClassGroup> out;
    for (auto& [k, g] : by_key) out.push_back(std::move(g));
    return out;
}

// --- the cluster character ---

// Assembles X from Grassmannian chi values in the exponent form
// x^{e R + (d-e) R' - d} and cross-checks the arrow-wise product form
// prod_i x_i^{-d_i + sum_{j->i} e_j + sum_{i->j} (d_j - e_j)}.
// The member supplier names the same family of modules at every prime;
// several members must agree on every submodule count (one P^1-family).
inline LaurentPoly cc_from_family(
    PrimeFamily& fam, const DimVector& d,
    const std::function<std::vector<Rep>(long)>& members_at) {
    const Quiver& q = *fam.quiver();
    int n = q.vertex_count();
    EulerData ed = r_matrices(q);
    LaurentPoly exp_form = LaurentPoly::zero(n);
    LaurentPoly prod_form = LaurentPoly::zero(n);
    for (const DimVector& e : grade_splittings(d)) {
        int bound = grassmann_degree_bound(e, d);
        Int chi_gr = chi_of([&](long p) {
            std::vector<Rep> mem = members_at(p);
            if (mem.empty()) throw std::logic_error("empty member family");
            Int c = submodule_count(mem[0], e, fam.guards());
            for (size_t i = 1; i < mem.size(); ++i)
                if (submodule_count(mem[i], e, fam.guards()) != c)
                    throw std::logic_error(
                        "family members disagree on a Grassmannian count");
            return c;
        }, bound);
        if (chi_gr == 0) continue;
        std::vector<int> v1(n, 0), v2(n, 0);
        for (int i = 0; i < n; ++i) {
            v1[i] = -d[i];
            for (int j = 0; j < n; ++j)
                v1[i] += e[j] * ed.R[j][i] + (d[j] - e[j]) * ed.Rp[j][i];
        }
        for (int i = 0; i < n; ++i) v2[i] = -d[i];
        for (const Arrow& a : q.arrows()) {
            v2[a.target] += e[a.source];
            v2[a.source] += d[a.target] - e[a.target];
        }
        exp_form.add_term(v1, chi_gr);
        prod_form.add_term(v2, chi_gr);
    }
    if (!(exp_form == prod_form))
        throw std::logic_error("cluster character forms disagree: " + exp_form.str() +
                               " vs " + prod_form.str());
    return exp_form;
}

inline LaurentPoly cc_rep_family(PrimeFamily& fam,
                                 const std::function<Rep(long)>& builder) {
    Rep probe = builder(2);
    return cc_from_family(fam, probe.dims,
                          [&](long p) { return std::vector<Rep>{builder(p)}; });
}

inline LaurentPoly cc(PrimeFamily& fam, const Descriptor& d) {
    auto q = fam.quiver();
    return cc_rep_family(fam, [&, q](long p) { return d.build(q, p); });
}

// module part plus shifted projective summands P_i[1] |-> x_i
struct DecoratedObject {
    Descriptor module;
    std::vector<int> shifts;  // projective indices, 0-based
};

inline LaurentPoly cc(PrimeFamily& fam, const DecoratedObject& obj) {
    LaurentPoly r = cc(fam, obj.module);
    int n = fam.quiver()->vertex_count();
    for (int i : obj.shifts) r = r * LaurentPoly::var(n, i);
    return r;
}

inline LaurentPoly cc_of_group(PrimeFamily& fam, const DimVector& d,
                               const std::string& key) {
    return cc_from_family(fam, d, [&fam, d, key](long p) {
        Universe& u = fam.at(p);
        std::vector<Rep> mem;
        for (const IsoClass& c : u.table(d).classes)
            if (summand_key(u, c.rep) == key) mem.push_back(c.rep);
        return mem;
    });
}

// x^v as a Laurent monomial
inline LaurentPoly x_power(int n, const DimVector& v) {
    std::vector<int> e(v.begin(), v.end());
    return LaurentPoly::monomial(n, e);
}

struct LaurentReport {
    LaurentPoly lhs, rhs;
    bool ok = false;
    std::string detail;
};

// X_M X_{tau M} = 1 + X_E for the middle term E of the almost-split
// sequence ending in M.
inline LaurentReport ar_identity_check(PrimeFamily& fam, const Descriptor& m) {
    auto q = fam.quiver();
    int n = q->vertex_count();
    auto tau_builder = [&, q](long p) { return ar_translate(m.build(q, p)); };
    auto mid_builder = [&, q](long p) {
        Rep mp = m.build(q, p);
        Rep tm = ar_translate(mp);
        Rep mid = Rep::zero(q, p);
        bool found = false;
        for (const ArrowTuple& d : ext_class_reps(mp, tm, fam.guards())) {
            Rep e = middle_term(mp, tm, d);
            if (is_isomorphic(e, direct_sum(mp, tm), fam.guards())) continue;
            if (!found) { mid = e; found = true; }
            else if (!is_isomorphic(mid, e, fam.guards()))
                throw std::logic_error("non-split middle term is not unique");
        }
        if (!found) throw std::logic_error("no almost-split sequence found");
        return mid;
    };
    LaurentReport r;
    r.lhs = cc(fam, m) * cc_rep_family(fam, tau_builder);
    r.rhs = LaurentPoly::one(n) + cc_rep_family(fam, mid_builder);
    r.ok = r.lhs == r.rhs;
    r.detail = r.ok ? "almost-split identity holds" : r.lhs.str() + " vs " + r.rhs.str();
    return r;
}

// X_{P_i} x_i = 1 + X_{rad P_i} x^{(dim S_i) R'} and the socle-dual form.
inline LaurentReport proj_identity_check(PrimeFamily& fam, int vertex) {
    auto q = fam.quiver();
    int n = q->vertex_count();
    EulerData ed = r_matrices(*q);
    DimVector si_r(n, 0), si_rp(n, 0);
    for (int j = 0; j < n; ++j) {
        si_r[j] = ed.R[vertex][j];
        si_rp[j] = ed.Rp[vertex][j];
    }
    auto rad_builder = [&, q, vertex](long p) {
        Rep pi = proj_rep(q, p, vertex);
        return sub_rep(pi, rad_soc_top(pi).radical);
    };
    auto topless_builder = [&, q, vertex](long p) {
        Rep ii = inj_rep(q, p, vertex);
        return quotient_rep(ii, rad_soc_top(ii).socle);
    };
    LaurentReport r;
    LaurentPoly xi = LaurentPoly::var(n, vertex);
    LaurentPoly proj_lhs = cc(fam, Descriptor::proj(vertex)) * xi;
    LaurentPoly proj_rhs =
        LaurentPoly::one(n) + cc_rep_family(fam, rad_builder) * x_power(n, si_rp);
    LaurentPoly inj_lhs = cc(fam, Descriptor::inj(vertex)) * xi;
    LaurentPoly inj_rhs =
        LaurentPoly::one(n) + cc_rep_family(fam, topless_builder) * x_power(n, si_r);
    r.lhs = proj_lhs;
    r.rhs = proj_rhs;
    r.ok = proj_lhs == proj_rhs && inj_lhs == inj_rhs;
    r.detail = r.ok ? "projective and injective identities hold"
                    : proj_lhs.str() + " vs " + proj_rhs.str() + " ; " + inj_lhs.str() +
                          " vs " + inj_rhs.str();
    return r;
}

namespace detail {

// One tau-side stratum: kernel class, tau-inverse of the non-injective part
// of the cokernel, and the socle grade of its injective part.
struct TauStratum {
    std::string kernel_key, core_key;
    DimVector kernel_dims, core_dims, soc_dims;
    friend bool operator<(const TauStratum& a, const TauStratum& b) {
        return std::tie(a.kernel_key, a.core_key, a.soc_dims) <
               std::tie(b.kernel_key, b.core_key, b.soc_dims);
    }
};

struct TauStratumData {
    Int count = 0;  // maps in the stratum at the current prime
};

// Peels the injective direct summands off c, accumulating the socle grade of
// what was removed.  A summand I_i is found as a pair f: I_i -> c,
// g: c -> I_i with g f = id; the idempotent f g then splits c.
inline Rep strip_injectives(Universe& u, Rep c, DimVector& soc) {
    auto q = u.quiver();
    int n = q->vertex_count();
    bool again = true;
    while (again && c.total_dim() > 0) {
        again = false;
        for (int i = 0; i < n && !again; ++i) {
            Rep ii = inj_rep(q, c.p, i);
            if (!leq(ii.dims, c.dims)) continue;
            auto fin = hom_space(ii, c);
            auto fout = hom_space(c, ii);
            Int scans = int_pow(c.p, static_cast<unsigned>(fin.size() + fout.size()));
            if (scans > u.guards().hom_scan)
                throw GuardExceeded("injective splitting scan too large", scans,
                                    u.guards().hom_scan);
            GradedMap fsel, gsel;
            bool found = false;
            for_each_coeff(c.p, fin.size(), [&](const std::vector<long>& ci) {
                GradedMap f = combine(fin, ci, c.p, ii, c);
                for_each_coeff(c.p, fout.size(), [&](const std::vector<long>& co) {
                    GradedMap g = combine(fout, co, c.p, c, ii);
                    for (int v = 0; v < n; ++v)
                        if (!(g.vertex[v] * f.vertex[v] ==
                              FfMatrix::identity(c.p, ii.dims[v])))
                            return false;
                    fsel = f;
                    gsel = g;
                    found = true;
                    return true;
                });
                return found;
            });
            if (found) {
                GradedMap idem;  // f g, an idempotent with image the split copy
                for (int v = 0; v < n; ++v)
                    idem.vertex.push_back(fsel.vertex[v] * gsel.vertex[v]);
                c = sub_rep(c, kernel_tuple(c, idem));
                soc[i] += 1;
                again = true;
            }
        }
    }
    return c;
}

// Partition the nonzero maps of Hom(src, tau(target)) by stratum.  The
// cokernel C splits as tau(core) + I0 with core = tau^{-1}(C); the injective
// part is recovered from dimension vectors alone, so no iso tables of the
// cokernel grade are ever built.
inline std::map<TauStratum, TauStratumData> tau_strata(Universe& u, const Rep& src,
                                                       const Rep& tau_target) {
    std::map<TauStratum, TauStratumData> out;
    int n = u.quiver()->vertex_count();
    auto basis = hom_space(src, tau_target);
    Int scans = int_pow(src.p, static_cast<unsigned>(basis.size()));
    if (scans > u.guards().hom_scan)
        throw GuardExceeded("tau-side stratum scan too large", scans,
                            u.guards().hom_scan);
    for_each_coeff(src.p, basis.size(), [&](const std::vector<long>& c) {
        bool zero = true;
        for (long x : c) zero = zero && x == 0;
        if (zero) return false;
        GradedMap g = combine(basis, c, src.p, src, tau_target);
        Rep k = sub_rep(src, kernel_tuple(src, g));
        Rep coker = quotient_rep(tau_target, image_tuple(tau_target, g));
        DimVector soc(n, 0);
        Rep stripped = strip_injectives(u, coker, soc);
        Rep core = stripped.total_dim() == 0 ? Rep::zero(u.quiver(), src.p)
                                             : ar_translate_inverse(stripped, u.guards());
        if (core.total_dim() > 0 && ar_translate(core, u.guards()).dims != stripped.dims)
            throw std::logic_error("tau round trip changed the cokernel grade");
        TauStratum key;
        key.kernel_key = summand_key(u, k);
        key.core_key = summand_key(u, core);
        key.kernel_dims = k.dims;
        key.core_dims = core.dims;
        key.soc_dims = soc;
        out.emplace(key, TauStratumData{}).first->second.count += 1;
        return false;
    });
    return out;
}
}  // namespace detail

// The tau-side of a cluster product: sum over strata of PHom(src, tau M') of
// chi * X_{core + P0} * X_{kernel} * x^{soc I0}, where M = M' + P0 splits
// off the projective summands.
inline LaurentPoly tau_side_sum(PrimeFamily& fam, const Descriptor& target,
                                const Descriptor& src) {
    auto q = fam.quiver();
    int n = q->vertex_count();
    // split the target into projective and non-projective parts (prime 2 probe;
    // the split is checked again at every sampled prime)
    Universe& u2 = fam.at(2);
    Rep t2 = target.build(q, 2);
    auto split_target = [&](Universe& u, const Rep& t) {
        Rep nonproj = Rep::zero(q, t.p), proj = Rep::zero(q, t.p);
        for (const Rep& s : decompose_summands(u, t)) {
            bool is_proj = false;
            for (int i = 0; i < n && !is_proj; ++i) {
                Rep pi = proj_rep(q, t.p, i);
                if (s.dims == pi.dims && is_isomorphic(s, pi, u.guards())) is_proj = true;
            }
            if (is_proj) proj = direct_sum(proj, s);
            else nonproj = direct_sum(nonproj, s);
        }
        return std::make_pair(nonproj, proj);
    };
    auto [np2, p02] = split_target(u2, t2);
    if (np2.total_dim() == 0) return LaurentPoly::zero(n);
    Rep tau2 = ar_translate(np2);
    int hom_bound = hom_dim(src.build(q, 2), tau2);
    std::string p0_key = summand_key(u2, p02);
    DimVector p0_dims = p02.dims;

    // survey strata at the probe prime, then interpolate each count
    std::map<long, std::map<detail::TauStratum, detail::TauStratumData>> survey_cache;
    auto strata_at = [&](long p) -> const std::map<detail::TauStratum, detail::TauStratumData>& {
        auto it = survey_cache.find(p);
        if (it != survey_cache.end()) return it->second;
        Universe& u = fam.at(p);
        auto [np, p0] = split_target(u, target.build(q, p));
        if (summand_key(u, p0) != p0_key)
            throw std::logic_error("projective part drifts across primes");
        return survey_cache
            .emplace(p, detail::tau_strata(u, src.build(q, p), ar_translate(np)))
            .first->second;
    };
    // every prime the interpolation will sample contributes stratum keys
    std::set<detail::TauStratum> keys;
    for (long p : first_primes(hom_bound + 2))
        for (const auto& kv : strata_at(p)) keys.insert(kv.first);
    LaurentPoly sum = LaurentPoly::zero(n);
    for (const auto& key : keys) {
        Int chi_p = projective_chi([&](long p) {
            const auto& all = strata_at(p);
            auto it = all.find(key);
            return it == all.end() ? Int(0) : it->second.count;
        }, false, hom_bound);
        if (chi_p == 0) continue;
        LaurentPoly xk = cc_of_group(fam, key.kernel_dims, key.kernel_key);
        DimVector core_dims = key.core_dims + p0_dims;
        LaurentPoly xc = cc_from_family(fam, core_dims, [&](long p) {
            Universe& u = fam.at(p);
            auto [np, p0] = split_target(u, target.build(q, p));
            std::vector<Rep> mem;
            for (const IsoClass& cls : u.table(key.core_dims).classes)
                if (summand_key(u, cls.rep) == key.core_key)
                    mem.push_back(direct_sum(cls.rep, p0));
            return mem;
        });
        sum = sum + (xc * xk * x_power(n, key.soc_dims)).scaled(chi_p);
    }
    return sum;
}

// Module-side of a cluster product: sum over middle-term groups of
// chi(PExt^1(M,N)_group) X_group; optionally skipping the split group.
inline LaurentPoly module_side_sum(PrimeFamily& fam, const Descriptor& m,
                                   const Descriptor& n_desc, bool skip_split) {
    auto q = fam.quiver();
    int nv = q->vertex_count();
    Rep m2 = m.build(q, 2), n2 = n_desc.build(q, 2);
    DimVector grade = m2.dims + n2.dims;
    int ext_bound = static_cast<int>(ext_dim(m2, n2));
    if (ext_bound == 0) return LaurentPoly::zero(nv);
    Universe& u2 = fam.at(2);
    std::string split_key = summand_key(u2, direct_sum(m2, n2));
    LaurentPoly sum = LaurentPoly::zero(nv);
    for (const ClassGroup& g : class_groups(u2, grade)) {
        bool is_split = g.key == split_key;
        if (skip_split && is_split) continue;
        Int chi_p = projective_chi([&](long p) {
            Universe& u = fam.at(p);
            Rep mp = m.build(q, p), np = n_desc.build(q, p);
            Int c = 0;
            for (const IsoClass& cls : u.table(grade).classes)
                if (summand_key(u, cls.rep) == g.key)
                    c += ext_stratum_count(mp, np, cls.rep, u.guards());
            return c;
        }, is_split, ext_bound);
        if (chi_p == 0) continue;
        sum = sum + cc_of_group(fam, grade, g.key).scaled(chi_p);
    }
    return sum;
}

// Two-term cluster multiplication for Dynkin quivers:
// (dim Ext(M,N) + dim Ext(N,M)) X_M X_N equals the module-side strata of
// both directions plus the shifted-object strata read off Hom against tau.
inline LaurentReport ck_check(PrimeFamily& fam, const Descriptor& m,
                              const Descriptor& n_desc) {
    auto q = fam.quiver();
    int nv = q->vertex_count();
    Rep m2 = m.build(q, 2), n2 = n_desc.build(q, 2);
    long dmn = ext_dim(m2, n2), dnm = ext_dim(n2, m2);
    LaurentReport r;
    if (dmn + dnm == 0) {
        r.lhs = cc(fam, m) * cc(fam, n_desc);
        r.rhs = cc(fam, Descriptor::sum({m, n_desc}));
        r.ok = r.lhs == r.rhs;
        r.detail = "split case: X_M X_N vs X_{M+N}";
        return r;
    }
    r.lhs = (cc(fam, m) * cc(fam, n_desc)).scaled(Int(dmn + dnm));
    LaurentPoly rhs = module_side_sum(fam, m, n_desc, false) +
                      module_side_sum(fam, n_desc, m, false);
    if (dmn > 0) rhs = rhs + tau_side_sum(fam, m, n_desc);   // Hom(N, tau M)
    if (dnm > 0) rhs = rhs + tau_side_sum(fam, n_desc, m);   // Hom(M, tau N)
    r.rhs = rhs;
    r.ok = r.lhs == r.rhs;
    r.detail = r.ok ? "two-term multiplication identity holds"
                    : r.lhs.str() + " vs " + r.rhs.str();
    return r;
}

// One-directional multiplication formula (valid beyond finite type):
// dim Ext(xi',eta') X_{xi'} X_{eta'} = non-split module strata + tau strata.
inline LaurentReport cluster_mult_check(PrimeFamily& fam, const Descriptor& xip,
                                        const Descriptor& etap) {
    auto q = fam.quiver();
    Rep x2 = xip.build(q, 2), e2 = etap.build(q, 2);
    long d1 = ext_dim(x2, e2);
    LaurentReport r;
    r.lhs = (cc(fam, xip) * cc(fam, etap)).scaled(Int(d1));
    r.rhs = module_side_sum(fam, xip, etap, true) + tau_side_sum(fam, xip, etap);
    r.ok = r.lhs == r.rhs;
    r.detail = r.ok ? "one-directional multiplication identity holds"
                    : r.lhs.str() + " vs " + r.rhs.str();
    return r;
}

// --- higher-order associativity of stratified Hom counts ---

namespace detail {
// chi-valued h^{L1 L2}_{X Y}: maps L1 -> L2 with kernel Y and cokernel X,
// interpolated; the projective variant divides out the scalar action.
inline Int chi_hom_stratum(PrimeFamily& fam, const Descriptor& l1, const Descriptor& l2,
                           const Rep& y2, const Rep& x2, bool projective) {
    auto q = fam.quiver();
    Universe& u2 = fam.at(2);
    std::string ykey = summand_key(u2, y2), xkey = summand_key(u2, x2);
    DimVector ydims = y2.dims, xdims = x2.dims;
    Rep l12 = l1.build(q, 2), l22 = l2.build(q, 2);
    int bound = hom_dim(l12, l22);
    auto counter = [&](long p) {
        Universe& u = fam.at(p);
        Rep l1p = l1.build(q, p), l2p = l2.build(q, p);
        Int c = 0;
        for (const IsoClass& yc : u.table(ydims).classes) {
            if (summand_key(u, yc.rep) != ykey) continue;
            for (const IsoClass& xc : u.table(xdims).classes) {
                if (summand_key(u, xc.rep) != xkey) continue;
                c += hom_stratum_count(l1p, l2p, yc.rep, xc.rep, u.guards());
            }
        }
        return c;
    };
    if (!projective) return chi_of(counter, bound);
    bool zero_in = ydims == l12.dims && xdims == l22.dims &&
                   summand_key(u2, l12) == ykey && summand_key(u2, l22) == xkey;
    return projective_chi(counter, zero_in, bound);
}
}  // namespace detail

struct HigherAssocReport {
    Int lhs = 0, rhs = 0;
    bool ok = false;
};

// int_Y g^Y_{Y2 Y1} h^{L1 L2}_{X Y} = int_{L1'} g^{L1}_{L1' Y1} h^{L1' L2}_{X Y2},
// with h either the affine chi or its projectivization.  Groups must be
// singletons here (finite-type universes), so per-class values are exact.
inline HigherAssocReport higher_assoc_check(PrimeFamily& fam, const Descriptor& x,
                                            const Descriptor& y1, const Descriptor& y2,
                                            const Descriptor& l1, const Descriptor& l2,
                                            bool projective) {
    auto q = fam.quiver();
    Universe& u2 = fam.at(2);
    Rep x2 = x.build(q, 2), y12 = y1.build(q, 2), y22 = y2.build(q, 2);
    Rep l12 = l1.build(q, 2), l22 = l2.build(q, 2);
    HigherAssocReport rep;

    // left: Y over the classes of grade dim Y1 + dim Y2
    DimVector ygrade = y12.dims + y22.dims;
    for (const ClassGroup& grp : class_groups(u2, ygrade)) {
        if (grp.members.size() != 1)
            throw std::logic_error("higher associativity needs singleton class groups");
        const Rep& yrep = u2.table(ygrade).classes[grp.members[0]].rep;
        Int g = chi_of([&](long p) {
            Universe& u = fam.at(p);
            Rep y2p = y2.build(q, p), y1p = y1.build(q, p);
            Int c = 0;
            for (const IsoClass& cls : u.table(ygrade).classes)
                if (summand_key(u, cls.rep) == grp.key)
                    c += hall_number(y2p, y1p, cls.rep, u.guards());
            return c;
        }, grassmann_degree_bound(y12.dims, ygrade));
        if (g == 0) continue;
        if (!leq(yrep.dims, l12.dims)) continue;
        rep.lhs += g * detail::chi_hom_stratum(fam, l1, l2, yrep, x2, projective);
    }

    // right: L1' over the classes of grade dim L1 - dim Y1
    DimVector lgrade = l12.dims - y12.dims;
    std::string ykey = summand_key(u2, y22), xkey = summand_key(u2, x2);
    for (const ClassGroup& grp : class_groups(u2, lgrade)) {
        if (grp.members.size() != 1)
            throw std::logic_error("higher associativity needs singleton class groups");
        const Rep& l1rep2 = u2.table(lgrade).classes[grp.members[0]].rep;
        Int g = chi_of([&](long p) {
            Universe& u = fam.at(p);
            Rep y1p = y1.build(q, p), l1p = l1.build(q, p);
            Int c = 0;
            for (const IsoClass& cls : u.table(lgrade).classes)
                if (summand_key(u, cls.rep) == grp.key)
                    c += hall_number(cls.rep, y1p, l1p, u.guards());
            return c;
        }, grassmann_degree_bound(y12.dims, l12.dims));
        if (g == 0) continue;
        int bound = hom_dim(l1rep2, l22);
        auto counter = [&](long p) {
            Universe& u = fam.at(p);
            Rep l2p = l2.build(q, p);
            Int c = 0;
            for (const IsoClass& l1cls : u.table(lgrade).classes) {
                if (summand_key(u, l1cls.rep) != grp.key) continue;
                for (const IsoClass& ycls : u.table(y22.dims).classes) {
                    if (summand_key(u, ycls.rep) != ykey) continue;
                    for (const IsoClass& xcls : u.table(x2.dims).classes) {
                        if (summand_key(u, xcls.rep) != xkey) continue;
                        c += hom_stratum_count(l1cls.rep, l2p, ycls.rep, xcls.rep,
                                               u.guards());
                    }
                }
            }
            return c;
        };
        Int h;
        if (!projective) {
            h = chi_of(counter, bound);
        } else {
            bool zero_in = y22.dims == l1rep2.dims && x2.dims == l22.dims &&
                           summand_key(u2, l1rep2) == ykey && summand_key(u2, l22) == xkey;
            h = projective_chi(counter, zero_in, bound);
        }
        rep.rhs += g * h;
    }
    rep.ok = rep.lhs == rep.rhs;
    return rep;
}

}  // namespace hallcat
