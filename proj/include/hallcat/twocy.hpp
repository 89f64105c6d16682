#pragma once

// Preprojective algebras: the doubled quiver with its mesh relations, the
// delta-form of a nilpotent module (Euler characteristics of its composition
// flag varieties), the partition of iso classes by delta-equivalence, and the
// two-sided multiplication identity those forms satisfy.

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hallcat/ccmap.hpp"

namespace hallcat {

// Double quiver with one mesh relation per vertex:
//   sum_{a: s(a)=i} a* a  -  sum_{a: t(a)=i} a a*  = 0.
// Arrow k of the input keeps its index; its reversal gets index m + k.
// The sign convention (outgoing stars positive) is fixed here once.
inline std::shared_ptr<const Quiver> preprojective(const Quiver& q) {
    int m = q.arrow_count();
    std::vector<Arrow> arrows = q.arrows();
    for (const Arrow& a : q.arrows()) arrows.push_back({a.target, a.source});
    std::vector<Relation> rels;
    for (int i = 0; i < q.vertex_count(); ++i) {
        Relation r;
        for (int a = 0; a < m; ++a) {
            if (q.arrows()[a].source == i)
                r.terms.push_back({1, Path{{a, m + a}}});
            if (q.arrows()[a].target == i)
                r.terms.push_back({-1, Path{{m + a, a}}});
        }
        if (!r.terms.empty()) rels.push_back(std::move(r));
    }
    return std::make_shared<const Quiver>(q.vertex_count(), std::move(arrows),
                                          std::move(rels));
}

using FlagType = std::vector<std::pair<int, int>>;

// Every arrangement of the grade as a composition series: one simple per
// level, in each admissible order.
inline std::vector<FlagType> full_flag_types(const DimVector& e) {
    std::vector<FlagType> out;
    std::vector<int> word;
    DimVector left = e;
    int len = total(e);
    std::function<void()> rec = [&] {
        if (static_cast<int>(word.size()) == len) {
            FlagType t;
            for (int i : word) t.push_back({i, 1});
            out.push_back(std::move(t));
            return;
        }
        for (size_t i = 0; i < left.size(); ++i) {
            if (left[i] == 0) continue;
            --left[i];
            word.push_back(static_cast<int>(i));
            rec();
            word.pop_back();
            ++left[i];
        }
    };
    rec();
    return out;
}

// Degree bound for a composition-series counter: the flag variety embeds in
// the product of complete vertexwise flag varieties.
inline int flag_degree_bound(const DimVector& e) {
    int b = 0;
    for (int d : e) b += d * (d - 1) / 2;
    return b;
}

// delta-form of a cross-prime family: chi of the flag variety, one entry per
// type.  Families must agree on every count at every prime.
inline std::vector<Int> delta_form(PrimeFamily& fam, const DimVector& e,
                                   const std::vector<FlagType>& types,
                                   const std::function<std::vector<Rep>(long)>& members_at) {
    int bound = flag_degree_bound(e);
    std::vector<Int> out;
    for (const FlagType& t : types)
        out.push_back(chi_of([&](long p) {
            std::vector<Rep> mem = members_at(p);
            if (mem.empty()) throw std::logic_error("empty delta family");
            Int c = flag_count(mem[0], t, 0, fam.guards());
            for (size_t i = 1; i < mem.size(); ++i)
                if (flag_count(mem[i], t, 0, fam.guards()) != c)
                    throw std::logic_error("family members disagree on a flag count");
            return c;
        }, bound));
    return out;
}

inline std::vector<Int> delta_form(PrimeFamily& fam, const Descriptor& d,
                                   const std::vector<FlagType>& types) {
    auto q = fam.quiver();
    DimVector e = d.build(q, 2).dims;
    return delta_form(fam, e, types,
                      [&, q](long p) { return std::vector<Rep>{d.build(q, p)}; });
}

namespace detail {
// iso classes matched across primes by their cheap linear-algebra signature
struct SigGroup {
    std::vector<int> signature;
    std::vector<Int> delta;
};

inline std::vector<Rep> classes_with_signature(Universe& u, const DimVector& e,
                                               const std::vector<int>& sig) {
    std::vector<Rep> out;
    for (const IsoClass& c : u.table(e).classes)
        if (rep_signature(c.rep) == sig) out.push_back(c.rep);
    return out;
}
}  // namespace detail

// The classes of grade e bucketed by their delta-form.
struct DeltaBucket {
    std::vector<Int> delta;
    std::vector<std::vector<int>> signatures;  // the merged signature groups
    long class_count = 0;                      // classes at the probe prime
};

inline std::vector<DeltaBucket> class_table(PrimeFamily& fam, const DimVector& e,
                                            const std::vector<FlagType>& types) {
    Universe& u2 = fam.at(2);
    std::map<std::vector<int>, long> sigs;
    for (const IsoClass& c : u2.table(e).classes) ++sigs[rep_signature(c.rep)];
    // every sampled prime must stay within the probe's signature set
    for (long p : first_primes(flag_degree_bound(e) + 2)) {
        Universe& u = fam.at(p);
        for (const IsoClass& c : u.table(e).classes)
            if (!sigs.count(rep_signature(c.rep)))
                throw std::logic_error("class signature drifts across primes");
    }
    std::map<std::vector<Int>, DeltaBucket> buckets;
    for (const auto& [sig, count] : sigs) {
        std::vector<Int> delta = delta_form(fam, e, types, [&fam, e, sig = sig](long p) {
            return detail::classes_with_signature(fam.at(p), e, sig);
        });
        auto it = buckets.emplace(delta, DeltaBucket{delta, {}, 0}).first;
        it->second.signatures.push_back(sig);
        it->second.class_count += count;
    }
    std::vector<DeltaBucket> out;
    for (auto& [d, b] : buckets) out.push_back(std::move(b));
    return out;
}

struct DeltaMultReport {
    std::vector<Int> lhs, rhs;
    bool ok = false;
    long buckets = 0;
};

// dim Ext(M,N) . delta_{M+N} = sum over delta-buckets of
// (chi PExt(M,N)_bucket + chi PExt(N,M)_bucket) . delta_bucket.
inline DeltaMultReport twocy_mult_check(PrimeFamily& fam, const Descriptor& m,
                                    const Descriptor& n,
                                    std::vector<FlagType> types = {}) {
    auto q = fam.quiver();
    Rep m2 = m.build(q, 2), n2 = n.build(q, 2);
    DimVector e = m2.dims + n2.dims;
    if (types.empty()) types = full_flag_types(e);
    long dmn = ext_dim(m2, n2), dnm = ext_dim(n2, m2);
    if (dmn != dnm)
        throw std::logic_error("Ext dimensions are not symmetric; not a 2-CY setting");

    DeltaMultReport rep;
    std::vector<Int> split_delta = delta_form(fam, Descriptor::sum({m, n}), types);
    for (const Int& v : split_delta) rep.lhs.push_back(Int(dmn) * v);

    std::vector<int> split_sig = rep_signature(direct_sum(m2, n2));
    rep.rhs.assign(types.size(), 0);
    int bound = static_cast<int>(std::max<long>(std::max(dmn, dnm), 1));
    for (const DeltaBucket& b : class_table(fam, e, types)) {
        ++rep.buckets;
        bool has_split = false;
        for (const auto& s : b.signatures) has_split = has_split || s == split_sig;
        auto chi_dir = [&](const Descriptor& a, const Descriptor& bb) {
            return projective_chi([&](long p) {
                Universe& u = fam.at(p);
                Rep ap = a.build(q, p), bp = bb.build(q, p);
                Int c = 0;
                for (const auto& sig : b.signatures)
                    for (const Rep& cls : detail::classes_with_signature(u, e, sig))
                        c += ext_stratum_count(ap, bp, cls, u.guards());
                return c;
            }, has_split, bound);
        };
        Int coeff = chi_dir(m, n) + chi_dir(n, m);
        if (coeff == 0) continue;
        for (size_t k = 0; k < types.size(); ++k) rep.rhs[k] += coeff * b.delta[k];
    }
    rep.ok = rep.lhs == rep.rhs;
    return rep;
}

}  // namespace hallcat
