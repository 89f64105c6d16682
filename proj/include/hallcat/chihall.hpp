#pragma once

// chi-valued Hall numbers: a triple of symbolic module descriptors names the
// same iso classes over every prime, the count is interpolated as a
// polynomial in q and evaluated at q = 1.  On top of that sits the
// degenerated (split-middle-term) form of Green's formula, whose right-hand
// side runs over direct-sum decompositions instead of extensions.

#include <utility>

#include "hallcat/chi.hpp"
#include "hallcat/descriptor.hpp"
#include "hallcat/isotable.hpp"

namespace hallcat {

// Degree of the submodule-Grassmannian counter: sum_i e_i (d_i - e_i).
inline int grassmann_degree_bound(const DimVector& sub, const DimVector& amb) {
    int b = 0;
    for (size_t i = 0; i < sub.size(); ++i) b += sub[i] * (amb[i] - sub[i]);
    return b;
}

inline Int chi_hall_number(std::shared_ptr<const Quiver> q, const Descriptor& x,
                           const Descriptor& y, const Descriptor& l,
                           const Guards& guards = default_guards()) {
    Rep px = x.build(q, 2), py = y.build(q, 2), pl = l.build(q, 2);
    if (px.dims + py.dims != pl.dims) return 0;
    int bound = grassmann_degree_bound(py.dims, pl.dims);
    return chi_of([&](long p) {
        Rep xp = x.build(q, p), yp = y.build(q, p), lp = l.build(q, p);
        if (xp.dims != px.dims || yp.dims != py.dims || lp.dims != pl.dims)
            throw std::logic_error("descriptor dimensions drift across primes");
        return hall_number(xp, yp, lp, guards);
    }, bound);
}

// chi of the extension stratum Ext^1(A,B)_X inside the ambient Ext space.
inline Int chi_ext_stratum(std::shared_ptr<const Quiver> q, const Descriptor& a,
                           const Descriptor& b, const Descriptor& x,
                           const Guards& guards = default_guards()) {
    Rep pa = a.build(q, 2), pb = b.build(q, 2), px = x.build(q, 2);
    if (pa.dims + pb.dims != px.dims) return 0;
    int bound = static_cast<int>(ext_dim(pa, pb));
    return chi_of([&](long p) {
        return ext_stratum_count(a.build(q, p), b.build(q, p), x.build(q, p), guards);
    }, bound);
}

// All ordered splittings of the summand multiset of a descriptor into two
// complementary descriptors.  Requires the descriptor to be written as a sum
// of indecomposable summands (each sub-multiset then names one iso class).
inline std::vector<std::pair<Descriptor, Descriptor>> summand_splittings(
    const Descriptor& d) {
    std::vector<Descriptor> parts;
    if (d.kind == Descriptor::Sum) parts = d.parts;
    else if (d.kind != Descriptor::Zero) parts = {d};
    // group equal summands so each sub-multiset appears exactly once
    std::map<std::string, std::pair<Descriptor, int>> groups;
    for (const Descriptor& p : parts) {
        auto it = groups.emplace(p.str(), std::make_pair(p, 0)).first;
        it->second.second += 1;
    }
    std::vector<std::pair<Descriptor, Descriptor>> out;
    std::vector<std::pair<Descriptor, int>> dist;
    for (auto& [k, v] : groups) dist.push_back(v);
    std::vector<int> take(dist.size(), 0);
    while (true) {
        std::vector<Descriptor> first, second;
        for (size_t i = 0; i < dist.size(); ++i) {
            for (int k = 0; k < take[i]; ++k) first.push_back(dist[i].first);
            for (int k = take[i]; k < dist[i].second; ++k) second.push_back(dist[i].first);
        }
        out.emplace_back(Descriptor::sum(std::move(first)),
                         Descriptor::sum(std::move(second)));
        size_t i = 0;
        while (i < dist.size() && take[i] == dist[i].second) take[i++] = 0;
        if (i == dist.size()) break;
        ++take[i];
    }
    return out;
}

struct DegeneratedReport {
    Int lhs = 0, rhs = 0;
    bool ok = false;
    long decompositions = 0;  // pairs of splittings contributing to the RHS
};

// g^{xi'+eta'}_{xi eta} (chi-valued) against the sum over direct-sum
// decompositions xi = gamma + alpha, eta = delta + beta of
// g^{xi'}_{gamma delta} g^{eta'}_{alpha beta}.
inline DegeneratedReport degenerated_green_check(std::shared_ptr<const Quiver> q,
                                                 const Descriptor& xi,
                                                 const Descriptor& eta,
                                                 const Descriptor& xip,
                                                 const Descriptor& etap,
                                                 const Guards& guards = default_guards()) {
    DegeneratedReport r;
    Descriptor middle = Descriptor::sum({xip, etap});
    r.lhs = chi_hall_number(q, xi, eta, middle, guards);
    for (const auto& [gamma, alpha] : summand_splittings(xi))
        for (const auto& [delta, beta] : summand_splittings(eta)) {
            Int g1 = chi_hall_number(q, gamma, delta, xip, guards);
            if (g1 == 0) continue;
            Int g2 = chi_hall_number(q, alpha, beta, etap, guards);
            if (g2 == 0) continue;
            r.rhs += g1 * g2;
            ++r.decompositions;
        }
    r.ok = r.lhs == r.rhs;
    return r;
}

}  // namespace hallcat
