#pragma once

// Exhaustive verification sweeps over iso-class tuples of bounded total
// dimension.  Shared by the CLI and the acceptance harness.

#include <string>

#include "hallcat/greenext.hpp"

namespace hallcat {

inline std::vector<DimVector> grades_up_to(int nvertices, int max_total) {
    std::vector<DimVector> out;
    DimVector d(nvertices, 0);
    std::function<void(int, int)> rec = [&](int v, int left) {
        if (v == nvertices) {
            out.push_back(d);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            d[v] = k;
            rec(v + 1, left - k);
        }
        d[v] = 0;
    };
    rec(0, max_total);
    return out;
}

struct SweepResult {
    long instances = 0;
    long failures = 0;
    long filtered = 0;  // quadruples touched by the relation filter
    std::string first_failure;

    bool ok() const { return failures == 0 && instances > 0; }
    void record(bool good, const std::string& what) {
        ++instances;
        if (!good) {
            ++failures;
            if (first_failure.empty()) first_failure = what;
        }
    }
};

enum class GreenVariant { Original, Rewritten, NonHereditary };

// All quadruples (xi, eta, xi', eta') with dim xi + dim eta =
// dim xi' + dim eta' and total dimension <= max_total.
inline SweepResult green_sweep(Universe& u, GreenVariant variant, int max_total) {
    SweepResult res;
    int nv = u.quiver()->vertex_count();
    for (const DimVector& grade : grades_up_to(nv, max_total)) {
        if (total(grade) == 0) continue;
        std::vector<std::pair<DimVector, DimVector>> splits;
        for (const DimVector& a : grade_splittings(grade)) splits.emplace_back(a, grade - a);
        for (const auto& [dxi, deta] : splits)
            for (const auto& [dxip, detap] : splits)
                for (const IsoClass& xi : u.table(dxi).classes)
                    for (const IsoClass& eta : u.table(deta).classes)
                        for (const IsoClass& xip : u.table(dxip).classes)
                            for (const IsoClass& etap : u.table(detap).classes) {
                                GreenReport r;
                                switch (variant) {
                                    case GreenVariant::Original:
                                        r = green_check(u, xi.rep, eta.rep, xip.rep, etap.rep);
                                        break;
                                    case GreenVariant::Rewritten:
                                        r = green_rewritten_check(u, xi.rep, eta.rep,
                                                                  xip.rep, etap.rep);
                                        break;
                                    case GreenVariant::NonHereditary:
                                        r = green_nonhereditary_check(u, xi.rep, eta.rep,
                                                                      xip.rep, etap.rep);
                                        break;
                                }
                                res.filtered += r.filtered_quadruples;
                                res.record(r.ok, xi.label + "," + eta.label + "," +
                                                     xip.label + "," + etap.label +
                                                     ": " + r.lhs.str() + " vs " +
                                                     r.rhs.str());
                            }
    }
    return res;
}

// Hall-product associativity on every class triple up to the bound.
inline SweepResult hall_assoc_sweep(Universe& u, int max_total, bool twisted = false) {
    SweepResult res;
    int nv = u.quiver()->vertex_count();
    std::vector<const IsoClass*> classes;
    std::vector<DimVector> grades = grades_up_to(nv, max_total);
    for (const DimVector& g : grades)
        for (const IsoClass& c : u.table(g).classes) classes.push_back(&c);
    for (const IsoClass* x : classes)
        for (const IsoClass* y : classes)
            for (const IsoClass* z : classes) {
                if (total(x->rep.dims + y->rep.dims + z->rep.dims) > max_total) continue;
                CheckReport r = assoc_check(u, x->rep, y->rep, z->rep, twisted);
                res.record(r.ok, x->label + "," + y->label + "," + z->label);
            }
    return res;
}

struct TriplePairResult {
    SweepResult corrected;
    long printed_failures = 0;  // triples where the uncorrected form breaks
};

// Every triple (alpha, beta, lambda) with matching grade: the corrected
// identity must hold; the historic printed form is tallied for transparency.
inline TriplePairResult riedtmann_peng_sweep(Universe& u, int max_total) {
    TriplePairResult out;
    int nv = u.quiver()->vertex_count();
    for (const DimVector& grade : grades_up_to(nv, max_total)) {
        if (total(grade) == 0) continue;
        for (const DimVector& da : grade_splittings(grade)) {
            DimVector db = grade - da;
            for (const IsoClass& a : u.table(da).classes)
                for (const IsoClass& b : u.table(db).classes)
                    for (const IsoClass& l : u.table(grade).classes) {
                        RiedtmannPengReport r =
                            riedtmann_peng_check(a.rep, b.rep, l.rep, u.guards());
                        out.corrected.record(r.corrected_ok,
                                             a.label + "," + b.label + "," + l.label);
                        if (!r.printed_ok) ++out.printed_failures;
                    }
        }
    }
    return out;
}

}  // namespace hallcat
