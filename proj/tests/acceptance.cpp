// End-to-end acceptance run: one verdict line per criterion.

#include <iostream>

#include <catch2/catch_amalgamated.hpp>

#include "hallcat/ccmap.hpp"
#include "hallcat/chihall.hpp"
#include "hallcat/greenext.hpp"
#include "hallcat/cluster.hpp"
#include "hallcat/sweeps.hpp"
#include "hallcat/twocy.hpp"

using namespace hallcat;

namespace {

std::shared_ptr<const Quiver> A2 = std::make_shared<const Quiver>(a2_quiver());
std::shared_ptr<const Quiver> A3 = std::make_shared<const Quiver>(a3_quiver());
std::shared_ptr<const Quiver> A3R =
    std::make_shared<const Quiver>(a3_linear_relation_quiver());
std::shared_ptr<const Quiver> KR = std::make_shared<const Quiver>(kronecker_quiver());

void verdict(int n, const std::string& what, bool ok) {
    std::cout << "criterion " << n << " [" << what << "]: " << (ok ? "pass" : "FAIL")
              << std::endl;
    REQUIRE(ok);
}

// descriptors for every iso class of one A2 grade: c intervals plus simples
std::vector<Descriptor> a2_classes(const DimVector& d) {
    std::vector<Descriptor> out;
    for (int c = 0; c <= std::min(d[0], d[1]); ++c) {
        std::vector<Descriptor> parts;
        for (int i = 0; i < c; ++i) parts.push_back(Descriptor::interval(0, 1));
        for (int i = 0; i < d[0] - c; ++i) parts.push_back(Descriptor::simple(0));
        for (int i = 0; i < d[1] - c; ++i) parts.push_back(Descriptor::simple(1));
        out.push_back(Descriptor::sum(parts));
    }
    return out;
}

// descriptors for the A3 (1 -> 2 <- 3) classes of small grades, by summand
std::vector<Descriptor> a3_classes(const DimVector& d) {
    // indecomposables: S1, S2, S3, P1=(110), P3=(011), I2=(111)
    std::vector<std::pair<DimVector, Descriptor>> ind = {
        {{1, 0, 0}, Descriptor::simple(0)}, {{0, 1, 0}, Descriptor::simple(1)},
        {{0, 0, 1}, Descriptor::simple(2)}, {{1, 1, 0}, Descriptor::proj(0)},
        {{0, 1, 1}, Descriptor::proj(2)},   {{1, 1, 1}, Descriptor::inj(1)}};
    std::vector<Descriptor> out;
    std::vector<Descriptor> acc;
    std::function<void(size_t, DimVector)> rec = [&](size_t i, DimVector left) {
        if (total(left) == 0) {
            out.push_back(Descriptor::sum(acc));
            return;
        }
        if (i == ind.size()) return;
        rec(i + 1, left);
        if (leq(ind[i].first, left)) {
            acc.push_back(ind[i].second);
            rec(i, left - ind[i].first);
            acc.pop_back();
        }
    };
    rec(0, d);
    return out;
}

LaurentPoly nf(const RationalExpr& e) {
    auto r = laurent_check(e);
    REQUIRE(r);
    return *r;
}

}  // namespace

TEST_CASE("1: comultiplication formula, exact sweeps") {
    bool ok = true;
    for (long p : {2L, 3L}) {
        Universe u2(A2, p), u3(A3, p);
        ok = ok && green_sweep(u2, GreenVariant::Original, 4).ok();
        ok = ok && green_sweep(u3, GreenVariant::Original, 3).ok();
    }
    verdict(1, "exact formula sweep, two-vertex <=4 and three-vertex <=3", ok);
}

TEST_CASE("2: rewritten form and the corrected count identity") {
    bool ok = true;
    for (long p : {2L, 3L}) {
        Universe u2(A2, p), u3(A3, p);
        ok = ok && green_sweep(u2, GreenVariant::Rewritten, 4).ok();
        ok = ok && green_sweep(u3, GreenVariant::Rewritten, 3).ok();
    }
    Universe u(A2, 2);
    TriplePairResult tp = riedtmann_peng_sweep(u, 4);
    ok = ok && tp.corrected.ok();
    // the witness triple: corrected form balances, the historic one does not
    Rep s = simple_rep(A2, 2, 0);
    RiedtmannPengReport w = riedtmann_peng_check(s, s, direct_sum(s, s));
    std::cout << "  witness (S,S,S+S) p=2: corrected " << w.corrected_lhs.str() << " = "
              << w.corrected_rhs.str() << "; historic form gives "
              << w.corrected_lhs.str() << " vs " << w.printed_rhs.str() << std::endl;
    ok = ok && w.corrected_ok && !w.printed_ok && w.corrected_lhs == 3 &&
         w.printed_rhs == Rat(1, 2) && tp.printed_failures > 0;
    verdict(2, "rewritten sweep plus corrected/historic count identity", ok);
}

TEST_CASE("3: relation-aware formula with the vanishing-class filter") {
    Universe u(A3R, 2);
    SweepResult s = green_sweep(u, GreenVariant::NonHereditary, 3);
    std::cout << "  filtered quadruples: " << s.filtered << std::endl;
    verdict(3, "relation quiver sweep, filter active", s.ok() && s.filtered >= 1);
}

TEST_CASE("4: product laws, coproduct, pairing, quantum Serre") {
    bool ok = true;
    for (long p : {2L, 3L}) {
        Universe u(A2, p);
        ok = ok && hall_assoc_sweep(u, 4, false).ok();
        ok = ok && hall_assoc_sweep(u, 4, true).ok();
        ok = ok && serre_check(u, 0, 1).ok && serre_check(u, 1, 0).ok;
    }
    // coproduct and pairing up to grade (2,2)
    Universe u(A2, 2);
    std::vector<Rep> cls;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (const IsoClass& c : u.table({a, b}).classes) cls.push_back(c.rep);
    for (const Rep& x : cls)
        for (const Rep& y : cls) {
            DimVector s = x.dims + y.dims;
            if (s[0] > 2 || s[1] > 2) continue;
            ok = ok && green_compat_check(u, x, y).ok;
            for (const IsoClass& a : u.table(s).classes)
                ok = ok && hopf_pairing_check(u, a.rep, x, y).ok;
        }
    verdict(4, "associativity, coproduct, pairing, Serre", ok);
}

TEST_CASE("5: q->1 formula and the stratum vanishing lemma") {
    bool ok = true;
    long instances = 0;
    for (const DimVector& d : grades_up_to(2, 3)) {
        if (total(d) == 0) continue;
        for (const DimVector& dxi : grade_splittings(d))
            for (const DimVector& dxip : grade_splittings(d))
                for (const Descriptor& xi : a2_classes(dxi))
                    for (const Descriptor& eta : a2_classes(d - dxi))
                        for (const Descriptor& xip : a2_classes(dxip))
                            for (const Descriptor& etap : a2_classes(d - dxip)) {
                                ok = ok &&
                                     degenerated_green_check(A2, xi, eta, xip, etap).ok;
                                ++instances;
                            }
    }
    // the three-vertex instance with a projective cofactor
    ok = ok && total(DimVector{1, 1, 1}) == 3;
    for (const DimVector& dxi : grade_splittings({1, 1, 1}))
        for (const Descriptor& xi : a3_classes(dxi))
            for (const Descriptor& eta : a3_classes(DimVector{1, 1, 1} - dxi))
                ok = ok && degenerated_green_check(A3, xi, eta, Descriptor::proj(2),
                                                   Descriptor::simple(0))
                               .ok;
    // chi of a nonsplit stratum vanishes
    long vanish_checked = 0;
    Universe probe(A2, 2);
    for (const DimVector& d : grades_up_to(2, 3)) {
        if (total(d) == 0) continue;
        for (const DimVector& da : grade_splittings(d))
            for (const Descriptor& a : a2_classes(da))
                for (const Descriptor& b : a2_classes(d - da)) {
                    Rep split2 = direct_sum(a.build(A2, 2), b.build(A2, 2));
                    for (const Descriptor& x : a2_classes(d)) {
                        if (is_isomorphic(x.build(A2, 2), split2)) continue;
                        ok = ok && chi_ext_stratum(A2, a, b, x) == 0;
                        ++vanish_checked;
                    }
                }
    }
    verdict(5, "split-middle formula (" + std::to_string(instances) +
                   " instances) and vanishing lemma (" +
                   std::to_string(vanish_checked) + " strata)",
            ok && instances > 0 && vanish_checked > 0);
}

TEST_CASE("6: cluster character golden values and exchange identities") {
    PrimeFamily fam(A3);
    int n = 3;
    RationalExpr x1 = RationalExpr::var(n, 0), x2 = RationalExpr::var(n, 1),
                 x3 = RationalExpr::var(n, 2);
    RationalExpr one = RationalExpr::of(LaurentPoly::one(n));
    LaurentPoly lone = LaurentPoly::one(n);
    bool ok = cc(fam, Descriptor::simple(1)) == nf((one + x1 * x3) / x2) &&
              cc(fam, Descriptor::simple(0)) == nf((one + x2) / x1) &&
              cc(fam, Descriptor::simple(2)) == nf((one + x2) / x3) &&
              cc(fam, Descriptor::proj(0)) == nf((one + x2 + x1 * x3) / (x1 * x2)) &&
              cc(fam, Descriptor::proj(2)) == nf((one + x2 + x1 * x3) / (x2 * x3)) &&
              cc(fam, Descriptor::inj(1)) ==
                  nf((one + x2 + x2 * x2 + x2 + x1 * x3) / (x1 * x2 * x3));
    ok = ok &&
         cc(fam, Descriptor::simple(0)) * cc(fam, Descriptor::proj(2)) ==
             lone + cc(fam, Descriptor::inj(1)) &&
         cc(fam, Descriptor::simple(2)) * cc(fam, Descriptor::proj(0)) ==
             lone + cc(fam, Descriptor::inj(1)) &&
         cc(fam, Descriptor::proj(2)) * LaurentPoly::var(n, 2) ==
             lone + cc(fam, Descriptor::simple(1)) &&
         cc(fam, Descriptor::proj(0)) * LaurentPoly::var(n, 0) ==
             lone + cc(fam, Descriptor::simple(1));
    verdict(6, "six golden characters and four exchange identities", ok);
}

TEST_CASE("7: two-term multiplication, doubled simples and indecomposables") {
    auto a2op = std::make_shared<const Quiver>(Quiver(2, {{1, 0}}));
    PrimeFamily fam(a2op);
    Descriptor s1 = Descriptor::simple(0), s2 = Descriptor::simple(1);
    Descriptor m = Descriptor::sum({s2, s2}), n = Descriptor::sum({s1, s1});
    auto stratum_poly = [&](const Descriptor& ker, const Descriptor& coker) {
        auto counter = [&](long p) {
            Rep np = n.build(a2op, p);
            Rep tm =
                direct_sum(ar_translate(s2.build(a2op, p)), ar_translate(s2.build(a2op, p)));
            return hom_stratum_count(np, tm, ker.build(a2op, p), coker.build(a2op, p));
        };
        return projectivize(interpolate(counter, 4), false);
    };
    bool ok = stratum_poly(s1, s1).coeffs == std::vector<Rat>{1, 2, 1} &&
              stratum_poly(Descriptor::zero(), Descriptor::zero()).coeffs ==
                  std::vector<Rat>{0, -1, 0, 1};
    Descriptor p2 = Descriptor::proj(1);
    ok = ok && cc(fam, n) * cc(fam, m) ==
                   cc(fam, Descriptor::sum({s1, p2, s2})) +
                       cc(fam, Descriptor::sum({s1, s2}));
    // every indecomposable pair with extensions, on both orientations
    long pairs = 0;
    for (auto q : {A2, a2op}) {
        PrimeFamily f2(q);
        std::vector<Descriptor> ind = {s1, s2, Descriptor::interval(0, 1)};
        for (const Descriptor& a : ind)
            for (const Descriptor& b : ind) {
                Rep ap = a.build(q, 2), bp = b.build(q, 2);
                if (ext_dim(ap, bp) + ext_dim(bp, ap) == 0) continue;
                ++pairs;
                ok = ok && ck_check(f2, a, b).ok;
            }
    }
    verdict(7, "stratum polynomials, doubled-simples identity, " +
                   std::to_string(pairs) + " indecomposable pairs",
            ok && pairs == 4);
}

TEST_CASE("8: double-arrow multiplication with the tau-side term") {
    PrimeFamily fam(KR);
    int n = 2;
    Descriptor s1 = Descriptor::simple(0), s2 = Descriptor::simple(1);
    bool ok = cc(fam, s1).str() == "x1^-1*x2^2 + x1^-1" &&
              cc(fam, s2).str() == "x1^2*x2^-1 + x2^-1";
    LaurentPoly xu = cc_of_group(fam, {1, 1}, "(1,1)");
    ok = ok && xu == LaurentPoly::monomial(n, {1, -1}) + LaurentPoly::monomial(n, {-1, 1}) +
                         LaurentPoly::monomial(n, {-1, -1});
    LaurentReport r = cluster_mult_check(fam, s1, s2);
    ok = ok && r.ok && r.lhs == (cc(fam, s1) * cc(fam, s2)).scaled(2) &&
         r.rhs == xu.scaled(2) + LaurentPoly::monomial(n, {1, 1}).scaled(2);
    // the monomial term is exactly the Hom(S2, tau S1) stratum contribution
    ok = ok && tau_side_sum(fam, s1, s2) == LaurentPoly::monomial(n, {1, 1}).scaled(2);
    verdict(8, "regular-family character and the full 2 X1 X2 identity", ok);
}

TEST_CASE("9: higher-order associativity of stratified counts") {
    bool ok = true;
    long checked = 0;
    PrimeFamily fam(A2);
    for (bool projective : {false, true})
        for (const DimVector& dy1 : grades_up_to(2, 3))
            for (const DimVector& dy2 : grades_up_to(2, 3))
                for (const DimVector& dl2 : grades_up_to(2, 3)) {
                    DimVector lifted = dy1 + dy2 + dl2;
                    if (total(lifted) > 3 || total(dy1) == 0 || total(dy2) == 0) continue;
                    for (const DimVector& dl1 : grades_up_to(2, 3)) {
                        if (!leq(dy1, dl1) || !leq(dl1, lifted)) continue;
                        for (const Descriptor& y1 : a2_classes(dy1))
                            for (const Descriptor& y2 : a2_classes(dy2))
                                for (const Descriptor& l2 : a2_classes(dl2))
                                    for (const Descriptor& l1 : a2_classes(dl1))
                                        for (const Descriptor& x :
                                             a2_classes(lifted - dl1)) {
                                            ok = ok && higher_assoc_check(fam, x, y1, y2,
                                                                          l1, l2,
                                                                          projective)
                                                           .ok;
                                            ++checked;
                                        }
                    }
                }
    verdict(9, "plain and projective variants, " + std::to_string(checked) + " tuples",
            ok && checked > 50);
}

TEST_CASE("10: mutation engine") {
    BMatrix b2 = {{0, 1}, {-1, 0}};
    BMatrix b3 = {{0, 1, 0}, {-1, 0, -1}, {0, 1, 0}};
    BMatrix bk = {{0, 2}, {-2, 0}};
    Seed s = Seed::initial(b2), cur = s;
    for (int step = 0; step < 10; ++step) cur = mutate(cur, step % 2);
    bool ok = detail::seed_key(cur) == detail::seed_key(s) && cur.b == s.b;
    ClusterEnumeration e2 = enumerate_clusters(s, 100);
    ClusterEnumeration e3 = enumerate_clusters(Seed::initial(b3), 1000);
    ok = ok && e2.closed && e2.variables.size() == 5 && e3.closed &&
         e3.variables.size() == 9;
    // normal forms exist for every enumerated variable
    ok = ok && e2.variable_polys.size() == 5 && e3.variable_polys.size() == 9;
    FiniteTypeReport f2 = finite_type_test(b2, 100), f3 = finite_type_test(b3, 100),
                     fk = finite_type_test(bk, 100);
    ok = ok && f2.verdict == FiniteTypeReport::FINITE &&
         f3.verdict == FiniteTypeReport::FINITE &&
         fk.verdict == FiniteTypeReport::INCONCLUSIVE && fk.semidefinite_witness;
    verdict(10, "period five, 5/9 variables, finite-type verdicts", ok);
}

TEST_CASE("11: doubled-quiver delta-form multiplication") {
    PrimeFamily fam(preprojective(*A2));
    Descriptor s1 = Descriptor::simple(0), s2 = Descriptor::simple(1);
    DeltaMultReport hand = twocy_mult_check(fam, s1, s2);
    bool ok = hand.ok && hand.lhs == std::vector<Int>{1, 1} &&
              hand.rhs == std::vector<Int>{1, 1} && hand.buckets == 3;
    long cases = 1;
    std::vector<Descriptor> mods = {s1, s2, Descriptor::sum({s1, s2})};
    for (const Descriptor& m : mods)
        for (const Descriptor& n : mods) {
            if (total(m.build(fam.quiver(), 2).dims + n.build(fam.quiver(), 2).dims) > 3)
                continue;
            ok = ok && twocy_mult_check(fam, m, n).ok;
            ++cases;
        }
    verdict(11, "hand-derived case (1,1) plus " + std::to_string(cases - 1) +
                    " swept pairs",
            ok);
}

TEST_CASE("12: interpolation control primes and partition invariants") {
    bool ok = true;
    // a direct interpolation with its control prime (throws on mismatch)
    // points of the projective line: p + 1; the control prime is checked inside
    CountPoly gr = interpolate([](long p) { return Int(p + 1); }, 1);
    ok = ok && chi(gr) == 2;
    long partitions = 0;
    for (long p : {2L, 3L}) {
        Universe u(A2, p);
        std::vector<Rep> cls;
        for (const DimVector& d : grades_up_to(2, 3))
            for (const IsoClass& c : u.table(d).classes) cls.push_back(c.rep);
        for (const Rep& a : cls)
            for (const Rep& b : cls) {
                if (a.total_dim() + b.total_dim() > 3) continue;
                // extension strata partition the whole Ext space
                Int ext_sum = 0;
                for (const IsoClass& x : u.table(a.dims + b.dims).classes)
                    ext_sum += ext_stratum_count(a, b, x.rep);
                ok = ok && ext_sum == int_pow(p, static_cast<unsigned>(ext_dim(a, b)));
                // hom strata partition the whole Hom space
                Int hom_sum = 0;
                for (const DimVector& e : grade_splittings(a.dims)) {
                    DimVector image = a.dims - e;
                    if (!leq(image, b.dims)) continue;
                    DimVector dc = b.dims - image;
                    for (const IsoClass& k : u.table(e).classes)
                        for (const IsoClass& c : u.table(dc).classes)
                            hom_sum += hom_stratum_count(a, b, k.rep, c.rep);
                }
                ok = ok && hom_sum == int_pow(p, static_cast<unsigned>(hom_dim(a, b)));
                ++partitions;
            }
    }
    // induced-pair fiber sizes on every small extension datum
    long fibers = 0;
    {
        Universe u(A2, 2);
        std::vector<Rep> cls;
        for (const DimVector& d : grades_up_to(2, 2))
            for (const IsoClass& c : u.table(d).classes) cls.push_back(c.rep);
        for (const Rep& m : cls)
            for (const Rep& n : cls) {
                if (m.total_dim() == 0 || n.total_dim() == 0) continue;
                for (const ArrowTuple& d : ext_class_reps(m, n)) {
                    ok = ok && induced_fiber_check(m, n, d).ok;
                    ++fibers;
                }
            }
    }
    verdict(12, std::to_string(partitions) + " partition sums, " +
                    std::to_string(fibers) + " fiber checks",
            ok && partitions > 0 && fibers > 0);
}
