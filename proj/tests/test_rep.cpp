#include <catch2/catch_amalgamated.hpp>

#include <memory>

#include "hallcat/rep.hpp"

using namespace hallcat;

namespace {
std::shared_ptr<const Quiver> A2 = std::make_shared<Quiver>(a2_quiver());
std::shared_ptr<const Quiver> KR = std::make_shared<Quiver>(kronecker_quiver());
std::shared_ptr<const Quiver> A3R =
    std::make_shared<Quiver>(a3_linear_relation_quiver());

// indecomposable P_1 = (k -> k) over A2
Rep a2_p1(long p) {
    Rep r = Rep::make(A2, p, {1, 1});
    r.mats[0].at(0, 0) = 1;
    return r;
}
}  // namespace

TEST_CASE("hom between simples") {
    long p = 3;
    Rep s1 = simple_rep(A2, p, 0), s2 = simple_rep(A2, p, 1);
    REQUIRE(hom_dim(s1, s2) == 0);
    REQUIRE(hom_dim(s2, s1) == 0);
    REQUIRE(hom_dim(s1, s1) == 1);
}

TEST_CASE("hom with projective") {
    long p = 3;
    Rep p1 = a2_p1(p);
    Rep s1 = simple_rep(A2, p, 0), s2 = simple_rep(A2, p, 1);
    REQUIRE(hom_dim(p1, s1) == 1);
    REQUIRE(hom_dim(s1, p1) == 0);
    REQUIRE(hom_dim(s2, p1) == 1);
    REQUIRE(hom_dim(p1, p1) == 1);
    // every member of a hom basis intertwines
    for (const GradedMap& g : hom_space(p1, p1)) {
        REQUIRE((g.vertex[1] * p1.mats[0]) == (p1.mats[0] * g.vertex[0]));
    }
}

TEST_CASE("direct sum") {
    long p = 2;
    Rep m = direct_sum(a2_p1(p), simple_rep(A2, p, 0));
    REQUIRE(m.dims == DimVector({2, 1}));
    REQUIRE(m.mats[0].at(0, 0) == 1);
    REQUIRE(m.mats[0].at(0, 1) == 0);
    REQUIRE(hom_dim(m, m) == 2 + 0 + 1 + 0);  // End(P1)+Hom(P1,S1)+End(S1) grid
}

TEST_CASE("relations checked") {
    long p = 2;
    // 3 -> 2 -> 1 with zero composite: P_3 for the relation algebra is (0,k,k)
    Rep good = Rep::make(A3R, p, {1, 1, 1});
    good.mats[0].at(0, 0) = 1;  // arrow 3->2
    good.mats[1].at(0, 0) = 0;  // arrow 2->1
    REQUIRE(good.satisfies_relations());
    Rep bad = good;
    bad.mats[1].at(0, 0) = 1;
    REQUIRE_FALSE(bad.satisfies_relations());
}

TEST_CASE("nilpotency") {
    long p = 3;
    REQUIRE(a2_p1(p).is_nilpotent());  // acyclic quiver: everything nilpotent
    Quiver loop(1, {{0, 0}});
    auto lq = std::make_shared<const Quiver>(loop);
    Rep jordan = Rep::make(lq, p, {2});
    jordan.mats[0].at(0, 1) = 1;
    REQUIRE(jordan.is_nilpotent());
    Rep unit = Rep::make(lq, p, {1});
    unit.mats[0].at(0, 0) = 1;
    REQUIRE_FALSE(unit.is_nilpotent());
}

TEST_CASE("sub and quotient along a stable tuple") {
    long p = 2;
    Rep m = a2_p1(p);
    // submodule S_2 = (0, k)
    SubTuple u = {Subspace::zero(p, 1), Subspace::full(p, 1)};
    REQUIRE(is_stable(m, u));
    Rep sub = sub_rep(m, u);
    REQUIRE(sub.dims == DimVector({0, 1}));
    Rep quot = quotient_rep(m, u);
    REQUIRE(quot.dims == DimVector({1, 0}));

    // (k, 0) is not stable in P_1
    SubTuple bad = {Subspace::full(p, 1), Subspace::zero(p, 1)};
    REQUIRE_FALSE(is_stable(m, bad));
}

TEST_CASE("quotient matrices are induced maps") {
    long p = 3;
    // M = P1 + S2 over A2, dims (1,2); sub = diagonal copy of S2
    Rep m = direct_sum(a2_p1(p), simple_rep(A2, p, 1));
    SubTuple u = {Subspace::zero(p, 1),
                  Subspace::span(FfMatrix::from_rows(p, {{1, 1}}))};
    REQUIRE(is_stable(m, u));
    Rep q = quotient_rep(m, u);
    REQUIRE(q.dims == DimVector({1, 1}));
    // the image of the generator of M_1 is e_1, which reduces to -e_2 = 2*e_2
    // modulo the span of (1,1); in complement coordinates (col 1) that is 2
    REQUIRE(q.mats[0].at(0, 0) == 2);
}

TEST_CASE("kernel and image tuples") {
    long p = 2;
    Rep m = a2_p1(p);
    Rep s1 = simple_rep(A2, p, 0);
    auto maps = hom_space(m, s1);
    REQUIRE(maps.size() == 1);
    SubTuple ker = kernel_tuple(m, maps[0]);
    REQUIRE(ker[0].dim() == 0);
    REQUIRE(ker[1].dim() == 1);
    SubTuple img = image_tuple(s1, maps[0]);
    REQUIRE(img[0].dim() == 1);
    REQUIRE(img[1].dim() == 0);
}

TEST_CASE("radical socle top") {
    long p = 2;
    Rep m = a2_p1(p);
    RadSocTop rst = rad_soc_top(m);
    REQUIRE(rst.radical[0].dim() == 0);
    REQUIRE(rst.radical[1].dim() == 1);
    REQUIRE(rst.socle[0].dim() == 0);
    REQUIRE(rst.socle[1].dim() == 1);
    REQUIRE(rst.top == DimVector({1, 0}));

    Rep kr = Rep::make(KR, p, {1, 2});
    kr.mats[0].at(0, 0) = 1;
    kr.mats[1].at(1, 0) = 1;
    RadSocTop k = rad_soc_top(kr);
    REQUIRE(k.radical[1].dim() == 2);
    REQUIRE(k.socle[1].dim() == 2);
    REQUIRE(k.top == DimVector({1, 0}));
}

TEST_CASE("coefficient odometer") {
    int count = 0;
    for_each_coeff(3, 2, [&](const std::vector<long>&) {
        ++count;
        return false;
    });
    REQUIRE(count == 9);
    count = 0;
    for_each_coeff(2, 3, [&](const std::vector<long>& c) {
        ++count;
        return c == std::vector<long>({1, 1, 0});
    });
    REQUIRE(count == 4);
}
