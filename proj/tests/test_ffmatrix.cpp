#include <catch2/catch_amalgamated.hpp>

#include "hallcat/ffmatrix.hpp"

using namespace hallcat;

TEST_CASE("rref and rank") {
    // all-ones 2x2 over F_2 has rank 1
    FfMatrix m = FfMatrix::from_rows(2, {{1, 1}, {1, 1}});
    REQUIRE(m.rank() == 1);

    FfMatrix id = FfMatrix::identity(5, 3);
    REQUIRE(id.rank() == 3);
    REQUIRE(id.is_invertible());

    FfMatrix n = FfMatrix::from_rows(5, {{1, 2}, {2, 1}});
    REQUIRE(n.rank() == 2);
    FfMatrix sing = FfMatrix::from_rows(3, {{1, 2}, {2, 4}});
    REQUIRE(sing.rank() == 1);
}

TEST_CASE("negative entries normalize") {
    FfMatrix m = FfMatrix::from_rows(5, {{-1, -7}});
    REQUIRE(m.at(0, 0) == 4);
    REQUIRE(m.at(0, 1) == 3);
}

TEST_CASE("kernel and solve") {
    FfMatrix m = FfMatrix::from_rows(7, {{1, 2, 3}, {2, 4, 6}});
    auto ker = m.kernel_basis();
    REQUIRE(ker.size() == 2);
    for (const auto& v : ker) {
        auto img = m.apply(v);
        for (long x : img) REQUIRE(x == 0);
    }
    auto sol = m.solve({3, 6});
    REQUIRE(sol.has_value());
    REQUIRE(m.apply(*sol) == std::vector<long>({3, 6}));
    REQUIRE_FALSE(m.solve({1, 0}).has_value());
}

TEST_CASE("matrix arithmetic round trips") {
    FfMatrix a = FfMatrix::from_rows(5, {{1, 2}, {3, 4}});
    FfMatrix b = FfMatrix::from_rows(5, {{0, 1}, {1, 0}});
    REQUIRE((a * b).at(0, 0) == 2);
    REQUIRE((a + b - b) == a);
    REQUIRE(a.transposed().transposed() == a);
    REQUIRE(a.scaled(3).at(1, 1) == 2);  // 12 mod 5
}

TEST_CASE("subspace membership and coordinates") {
    Subspace s = Subspace::span(FfMatrix::from_rows(3, {{1, 1, 0}, {0, 1, 1}}));
    REQUIRE(s.dim() == 2);
    REQUIRE(s.contains({1, 2, 1}));
    REQUIRE_FALSE(s.contains({0, 0, 1}));
    auto c = s.coordinates({1, 2, 1});
    REQUIRE(c.has_value());
    // reconstruct
    std::vector<long> v(3, 0);
    for (int i = 0; i < s.dim(); ++i)
        for (int j = 0; j < 3; ++j) v[j] = (v[j] + (*c)[i] * s.basis.at(i, j)) % 3;
    REQUIRE(v == std::vector<long>({1, 2, 1}));
}

TEST_CASE("intersection and sum of subspaces") {
    long p = 2;
    Subspace a = Subspace::span(FfMatrix::from_rows(p, {{1, 0, 0}, {0, 1, 0}}));
    Subspace b = Subspace::span(FfMatrix::from_rows(p, {{0, 1, 0}, {0, 0, 1}}));
    Subspace i = intersect(a, b);
    REQUIRE(i.dim() == 1);
    REQUIRE(i.contains({0, 1, 0}));
    REQUIRE(sum(a, b).dim() == 3);
}

TEST_CASE("gaussian binomials") {
    REQUIRE(gaussian_binomial(2, 2, 1) == 3);
    REQUIRE(gaussian_binomial(3, 3, 1) == 13);
    REQUIRE(gaussian_binomial(3, 3, 2) == 13);
    REQUIRE(gaussian_binomial(2, 4, 2) == 35);
    REQUIRE(gaussian_binomial(5, 3, 0) == 1);
    REQUIRE(gaussian_binomial(5, 2, 3) == 0);
}

TEST_CASE("subspace enumeration is duplicate-free and complete") {
    auto l1 = subspaces(2, 2, 1);
    REQUIRE(l1.size() == 3);
    auto l2 = subspaces(3, 3, 1);
    REQUIRE(l2.size() == 13);
    auto l3 = subspaces(2, 4, 2);
    REQUIRE(l3.size() == 35);
    for (size_t i = 0; i < l3.size(); ++i)
        for (size_t j = i + 1; j < l3.size(); ++j) REQUIRE_FALSE(l3[i] == l3[j]);
}

TEST_CASE("enumeration guard trips") {
    Guards g;
    g.subspace_scan = 10;
    REQUIRE_THROWS_AS(subspaces(5, 6, 3, g), GuardExceeded);
}

TEST_CASE("twist scalar arithmetic") {
    long p = 3;
    TwistScalar v = TwistScalar::v_power(1, p);
    REQUIRE(v * v == TwistScalar::rational(Rat(3), p));
    REQUIRE(TwistScalar::v_power(-2, p) == TwistScalar::rational(Rat(1, 3), p));
    REQUIRE(TwistScalar::v_power(3, p) * TwistScalar::v_power(-3, p) ==
            TwistScalar::rational(Rat(1), p));
}
