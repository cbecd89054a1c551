#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "cmlat/lattice.hpp"

using namespace cmlat;

TEST_CASE("inner product is minus the dot product") {
    CHECK(inner_product(LatticeVector{1, 0}, LatticeVector{1, 0}) == -1);
    CHECK(inner_product(LatticeVector{1, 2}, LatticeVector{1, 2}) == -5);
    CHECK(inner_product(LatticeVector{2, -1}, LatticeVector{1, 2}) == 0);
    CHECK_THROWS_AS(inner_product(LatticeVector{1}, LatticeVector{1, 2}), std::invalid_argument);
}

TEST_CASE("characteristic covectors have all coordinates odd") {
    CHECK(is_characteristic(LatticeVector{1, -1, 3}));
    CHECK_FALSE(is_characteristic(LatticeVector{1, 0}));
    CHECK(is_characteristic(LatticeVector{-1, -1, -1, -1}));
    CHECK_THROWS_AS(CharCovector({1, 2}), std::invalid_argument);
}

TEST_CASE("continued fraction expansion") {
    CHECK(hj_expand(5, 4).weights() == std::vector<Int>{2, 2, 2, 2});
    CHECK(hj_expand(5, 1).weights() == std::vector<Int>{5});
    CHECK(hj_expand(7, 3).weights() == std::vector<Int>{3, 2, 2});
    CHECK_THROWS_AS(hj_expand(6, 3), std::invalid_argument);
    CHECK_THROWS_AS(hj_expand(3, 3), std::invalid_argument);
}

TEST_CASE("continued fraction evaluation") {
    CHECK(hj_evaluate(LinearLattice({5})) == Fraction{5, 1});
    CHECK(hj_evaluate(LinearLattice({2, 2, 2, 2})) == Fraction{5, 4});
    CHECK(hj_evaluate(LinearLattice({4, 2})) == Fraction{7, 2});
}

TEST_CASE("expansion and evaluation are mutually inverse up to 500") {
    for (Int p = 2; p <= 500; ++p)
        for (Int q = 1; q < p; ++q) {
            if (gcd_int(p, q) != 1) continue;
            CHECK(hj_evaluate(hj_expand(p, q)) == Fraction{p, q});
        }
}

TEST_CASE("inverse residue reverses the weight chain") {
    for (Int p = 2; p <= 200; ++p)
        for (Int q = 1; q < p; ++q) {
            if (gcd_int(p, q) != 1) continue;
            Int qi = 1;
            while ((q * qi) % p != 1) ++qi;
            auto w = hj_expand(p, q).weights();
            auto wi = hj_expand(p, qi).weights();
            std::reverse(wi.begin(), wi.end());
            REQUIRE(w == wi);
        }
}

TEST_CASE("complement basis canonical form") {
    SUBCASE("(1,2)") {
        auto b = complement_basis(LatticeVector{1, 2});
        REQUIRE(b.size() == 1);
        CHECK(b[0] == LatticeVector{2, -1});
        CHECK(gram(b).entries == std::vector<std::vector<Int>>{{-5}});
    }
    SUBCASE("(1,1)") {
        auto b = complement_basis(LatticeVector{1, 1});
        REQUIRE(b.size() == 1);
        CHECK(b[0] == LatticeVector{1, -1});
        CHECK(gram(b).entries == std::vector<std::vector<Int>>{{-2}});
    }
    SUBCASE("(1,2,4)") {
        auto b = complement_basis(LatticeVector{1, 2, 4});
        REQUIRE(b.size() == 2);
        CHECK(b[0] == LatticeVector{2, -1, 0});
        CHECK(b[1] == LatticeVector{0, 2, -1});
        CHECK(gram(b).entries == std::vector<std::vector<Int>>{{-5, 2}, {2, -5}});
    }
    SUBCASE("zero vector is rejected") {
        CHECK_THROWS_AS(complement_basis(LatticeVector{0, 0}), std::invalid_argument);
    }
}

TEST_CASE("gram matrices") {
    CHECK(gram({LatticeVector{1, 0}, LatticeVector{0, 1}}).entries ==
          std::vector<std::vector<Int>>{{-1, 0}, {0, -1}});
    CHECK(gram({LatticeVector{2, -1, 0}, LatticeVector{0, 2, -1}}).entries ==
          std::vector<std::vector<Int>>{{-5, 2}, {2, -5}});
    CHECK(gram({LatticeVector{2, -1}}).entries == std::vector<std::vector<Int>>{{-5}});
}

TEST_CASE("gram determinant (Bareiss)") {
    CHECK(GramMatrix(std::vector<std::vector<Int>>{{-5}}).det() == -5);
    CHECK(GramMatrix({{-5, 2}, {2, -5}}).det() == 21);
    CHECK(GramMatrix({{0, 1}, {1, 0}}).det() == -1);
    CHECK(GramMatrix({{1, 1}, {1, 1}}).det() == 0);
    CHECK(GramMatrix(std::vector<std::vector<Int>>{}).det() == 1);
}

TEST_CASE("vectors of a given norm") {
    SUBCASE("single generator of norm 2") {
        std::vector<LatticeVector> basis{LatticeVector{1, -1}};
        auto v = vectors_of_norm(basis, 2);
        REQUIRE(v.size() == 2);
        CHECK(v[0] == LatticeVector{-1, 1});
        CHECK(v[1] == LatticeVector{1, -1});
        CHECK(vectors_of_norm(basis, 1).empty());
    }
    SUBCASE("gram [[-5,2],[2,-5]] has exactly four norm-5 vectors") {
        std::vector<LatticeVector> basis{LatticeVector{2, -1, 0}, LatticeVector{0, 2, -1}};
        auto v = vectors_of_norm(basis, 5);
        REQUIRE(v.size() == 4);
        for (const auto& x : v) CHECK(inner_product(x, x) == -5);
        // oracle: brute-force box search over coefficients
        std::size_t count = 0;
        for (Int a = -5; a <= 5; ++a)
            for (Int b = -5; b <= 5; ++b)
                if (5 * a * a - 4 * a * b + 5 * b * b == 5) ++count;
        CHECK(count == v.size());
    }
    SUBCASE("norm 2 in a unimodular rank-1 lattice is empty") {
        CHECK(vectors_of_norm({LatticeVector{1}}, 2).empty());
    }
    SUBCASE("dependent basis is rejected") {
        CHECK_THROWS_AS(
            vectors_of_norm({LatticeVector{1, 0}, LatticeVector{2, 0}}, 1),
            std::invalid_argument);
    }
    SUBCASE("agrees with brute force on a rank-3 complement") {
        auto basis = complement_basis(LatticeVector{1, 1, 2, 3});
        REQUIRE(basis.size() == 3);
        for (Int m = 1; m <= 12; ++m) {
            auto fast = vectors_of_norm(basis, m);
            std::vector<LatticeVector> brute;
            for (Int a = -8; a <= 8; ++a)
                for (Int b = -8; b <= 8; ++b)
                    for (Int c = -8; c <= 8; ++c) {
                        std::vector<Int> v(4, 0);
                        for (std::size_t d = 0; d < 4; ++d)
                            v[d] = a * basis[0][d] + b * basis[1][d] + c * basis[2][d];
                        LatticeVector lv(v);
                        if (inner_product(lv, lv) == -m) brute.push_back(lv);
                    }
            std::sort(brute.begin(), brute.end());
            REQUIRE(fast == brute);
        }
    }
}

TEST_CASE("isometry with a linear lattice") {
    SUBCASE("norm-5 generator matches the single-vertex chain") {
        auto w = is_isometric_to_linear({LatticeVector{2, -1}}, LinearLattice({5}));
        REQUIRE(w.has_value());
        REQUIRE(w->size() == 1);
        CHECK(inner_product((*w)[0], (*w)[0]) == -5);
    }
    SUBCASE("the -5/-5 checkerboard is not a chain of determinant 21") {
        std::vector<LatticeVector> basis{LatticeVector{2, -1, 0}, LatticeVector{0, 2, -1}};
        CHECK_FALSE(is_isometric_to_linear(basis, LinearLattice({2, 11})).has_value());
        CHECK_FALSE(is_isometric_to_linear(basis, LinearLattice({11, 2})).has_value());
    }
    SUBCASE("complement of the all-ones vector is the all-2 chain") {
        auto basis = complement_basis(LatticeVector{1, 1, 1, 1, 1});
        auto w = is_isometric_to_linear(basis, LinearLattice({2, 2, 2, 2}));
        REQUIRE(w.has_value());
        CHECK(gram(*w) == LinearLattice({2, 2, 2, 2}).gram());
    }
    SUBCASE("rank mismatch throws") {
        CHECK_THROWS_AS(
            is_isometric_to_linear({LatticeVector{2, -1}}, LinearLattice({2, 2})),
            std::invalid_argument);
    }
    SUBCASE("verdict and witness are basis-order invariant") {
        std::mt19937 rng(20240817);
        auto basis = complement_basis(LatticeVector{1, 1, 1, 2, 3});
        LinearLattice target = hj_expand(16, 7);  // rank-4 chain of determinant 16
        REQUIRE(target.rank() == basis.size());
        auto reference = is_isometric_to_linear(basis, target);
        auto ones_basis = complement_basis(LatticeVector{1, 1, 1, 1, 1});
        LinearLattice ones_target({2, 2, 2, 2});
        auto ones_reference = is_isometric_to_linear(ones_basis, ones_target);
        REQUIRE(ones_reference.has_value());
        for (int trial = 0; trial < 10; ++trial) {
            auto shuffled = basis;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            CHECK(is_isometric_to_linear(shuffled, target) == reference);
            auto ones_shuffled = ones_basis;
            std::shuffle(ones_shuffled.begin(), ones_shuffled.end(), rng);
            CHECK(is_isometric_to_linear(ones_shuffled, ones_target) == ones_reference);
        }
    }
}

TEST_CASE("complement pairs to zero and has determinant p") {
    // over primitive vectors; exercised at scan scale in test_realization
    for (Int x = 1; x <= 3; ++x)
        for (Int y = x; y <= 4; ++y)
            for (Int z = y; z <= 5; ++z) {
                LatticeVector sigma{x, y, z};
                if (gcd_int(gcd_int(x, y), z) != 1) continue;
                auto basis = complement_basis(sigma);
                REQUIRE(basis.size() == 2);
                for (const auto& v : basis) CHECK(inner_product(v, sigma) == 0);
                Int p = -inner_product(sigma, sigma);
                CHECK(checked_abs(gram(basis).det()) == p);
            }
}
