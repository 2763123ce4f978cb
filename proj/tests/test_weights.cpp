#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "crystals/weights.hpp"

using namespace crystals;

TEST_CASE("ranked cartan basics") {
    RankedCartan c(5);
    CHECK(c.rank() == 5);
    CHECK(c.a(2, 2) == 2);
    CHECK(c.a(2, 3) == -1);
    CHECK(c.a(3, 2) == -1);
    CHECK(c.a(1, 3) == 0);
    CHECK_THROWS_AS(RankedCartan(0), std::invalid_argument);
    CHECK_THROWS_AS(RankedCartan(-4), std::invalid_argument);
    CHECK_THROWS_AS(c.a(0, 1), std::out_of_range);
    CHECK_THROWS_AS(c.a(1, 6), std::out_of_range);
}

TEST_CASE("pairing extracts fundamental-weight coordinates") {
    RankedCartan c(5);
    Weight l2 = Weight::fundamental(5, 2);
    CHECK(pairing(c, l2, 2) == 1);
    CHECK(pairing(c, l2, 3) == 0);
    CHECK(pairing(c, simple_root(c, 2), 2) == 2);
    CHECK_THROWS_AS(pairing(c, l2, 0), std::out_of_range);
    CHECK_THROWS_AS(pairing(c, l2, 6), std::out_of_range);
}

TEST_CASE("simple roots in the fundamental-weight basis") {
    RankedCartan c3(3);
    CHECK(simple_root(c3, 1).coeffs() == std::vector<int>{2, -1, 0});
    CHECK(simple_root(c3, 2).coeffs() == std::vector<int>{-1, 2, -1});
    RankedCartan c1(1);
    CHECK(simple_root(c1, 1).coeffs() == std::vector<int>{2});
    CHECK_THROWS_AS(simple_root(c3, 4), std::out_of_range);
}

TEST_CASE("dominance") {
    CHECK(is_dominant(Weight::fundamental(5, 2) + Weight::fundamental(5, 5)));
    RankedCartan c3(3);
    CHECK_FALSE(is_dominant(simple_root(c3, 1)));
    CHECK(is_dominant(Weight(4)));
}

TEST_CASE("standard-basis conversion") {
    RankedCartan c5(5);
    CHECK(from_epsilon_basis(c5, std::vector<int>{1, 1, 0, 0, 0, 0}) ==
          Weight::fundamental(5, 2));
    RankedCartan c2(2);
    CHECK(from_epsilon_basis(c2, std::vector<int>{1, 1, 1}).is_zero());
    RankedCartan c3(3);
    CHECK(from_epsilon_basis(c3, std::vector<int>{2, 1, 0, 0}) ==
          Weight::fundamental(3, 1) + Weight::fundamental(3, 2));
    CHECK_THROWS_AS(from_epsilon_basis(c3, std::vector<int>{1, 1}),
                    std::invalid_argument);
}

TEST_CASE("dual-basis and cartan identities across ranks") {
    for (int n = 1; n <= 6; ++n) {
        RankedCartan c(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                CHECK(pairing(c, Weight::fundamental(n, j), i) == (i == j ? 1 : 0));
                CHECK(pairing(c, simple_root(c, j), i) == c.a(i, j));
            }
        // prefix counts in the standard basis give fundamental weights
        for (int k = 1; k <= n; ++k) {
            std::vector<int> counts(n + 1, 0);
            for (int j = 0; j < k; ++j) counts[j] = 1;
            CHECK(from_epsilon_basis(c, counts) == Weight::fundamental(n, k));
        }
        CHECK(from_epsilon_basis(c, std::vector<int>(n + 1, 1)).is_zero());
    }
}

TEST_CASE("weight arithmetic") {
    Weight a = Weight::fundamental(5, 2);
    Weight b = Weight::fundamental(5, 5);
    Weight s = a + b;
    CHECK(s[2] == 1);
    CHECK(s[5] == 1);
    CHECK(s - b == a);
    CHECK((-a)[2] == -1);
    Weight z(5);
    CHECK(z.is_zero());
    CHECK(a + z == a);
    CHECK_THROWS_AS(a[0], std::out_of_range);
    CHECK_THROWS_AS(a[6], std::out_of_range);
    CHECK_THROWS_AS(Weight::fundamental(5, 0), std::out_of_range);
    CHECK_THROWS_AS(Weight(0), std::invalid_argument);
}

TEST_CASE("weight text form") {
    CHECK(to_string(Weight::fundamental(5, 2) + Weight::fundamental(5, 5)) ==
          "L2+L5");
    CHECK(to_string(Weight::fundamental(5, 2) + Weight::fundamental(5, 2)) ==
          "2*L2");
    CHECK(to_string(-Weight::fundamental(5, 2)) == "-L2");
    Weight m2l3 = -(Weight::fundamental(5, 3) + Weight::fundamental(5, 3));
    CHECK(to_string(m2l3) == "-2*L3");
    CHECK(to_string(Weight(3)) == "0");
    CHECK(to_string(Weight::fundamental(5, 1) + m2l3) == "L1-2*L3");
    RankedCartan c3(3);
    CHECK(to_string(simple_root(c3, 2)) == "-L1+2*L2-L3");
}
