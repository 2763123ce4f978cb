#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "crystals/crystal_graph.hpp"
#include "crystals/decomposition.hpp"
#include "crystals/monomial.hpp"

using namespace crystals;

namespace {

Monomial mp(const char* text) { return parse_monomial(text); }

std::multiset<std::string> weight_texts(const std::vector<Weight>& ws) {
    std::multiset<std::string> out;
    for (const auto& w : ws) out.insert(to_string(w));
    return out;
}

bool in_sorted(const std::vector<Monomial>& set, const Monomial& m) {
    return std::binary_search(set.begin(), set.end(), m);
}

}  // namespace

TEST_CASE("binomial coefficients") {
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(4, 4) == 1);
    CHECK(binomial(4, 5) == 0);
}

TEST_CASE("fundamental crystal enumeration") {
    auto fig4 = fundamental_crystal(5, 2, 1);
    REQUIRE(fig4.size() == 15);
    const char* nodes[] = {
        "Y_2(1)",
        "Y_1(2)*Y_2(2)^-1*Y_3(1)",
        "Y_1(2)*Y_3(2)^-1*Y_4(1)",
        "Y_1(3)^-1*Y_3(1)",
        "Y_1(2)*Y_4(2)^-1*Y_5(1)",
        "Y_1(3)^-1*Y_2(2)*Y_3(2)^-1*Y_4(1)",
        "Y_1(2)*Y_5(2)^-1",
        "Y_1(3)^-1*Y_2(2)*Y_4(2)^-1*Y_5(1)",
        "Y_2(3)^-1*Y_4(1)",
        "Y_1(3)^-1*Y_2(2)*Y_5(2)^-1",
        "Y_2(3)^-1*Y_3(2)*Y_4(2)^-1*Y_5(1)",
        "Y_2(3)^-1*Y_3(2)*Y_5(2)^-1",
        "Y_3(3)^-1*Y_5(1)",
        "Y_3(3)^-1*Y_4(2)*Y_5(2)^-1",
        "Y_4(3)^-1",
    };
    std::vector<Monomial> want;
    for (const char* s : nodes) want.push_back(mp(s));
    std::sort(want.begin(), want.end());
    CHECK(fig4 == want);

    auto a1 = fundamental_crystal(1, 1, 0);
    REQUIRE(a1.size() == 2);
    CHECK(in_sorted(a1, Monomial::y(1, 0)));
    CHECK(in_sorted(a1, Monomial::y(1, 1, -1)));

    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k)
            for (int N = -2; N <= 3; ++N)
                CHECK(static_cast<long long>(fundamental_crystal(n, k, N).size()) ==
                      binomial(n + 1, k));

    CHECK_THROWS_AS(fundamental_crystal(5, 0, 1), std::out_of_range);
    CHECK_THROWS_AS(fundamental_crystal(5, 6, 1), std::out_of_range);
}

TEST_CASE("enumeration matches closure generation") {
    for (int n = 1; n <= 6; ++n) {
        MonomialOps ops{Convention(RankedCartan(n))};
        for (int k = 1; k <= n; ++k) {
            auto enumerated = fundamental_crystal(n, k, 1);
            auto generated = generate_component(Monomial::y(k, 1), ops).nodes;
            CHECK(enumerated == generated);  // both sorted
        }
    }
}

TEST_CASE("membership decision procedure") {
    CHECK(is_fundamental_member(5, mp("Y_4(1)*Y_3(2)^-1*Y_1(2)"), 2, 1));
    CHECK(is_fundamental_member(5, Monomial::y(2, 1), 2, 1));
    CHECK_FALSE(is_fundamental_member(5, Monomial::y(2, 2), 2, 1));
    CHECK_FALSE(is_fundamental_member(5, mp("Y_2(1)^2"), 2, 1));

    // exhaustive agreement with the enumeration, including perturbed inputs
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k)
            for (int N = 0; N <= 1; ++N) {
                auto members = fundamental_crystal(n, k, N);
                std::vector<Monomial> candidates = members;
                for (const auto& m : members) {
                    candidates.push_back(m * m);
                    candidates.push_back(m.inverse());
                    candidates.push_back(m * Monomial::y(1, 5));
                    candidates.push_back(m * Monomial::y(k, N + 3));
                }
                // elements from neighbouring parameters are (mostly) outsiders
                for (int k2 = 1; k2 <= n; ++k2)
                    for (const auto& m : fundamental_crystal(n, k2, N + 1))
                        candidates.push_back(m);
                for (const auto& m : candidates) {
                    CAPTURE(n);
                    CAPTURE(k);
                    CAPTURE(N);
                    CAPTURE(to_string(m));
                    CHECK(is_fundamental_member(n, m, k, N) ==
                          in_sorted(members, m));
                }
            }
}

TEST_CASE("product sets") {
    auto b2 = fundamental_crystal(5, 2, 1);
    auto sq = product_set(b2, b2);
    CHECK(sq.pair_count == 225);
    CHECK(sq.elements.size() == 105);
    CHECK(std::is_sorted(sq.elements.begin(), sq.elements.end()));
    CHECK(std::adjacent_find(sq.elements.begin(), sq.elements.end()) ==
          sq.elements.end());

    auto unit = product_set(b2, {Monomial()});
    CHECK(unit.elements == b2);
    CHECK(unit.pair_count == 15);

    auto b5 = fundamental_crystal(5, 5, 1);
    auto mixed = product_set(b5, b2);
    CHECK(static_cast<long long>(mixed.elements.size()) <= mixed.pair_count);
}

TEST_CASE("iterated products") {
    CHECK(multi_product({5, {{2, 1}}}) == fundamental_crystal(5, 2, 1));
    auto two = multi_product({5, {{5, 1}, {2, 1}}});
    CHECK(two ==
          product_set(fundamental_crystal(5, 5, 1), fundamental_crystal(5, 2, 1))
              .elements);
    // triple products stay closed under the crystal operators
    auto triple = multi_product({2, {{1, 1}, {1, 1}, {1, 1}}});
    MonomialOps ops{Convention(RankedCartan(2))};
    CHECK_NOTHROW(decompose(triple, ops));
    CHECK_THROWS_AS(multi_product({5, {}}), std::invalid_argument);
    CHECK_THROWS_AS(multi_product({5, {{6, 1}}}), std::out_of_range);
}

TEST_CASE("predicted tensor decompositions") {
    CHECK(weight_texts(predicted_tensor_decomposition(5, 5, 2)) ==
          std::multiset<std::string>{"L1", "L2+L5"});
    CHECK(weight_texts(predicted_tensor_decomposition(5, 2, 2)) ==
          std::multiset<std::string>{"2*L2", "L1+L3", "L4"});
    CHECK(weight_texts(predicted_tensor_decomposition(1, 1, 1)) ==
          std::multiset<std::string>{"2*L1", "0"});
    // dimensions add up against the tableau oracle
    for (int n = 1; n <= 5; ++n)
        for (int p = 1; p <= n; ++p)
            for (int q = 1; q <= n; ++q) {
                long long total = 0;
                for (const auto& w : predicted_tensor_decomposition(n, p, q))
                    total += ssyt_count(n, w);
                CHECK(total == binomial(n + 1, p) * binomial(n + 1, q));
            }
}

TEST_CASE("predicted product decompositions") {
    CHECK(weight_texts(predicted_product_decomposition(5, 5, 2, 1)) ==
          std::multiset<std::string>{"L2+L5"});
    CHECK(weight_texts(predicted_product_decomposition(5, 5, 2, 2)) ==
          std::multiset<std::string>{"L1", "L2+L5"});
    CHECK(weight_texts(predicted_product_decomposition(5, 2, 2, 1)) ==
          std::multiset<std::string>{"2*L2"});
    CHECK(weight_texts(predicted_product_decomposition(5, 2, 2, 3)) ==
          std::multiset<std::string>{"2*L2", "L1+L3", "L4"});
    CHECK(weight_texts(predicted_product_decomposition(5, 2, 5, 2)) ==
          std::multiset<std::string>{"L2+L5"});
    CHECK(weight_texts(predicted_product_decomposition(5, 2, 5, 5)) ==
          std::multiset<std::string>{"L1", "L2+L5"});
    CHECK_THROWS_AS(predicted_product_decomposition(5, 2, 2, 0),
                    std::invalid_argument);
    // the first term is always L_p + L_q
    for (int n = 1; n <= 4; ++n)
        for (int p = 1; p <= n; ++p)
            for (int q = 1; q <= n; ++q)
                for (int m = 1; m <= n + 2; ++m) {
                    auto pred = predicted_product_decomposition(n, p, q, m);
                    Weight top = Weight::fundamental(n, p) +
                                 Weight::fundamental(n, q);
                    CHECK(std::count(pred.begin(), pred.end(), top) >= 1);
                }
}

TEST_CASE("closed-form weight representatives") {
    CHECK(weight_monomials_in_fundamental(5, 2, Weight::fundamental(5, 2), 5) ==
          Monomial::y(2, 1));
    Weight w4 = Weight::fundamental(5, 4) - Weight::fundamental(5, 2);
    CHECK(weight_monomials_in_fundamental(5, 2, w4, 2) ==
          mp("Y_4(1)*Y_2(3)^-1"));
    Weight w2 = Weight::fundamental(5, 3) + Weight::fundamental(5, 1) -
                Weight::fundamental(5, 2);
    CHECK(weight_monomials_in_fundamental(5, 2, w2, 2) ==
          mp("Y_1(2)*Y_3(1)*Y_2(2)^-1"));
    Weight w3 = Weight::fundamental(5, 1) - Weight::fundamental(5, 5);
    CHECK(weight_monomials_in_fundamental(5, 2, w3, 5) ==
          mp("Y_1(2)*Y_5(2)^-1"));
    Weight w3z = -Weight::fundamental(5, 4);  // terminal with zero index
    CHECK(weight_monomials_in_fundamental(5, 2, w3z, 4) ==
          mp("Y_4(3)^-1"));
    CHECK_THROWS_AS(
        weight_monomials_in_fundamental(
            5, 2, Weight::fundamental(5, 1) + Weight::fundamental(5, 1), 5),
        UnsupportedWeightError);
}

TEST_CASE("each component weight appears once in the second factor") {
    for (int n = 1; n <= 6; ++n)
        for (int q = 1; q <= n; ++q) {
            auto members = fundamental_crystal(n, q, 1);
            RankedCartan cartan(n);
            std::map<Weight, int> by_weight_count;
            std::map<Weight, Monomial> by_weight;
            for (const auto& m : members) {
                Weight w = weight(cartan, m);
                ++by_weight_count[w];
                by_weight.emplace(w, m);
            }
            for (int p = 1; p <= n; ++p) {
                Weight lp = Weight::fundamental(n, p);
                for (int m_shift = 1; m_shift <= n + 2; ++m_shift)
                    for (const auto& w :
                         predicted_product_decomposition(n, p, q, m_shift)) {
                        Weight target = w - lp;
                        Monomial rep =
                            weight_monomials_in_fundamental(n, q, target, p);
                        CAPTURE(n);
                        CAPTURE(p);
                        CAPTURE(q);
                        CHECK(in_sorted(members, rep));
                        CHECK(weight(cartan, rep) == target);
                        CHECK(by_weight_count[target] == 1);
                        CHECK(by_weight.at(target) == rep);
                    }
            }
        }
}

TEST_CASE("highest pair classification") {
    auto single = classify_highest_pairs(5, 5, 2, 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0].first == Monomial::y(5, 1));
    CHECK(single[0].second == Monomial::y(2, 1));

    auto three = classify_highest_pairs(5, 2, 2, 3);
    REQUIRE(three.size() == 3);
    std::multiset<std::string> seconds;
    for (const auto& [a, b] : three) {
        CHECK(a == Monomial::y(2, 3));
        seconds.insert(to_string(b));
    }
    CHECK(seconds == std::multiset<std::string>{"Y_2(1)",
                                                "Y_1(2)*Y_2(2)^-1*Y_3(1)",
                                                "Y_2(3)^-1*Y_4(1)"});
    Convention conv{RankedCartan(5)};
    for (const auto& [a, b] : three) CHECK(is_highest(conv, a * b));
}

TEST_CASE("tableau counting oracle") {
    CHECK(ssyt_count(5, Weight::fundamental(5, 2)) == 15);
    CHECK(ssyt_count(5, Weight::fundamental(5, 2) + Weight::fundamental(5, 2)) ==
          105);
    CHECK(ssyt_count(5, Weight::fundamental(5, 5) + Weight::fundamental(5, 2)) ==
          84);
    for (int n = 1; n <= 6; ++n)
        CHECK(ssyt_count(n, Weight::fundamental(n, 1)) == n + 1);
    CHECK(ssyt_count(4, Weight(4)) == 1);
    // columns of height k with entries <= n+1
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(ssyt_count(n, Weight::fundamental(n, k)) == binomial(n + 1, k));
    RankedCartan c3(3);
    CHECK_THROWS_AS(ssyt_count(3, simple_root(c3, 1)), std::invalid_argument);
    CHECK_THROWS_AS(ssyt_count(5, Weight(3)), std::invalid_argument);
}

TEST_CASE("verification driver on the worked cases") {
    auto r1 = verify_case(5, 5, 2, 1);
    CHECK(r1.match);
    CHECK(r1.all_good());
    CHECK(weight_texts(r1.computed) == std::multiset<std::string>{"L2+L5"});
    CHECK(r1.universe_size == 84);
    CHECK(r1.tensor_size == 90);
    REQUIRE(r1.components.size() == 1);
    CHECK(r1.components[0].size == 84);
    REQUIRE(r1.highest_pairs.size() == 1);
    CHECK(r1.highest_pairs[0].first == Monomial::y(5, 1));

    auto r2 = verify_case(5, 2, 2, 3, true);
    CHECK(r2.all_good());
    CHECK(weight_texts(r2.computed) ==
          std::multiset<std::string>{"2*L2", "L1+L3", "L4"});
    CHECK(r2.universe_size == 225);
    std::multiset<std::size_t> sizes;
    for (const auto& c : r2.components) sizes.insert(c.size);
    CHECK(sizes == std::multiset<std::size_t>{15, 105, 105});

    auto r3 = verify_case(5, 5, 2, 2, true);
    CHECK(r3.all_good());
    CHECK(r3.universe_size == 90);
    std::multiset<std::size_t> sizes3;
    for (const auto& c : r3.components) sizes3.insert(c.size);
    CHECK(sizes3 == std::multiset<std::size_t>{6, 84});

    auto tiny = verify_case(1, 1, 1, 1);
    CHECK(tiny.all_good());
    CHECK(tiny.universe_size == 3);
    auto tiny2 = verify_case(1, 1, 1, 2, true);
    CHECK(tiny2.all_good());
    CHECK(tiny2.universe_size == 4);
    CHECK(weight_texts(tiny2.computed) ==
          std::multiset<std::string>{"2*L1", "0"});

    CHECK_THROWS_AS(verify_case(5, 2, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(verify_case(5, 2, 2, -1), std::invalid_argument);
}
