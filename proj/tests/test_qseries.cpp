#include <random>

#include "doctest.h"

#include "nilzeta/qseries.hpp"

using namespace nilzeta;

namespace {

LaurentPoly poly_p(std::initializer_list<std::pair<int, long>> terms) {
    std::vector<LaurentPoly::Term> v;
    for (auto [e, c] : terms) v.push_back({{e, 0}, c});
    return LaurentPoly::from_terms(v);
}

}  // namespace

TEST_CASE("Gaussian binomials") {
    CHECK(gauss_binom(2, 1) == poly_p({{1, 1}, {0, 1}}));
    const LaurentPoly b42 = gauss_binom(4, 2);
    CHECK(b42 == poly_p({{4, 1}, {3, 1}, {2, 2}, {1, 1}, {0, 1}}));
    CHECK(b42.evaluate_int(2) == 35);
    for (int n = 0; n <= 6; ++n) {
        CHECK(gauss_binom(n, 0) == LaurentPoly(1));
        CHECK(gauss_binom(n, n) == LaurentPoly(1));
    }
    CHECK_THROWS(gauss_binom(3, 4));
}

TEST_CASE("Gaussian binomials in P^-1") {
    CHECK(gauss_binom_inv(2, 1) == poly_p({{0, 1}, {-1, 1}}));
    CHECK(gauss_binom_inv(4, 2) == gauss_binom(4, 2).shifted({-4, 0}));
    CHECK(gauss_binom_inv(3, 3) == LaurentPoly(1));
}

TEST_CASE("binomial symmetry and shift") {
    for (int a = 0; a <= 8; ++a)
        for (int b = 0; b <= a; ++b) {
            CHECK(gauss_binom(a, b) == gauss_binom(a, a - b));
            CHECK(gauss_binom_inv(a, b).shifted({b * (a - b), 0}) == gauss_binom(a, b));
        }
}

TEST_CASE("flag counts") {
    const LaurentPoly full = flag_count(3, {1, 2});
    CHECK(full == poly_p({{2, 1}, {1, 1}, {0, 1}}) * poly_p({{1, 1}, {0, 1}}));
    CHECK(full.evaluate_int(2) == 21);
    CHECK(flag_count(5, {}) == LaurentPoly(1));
    CHECK(flag_count(2, {1}, true) == poly_p({{0, 1}, {-1, 1}}));
}

TEST_CASE("igusa F, small cases") {
    CHECK(same_value(igusa_F(1, {}), FactoredRat(1)));
    const Monomial z{1, 1};
    const FactoredRat f2 = igusa_F(2, {z});
    CHECK(same_value(f2, FactoredRat(LaurentPoly(1) + LaurentPoly::monomial({0, 1}), {{1, 1, 1}})));
    CHECK(same_value(invert_vars(f2), FactoredRat(LaurentPoly::monomial({1, 0}, -1) * f2.num(), f2.den())));
    CHECK_THROWS_AS(igusa_F(3, {z}), std::invalid_argument);
    CHECK_THROWS_AS(igusa_F(2, {{1, 0}}), std::invalid_argument);
}

TEST_CASE("igusa F recursion agrees with subset summation") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> ep(0, 6), et(1, 4);
    for (int n = 1; n <= 6; ++n)
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<Monomial> zs;
            for (int k = 0; k + 1 < n; ++k) zs.push_back({ep(rng), et(rng)});
            CHECK(same_value(igusa_F(n, zs), igusa_F_by_subsets(n, zs)));
        }
}

TEST_CASE("igusa F functional equation") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> ep(0, 5), et(1, 3);
    for (int n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<Monomial> zs;
            for (int k = 0; k + 1 < n; ++k) zs.push_back({ep(rng), et(rng)});
            const FactoredRat f = igusa_F(n, zs);
            const int sign = (n - 1) % 2 == 0 ? 1 : -1;
            const FactoredRat rhs(LaurentPoly::monomial({n * (n - 1) / 2, 0}, sign) * f.num(), f.den());
            CHECK(same_value(invert_vars(f), rhs));
        }
}

TEST_CASE("partitions") {
    const Partition p = Partition::parse("1,3,2");
    CHECK(p.parts() == std::vector<int>{3, 2, 1});
    CHECK(p.size() == 6);
    CHECK(p.part(1) == 3);
    CHECK(p.part(4) == 0);
    CHECK(p.conjugate() == Partition({3, 2, 1}));
    CHECK(Partition({4, 1}).conjugate() == Partition({2, 1, 1, 1}));
    CHECK(Partition({2, 1}).contained_in(Partition({3, 1})));
    CHECK_FALSE(Partition({2, 2}).contained_in(Partition({3, 1})));
    CHECK(Partition::parse("") == Partition());
    CHECK(to_string(p) == "(3,2,1)");
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(0).size() == 1);
}

TEST_CASE("Hall polynomial values") {
    const LaurentPoly klein = hall_alpha(Partition({1, 1}), Partition({1}));
    CHECK(klein == poly_p({{1, 1}, {0, 1}}));
    CHECK(klein.evaluate_int(2) == 3);
    for (const auto& l : partitions_of(4)) CHECK(hall_alpha(l, l) == LaurentPoly(1));
    CHECK(hall_alpha(Partition({2}), Partition({1})) == LaurentPoly(1));
    CHECK_THROWS(hall_alpha(Partition({1}), Partition({2})));
}

TEST_CASE("Hall brute force") {
    CHECK(hall_alpha_brute(Partition({1, 1}), Partition({1}), 2) == 3);
    CHECK(hall_alpha_brute(Partition({2, 1}), Partition({1}), 2) == 3);
    CHECK(hall_alpha_brute(Partition({3}), Partition({3}), 2) == 1);
    CHECK_THROWS(hall_alpha_brute(Partition({4, 4}), Partition({1}), 2));
    CHECK_THROWS(hall_alpha_brute(Partition({2}), Partition({1}), 5));
}

TEST_CASE("Hall formula against brute force, |lambda| <= 5") {
    for (long p : {2L, 3L})
        for (int n = 0; n <= 5; ++n)
            for (const auto& lambda : partitions_of(n))
                for (int m = 0; m <= n; ++m)
                    for (const auto& mu : partitions_of(m))
                        if (mu.contained_in(lambda))
                            CHECK_MESSAGE(hall_alpha(lambda, mu).evaluate_int(p) == hall_alpha_brute(lambda, mu, p),
                                          to_string(lambda) << " / " << to_string(mu) << " p=" << p);
}
