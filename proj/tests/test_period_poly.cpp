#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wd/period_poly.hpp"
#include "wd/errors.hpp"

using namespace wd;

namespace {

std::vector<std::pair<Int, unsigned>> roots_of(std::uint64_t p, unsigned s, unsigned m,
                                               unsigned n2) {
    return factorize_reduced_period(p, s, m, n2).roots;
}

}  // namespace

TEST_CASE("order 1 and 2") {
    CHECK(roots_of(11, 1, 2, 1) ==
          std::vector<std::pair<Int, unsigned>>{{Int(0), 1}});
    CHECK(roots_of(11, 1, 2, 2) ==
          std::vector<std::pair<Int, unsigned>>{{Int(-11), 1}, {Int(11), 1}});
    // r = 5^6, sqrt(r) = 125
    CHECK(roots_of(5, 2, 3, 2) ==
          std::vector<std::pair<Int, unsigned>>{{Int(-125), 1}, {Int(125), 1}});
}

TEST_CASE("order 3, both residue classes") {
    // p = 1 (mod 3): roots {c t, -(c+9d)t/2, -(c-9d)t/2}, t = p^{k/3}
    CHECK(roots_of(7, 1, 3, 3) ==
          std::vector<std::pair<Int, unsigned>>{{Int(-35), 1}, {Int(7), 1}, {Int(28), 1}});
    // p = 2 (mod 3): two-root pattern with eps = (-1)^{k/2}
    CHECK(roots_of(5, 1, 2, 3) ==
          std::vector<std::pair<Int, unsigned>>{{Int(-5), 2}, {Int(10), 1}});
    CHECK(roots_of(5, 1, 4, 3) ==
          std::vector<std::pair<Int, unsigned>>{{Int(-50), 1}, {Int(25), 2}});
}

TEST_CASE("order 4, both residue classes") {
    auto quartic = roots_of(13, 1, 4, 4);
    Int sum = 0;
    unsigned mult = 0;
    for (auto& [xi, e] : quartic) {
        sum += xi * e;
        mult += e;
    }
    CHECK(mult == 4);
    CHECK(sum == 0);
    // p = 3 (mod 4), k = 2: {-(-1)^{k/2} 3 sqrt(r), ((-1)^{k/2} sqrt(r))^3}
    CHECK(roots_of(11, 1, 2, 4) ==
          std::vector<std::pair<Int, unsigned>>{{Int(-11), 3}, {Int(33), 1}});
}

TEST_CASE("order 5: quintic and semiprimitive patterns") {
    auto quintic = roots_of(11, 1, 5, 5);
    CHECK(quintic.size() == 5);
    Int sum = 0;
    for (auto& [xi, e] : quintic) {
        CHECK(e == 1);
        sum += xi;
        CHECK((xi - 1) % 5 == 0);
    }
    CHECK(sum == 0);

    // ord_5(7) = 4, k/ord odd flips the sign
    CHECK(roots_of(7, 2, 2, 5) ==
          std::vector<std::pair<Int, unsigned>>{{Int(-49), 4}, {Int(196), 1}});
    // ord_5(19) = 2, k/2 even
    CHECK(roots_of(19, 1, 4, 5) ==
          std::vector<std::pair<Int, unsigned>>{{Int(-1444), 1}, {Int(361), 4}});
}

TEST_CASE("orders 6, 8, 12 keep the structural invariants") {
    struct Tuple { std::uint64_t p; unsigned s, m, n2; };
    for (auto [p, s, m, n2] : {Tuple{7, 1, 6, 6}, {13, 1, 6, 6}, {5, 2, 3, 6},
                               {11, 1, 2, 6}, {17, 1, 8, 8}, {3, 1, 4, 8},
                               {5, 1, 8, 8}, {7, 1, 2, 8}, {13, 1, 12, 12},
                               {5, 1, 4, 12}, {7, 1, 6, 12}, {23, 1, 2, 12}}) {
        PeriodFactorization fact = factorize_reduced_period(p, s, m, n2);
        CHECK(fact.n2 == n2);
        fact.validate();  // multiplicities sum to N2, roots sum to 0
        for (auto& [xi, e] : fact.roots) CHECK((xi - 1) % n2 == 0);
    }
    CHECK(roots_of(11, 1, 2, 6) ==
          std::vector<std::pair<Int, unsigned>>{{Int(-11), 5}, {Int(55), 1}});
}

TEST_CASE("error contract") {
    CHECK_THROWS_AS(factorize_reduced_period(7, 1, 2, 7), UnsupportedOrder);
    CHECK_THROWS_AS(factorize_reduced_period(7, 1, 2, 9), UnsupportedOrder);
    // (7^2-1)/6 = 8 is not divisible by 3
    CHECK_THROWS_AS(factorize_reduced_period(7, 1, 2, 3), HypothesisViolated);
    CHECK_THROWS_AS(factorize_reduced_period(2, 1, 3, 2), HypothesisViolated);
    CHECK_THROWS_AS(semiprimitive_factorization(7, 4, 5, 1), HypothesisViolated);
}

TEST_CASE("closed forms match the definition on a small grid") {
    struct Tuple { std::uint64_t p; unsigned s, m, n2; };
    for (auto [p, s, m, n2] :
         {Tuple{11, 1, 2, 2}, {7, 1, 3, 3},  {5, 1, 2, 3},  {13, 1, 4, 4},
          Tuple{11, 1, 2, 4}, {11, 1, 5, 5}, {19, 1, 2, 5}, {7, 1, 6, 6},
          Tuple{11, 1, 2, 6}, {3, 1, 4, 8},  {5, 1, 8, 8},  {7, 1, 2, 8},
          Tuple{5, 1, 4, 12}, {7, 1, 6, 12}, {23, 1, 2, 12}, {5, 2, 3, 6}}) {
        FieldContext ctx = build_field(p, s * m);
        PeriodFactorization closed = factorize_reduced_period(p, s, m, n2);
        PeriodFactorization direct = reduced_period_polynomial_direct(ctx, n2);
        CHECK(closed == direct);
    }
}
