#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wd/ints.hpp"

using namespace wd;

TEST_CASE("ipow") {
    CHECK(ipow(Int(2), 0) == 1);
    CHECK(ipow(Int(3), 5) == 243);
    CHECK(ipow(Int(13), 12) == Int("23298085122481"));
    CHECK(ipow(Int(-2), 3) == -8);
}

TEST_CASE("primality") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(23));
    CHECK(is_prime(1000003));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(91));   // 7 * 13
    CHECK_FALSE(is_prime(121));
}

TEST_CASE("distinct prime factors") {
    CHECK(distinct_prime_factors(1).empty());
    CHECK(distinct_prime_factors(12) == std::vector<std::uint64_t>{2, 3});
    // 5^8 - 1 = 2^5 * 3 * 13 * 313
    CHECK(distinct_prime_factors(390624) ==
          std::vector<std::uint64_t>{2, 3, 13, 313});
    CHECK(distinct_prime_factors(97) == std::vector<std::uint64_t>{97});
}

TEST_CASE("integer square roots") {
    CHECK(isqrt_floor(Int(0)) == 0);
    CHECK(isqrt_floor(Int(48)) == 6);
    CHECK(isqrt_floor(Int(49)) == 7);
    Int root;
    CHECK(is_perfect_square(Int(0), root));
    CHECK(root == 0);
    CHECK(is_perfect_square(Int("6975757441"), root));  // 17^8
    CHECK(root == 83521);
    CHECK_FALSE(is_perfect_square(Int(50), root));
    CHECK_FALSE(is_perfect_square(Int(-4), root));
}

TEST_CASE("multiplicative order") {
    CHECK(multiplicative_order(Int(2), Int(7), 10) == 3);
    CHECK(multiplicative_order(Int(3), Int(7), 10) == 6);
    CHECK(multiplicative_order(Int(2), Int(3), 10) == 2);
    CHECK(multiplicative_order(Int(10), Int(1), 10) == 1);  // trivial modulus
    CHECK(multiplicative_order(Int(3), Int(7), 5) == 0);    // exceeds the cap
    // ord_24(11) = 2, the m0 = m check for the [24,2] code over GF(11)
    CHECK(multiplicative_order(Int(11), Int(24), 8) == 2);
}

TEST_CASE("q-adic valuation") {
    CHECK(adic_valuation(Int(22), Int(11)) == 1);
    CHECK(adic_valuation(Int(2160), Int(13)) == 0);
    CHECK(adic_valuation(Int(121), Int(11)) == 2);
    CHECK(adic_valuation(Int(-242), Int(11)) == 2);  // -242 = -2 * 11^2
}
