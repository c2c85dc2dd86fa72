#include "wd/ints.hpp"

namespace wd {

Int ipow(Int base, unsigned exp) {
    Int result = 1;
    while (exp) {
        if (exp & 1u) result *= base;
        base *= base;
        exp >>= 1u;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
        if (n == d) return true;
        if (n % d == 0) return false;
    }
    for (std::uint64_t d = 11; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> factors;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            factors.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) factors.push_back(n);
    return factors;
}

Int isqrt_floor(const Int& n) {
    return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const Int& n, Int& root) {
    if (n < 0) return false;
    root = isqrt_floor(n);
    return root * root == n;
}

unsigned multiplicative_order(const Int& q, const Int& n, unsigned limit) {
    if (n <= 1) return 1;
    Int acc = q % n;
    for (unsigned i = 1; i <= limit; ++i) {
        if (acc == 1) return i;
        acc = acc * q % n;
    }
    return 0;
}

unsigned adic_valuation(Int w, const Int& q) {
    unsigned v = 0;
    while (w != 0 && w % q == 0) {
        w /= q;
        ++v;
    }
    return v;
}

}  // namespace wd
