#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wd {

// All code parameters, weights and frequencies are exact integers; some of
// them (r, n, weights for k = 12 instances) exceed 64 bits in intermediate
// products, so the whole library computes in cpp_int.
using Int = boost::multiprecision::cpp_int;

Int ipow(Int base, unsigned exp);

bool is_prime(std::uint64_t n);

// Distinct prime factors, by trial division. Intended for n up to ~2^50.
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

// Floor square root with exactness flag.
Int isqrt_floor(const Int& n);
bool is_perfect_square(const Int& n, Int& root);

// Multiplicative order of q modulo n, capped: returns 0 if the order
// exceeds `limit`.
unsigned multiplicative_order(const Int& q, const Int& n, unsigned limit);

// q-adic valuation of w (w != 0).
unsigned adic_valuation(Int w, const Int& q);

}  // namespace wd
