#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wd/cyclotomy.hpp"
#include "wd/ints.hpp"

namespace wd {

/// Parameters of the irreducible cyclic code C(r, N) over GF(q), q = p^s,
/// r = q^m, with the dimension condition ord_n(q) = m verified up front.
struct CodeSpec {
    std::uint64_t p = 0;
    unsigned s = 0;
    unsigned m = 0;
    std::uint64_t N = 0;

    Int q;        // p^s
    Int r;        // q^m
    unsigned k;   // s*m, degree of GF(r) over GF(p)
    Int n;        // (r-1)/N, code length
    std::uint64_t n2;  // gcd(N, (r-1)/(q-1)), the effective order
};

CodeSpec code_params(std::uint64_t p, unsigned s, unsigned m, std::uint64_t N);

/// wt = (q-1)(r - xi)/(qN); exact, throws IntegralityFailure otherwise.
Int weight_from_root(const CodeSpec& spec, const Int& xi);

struct WeightDistribution {
    CodeSpec spec;
    std::vector<std::pair<Int, Int>> entries;  // (weight, frequency), ascending
    std::string method;                        // "closed" or "direct"

    Int min_distance() const { return entries.empty() ? Int(0) : entries.front().first; }

    /// Frequency sum = r-1; first moment = n*r*(q-1)/q; 0 < w <= n;
    /// at most N2 distinct weights. Throws IntegralityFailure on violation.
    void validate() const;

    bool same_entries(const WeightDistribution& other) const {
        return entries == other.entries;
    }
};

enum class Method { Closed, Direct, Auto };

/// Cap under which Method::Auto silently cross-checks the closed form
/// against the direct period computation.
inline constexpr std::uint64_t kAutoCrossCheckCap = 1ull << 22;

/// Distribution from a period factorization (shared by both paths).
WeightDistribution distribution_from_factorization(const CodeSpec& spec,
                                                   const PeriodFactorization& fact,
                                                   std::string method);

WeightDistribution weight_distribution(std::uint64_t p, unsigned s, unsigned m,
                                       std::uint64_t N, Method method = Method::Auto);

enum class Classification { OneWeight, MaxWeights, TwoWeightSemiPrimitive, Other };

std::string to_string(Classification c);

Classification classify(const CodeSpec& spec);

struct DivisibilityReport {
    unsigned expected = 0;  // m/N2 - 1
    std::vector<std::pair<Int, unsigned>> valuations;  // (weight, v_q(weight))
    bool all_match = false;
};

/// q-adic valuations of all weights; requires p = 1 (mod N2) and N2 | m.
DivisibilityReport divisibility_exponent(const CodeSpec& spec,
                                         const WeightDistribution& dist);

}  // namespace wd
