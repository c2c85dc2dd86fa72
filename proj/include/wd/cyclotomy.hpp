#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wd/finite_field.hpp"
#include "wd/ints.hpp"

namespace wd {

inline constexpr std::uint64_t kEnumerationCap = 1ull << 27;

/// counts[i][t] = #{x in the i-th cyclotomic class of order N : Tr_{r/p}(x) = t}.
/// All period arithmetic reduces to these integer counts; no complex roots of
/// unity ever appear.
struct TraceClassTable {
    std::uint64_t N = 0;
    std::uint64_t p = 0;
    std::vector<std::vector<Int>> counts;  // N rows, p columns
};

/// The multiset of integer roots of the reduced period polynomial, sorted
/// ascending with merged multiplicities.
struct PeriodFactorization {
    unsigned n2 = 0;
    std::vector<std::pair<Int, unsigned>> roots;

    /// Checks sum of multiplicities = N2 and root sum = 0; throws on failure.
    void validate() const;

    /// Canonical form: sort ascending by root, merge equal roots.
    void normalize();

    bool operator==(const PeriodFactorization&) const = default;
};

/// One full multiplicative sweep x = alpha^j, binned by (j mod N, trace value).
TraceClassTable trace_class_table(const FieldContext& ctx, std::uint64_t N,
                                  std::uint64_t cap = kEnumerationCap);

/// The integer Gauss period eta_i: requires the off-zero counts of row i to be
/// uniform, which is what makes the period rational.
Int gauss_period(const TraceClassTable& table, std::uint64_t i);

/// Ground-truth factorization {1 + N2*eta_i}, computed from the definition.
PeriodFactorization reduced_period_polynomial_direct(const FieldContext& ctx, unsigned n2,
                                                     std::uint64_t cap = kEnumerationCap);

}  // namespace wd
