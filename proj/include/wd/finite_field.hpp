#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "wd/errors.hpp"
#include "wd/ints.hpp"

namespace wd {

/// A field element of GF(p^k) as a coefficient vector (degree < k) over
/// GF(p), least significant coefficient first.
using Elt = std::vector<std::uint32_t>;

/// Exact arithmetic in GF(p^k) with a fixed primitive element alpha.
///
/// Construction is deterministic: the modulus is the first irreducible
/// monic polynomial in ascending base-p coefficient order, and alpha is
/// the element with the smallest packed code whose multiplicative order
/// is exactly r-1. Immutable after construction.
class FieldContext {
public:
    static constexpr std::uint64_t kDefaultTableCap = 1ull << 27;

    static FieldContext build(std::uint64_t p, unsigned k,
                              std::uint64_t table_cap = kDefaultTableCap);

    std::uint64_t p() const { return p_; }
    unsigned k() const { return k_; }
    std::uint64_t order_u64() const { return r_; }
    Int r() const { return Int(r_); }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    const Elt& alpha() const { return alpha_; }

    Elt zero() const { return Elt(k_, 0); }
    Elt one() const;
    Elt from_int(std::uint64_t v) const;  // canonical prime-subfield embedding

    bool is_zero(const Elt& x) const;
    Elt add(const Elt& a, const Elt& b) const;
    Elt sub(const Elt& a, const Elt& b) const;
    Elt mul(const Elt& a, const Elt& b) const;
    Elt pow(const Elt& a, Int e) const;  // e may be negative for units
    Elt inv(const Elt& a) const;
    Elt frobenius(const Elt& x, unsigned d) const;  // x -> x^{p^d}

    std::uint64_t pack(const Elt& x) const;  // base-p code, total order on elements
    Elt unpack(std::uint64_t code) const;

    /// Trace onto the subfield GF(p^sub_degree); sub_degree must divide k.
    Elt trace(const Elt& x, unsigned sub_degree) const;

    /// The k x k matrix over GF(p) of x -> Tr_{r/p^sub_degree}(x), rows are
    /// output coordinates. Used for streaming trace evaluation.
    std::vector<std::vector<std::uint32_t>> trace_matrix(unsigned sub_degree) const;

    /// x must satisfy x^p = x; returns its integer representative in [0, p).
    std::uint64_t prime_subfield_integer(const Elt& x) const;

    bool in_prime_subfield(const Elt& x) const;

    /// Discrete log base alpha. Uses the log table when built, otherwise a
    /// multiplicative walk. x must be nonzero.
    std::uint64_t dlog(const Elt& x) const;

    /// Builds the element -> exponent table; CapExceeded if r exceeds the
    /// cap fixed at construction.
    void build_log_table();
    bool has_log_table() const { return !log_table_.empty(); }

private:
    FieldContext() = default;

    std::uint64_t p_ = 0;
    unsigned k_ = 0;
    std::uint64_t r_ = 0;
    std::uint64_t table_cap_ = 0;
    std::vector<std::uint32_t> modulus_;  // size k+1, monic
    Elt alpha_;
    std::unordered_map<std::uint64_t, std::uint64_t> log_table_;
};

/// Deterministic field construction per the documented total order.
FieldContext build_field(std::uint64_t p, unsigned k,
                         std::uint64_t table_cap = FieldContext::kDefaultTableCap);

}  // namespace wd
