#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wd/weights.hpp"

namespace wd {

/// Definition-level brute force: weights are reconstructed by counting
/// trace zeros along cyclotomic cosets in one multiplicative sweep, with
/// no input from the closed-form machinery.
WeightDistribution oracle_weight_distribution(std::uint64_t p, unsigned s, unsigned m,
                                              std::uint64_t N,
                                              std::uint64_t cap = kEnumerationCap);

/// zeros[i] = #{j = 0..r-2 : j = i (mod L), Tr_{r/q}(alpha^j) = 0}.
/// One sweep serves every N dividing L, which is how the sweep harness
/// amortizes the oracle across N values for a fixed field.
std::vector<std::uint64_t> trace_zero_profile(const FieldContext& ctx, unsigned s,
                                              std::uint64_t L);

/// Oracle distribution assembled from a precomputed profile (L must be a
/// multiple of N).
WeightDistribution oracle_from_profile(const CodeSpec& spec,
                                       const std::vector<std::uint64_t>& zeros);

struct VerificationReport {
    CodeSpec spec;
    WeightDistribution closed;
    WeightDistribution oracle;
    bool match = false;
    std::string detail;         // per-weight diff when match is false
    double closed_seconds = 0;
    double oracle_seconds = 0;
};

VerificationReport verify(std::uint64_t p, unsigned s, unsigned m, std::uint64_t N,
                          std::uint64_t cap = kEnumerationCap);

struct SweepGrid {
    std::vector<std::uint64_t> primes;
    std::vector<unsigned> s_values;
    unsigned m_max = 8;
    std::uint64_t n_max = 12;
    std::uint64_t r_max = 1000000;
    std::vector<std::uint64_t> n_list;  // when non-empty, overrides 1..n_max
};

enum class SweepStatus { Pass, Fail, Skip };

struct SweepRecord {
    std::uint64_t p = 0;
    unsigned s = 0;
    unsigned m = 0;
    std::uint64_t N = 0;
    SweepStatus status = SweepStatus::Skip;
    std::string reason;
};

struct SweepResult {
    std::vector<SweepRecord> records;  // deterministic order, independent of jobs
    unsigned passed = 0;
    unsigned failed = 0;
    unsigned skipped = 0;
};

/// Closed-vs-oracle comparison over the whole grid. One trace-zero profile
/// per field, shared by all admissible N. `jobs` bounds worker threads;
/// the record order does not depend on it.
SweepResult sweep(const SweepGrid& grid, std::uint64_t cap = kEnumerationCap,
                  unsigned jobs = 1);

}  // namespace wd
