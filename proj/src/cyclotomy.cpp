#include "wd/cyclotomy.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "wd/errors.hpp"

namespace wd {

void PeriodFactorization::normalize() {
    std::map<Int, unsigned> merged;
    for (const auto& [xi, e] : roots) merged[xi] += e;
    roots.assign(merged.begin(), merged.end());
}

void PeriodFactorization::validate() const {
    unsigned total = 0;
    Int weighted_sum = 0;
    for (const auto& [xi, e] : roots) {
        total += e;
        weighted_sum += xi * e;
    }
    if (total != n2)
        throw IntegralityFailure("multiplicities sum to " + std::to_string(total) +
                                 ", expected N2 = " + std::to_string(n2));
    if (weighted_sum != 0)
        throw IntegralityFailure("root sum " + weighted_sum.str() + " is nonzero");
}

TraceClassTable trace_class_table(const FieldContext& ctx, std::uint64_t N,
                                  std::uint64_t cap) {
    const std::uint64_t r = ctx.order_u64();
    if (r > cap)
        throw CapExceeded("trace class table for r = " + std::to_string(r) +
                          " exceeds cap " + std::to_string(cap));
    if (N == 0 || (r - 1) % N != 0)
        throw Error("N must divide r - 1");

    TraceClassTable table;
    table.N = N;
    table.p = ctx.p();
    table.counts.assign(N, std::vector<Int>(ctx.p(), Int(0)));

    // Linear form of Tr_{r/p} over the polynomial basis.
    const unsigned k = ctx.k();
    std::vector<std::uint64_t> form(k);
    for (unsigned j = 0; j < k; ++j) {
        Elt basis = ctx.zero();
        basis[j] = 1;
        form[j] = ctx.prime_subfield_integer(ctx.trace(basis, 1));
    }

    Elt x = ctx.one();
    const Elt& alpha = ctx.alpha();
    for (std::uint64_t j = 0; j < r - 1; ++j) {
        std::uint64_t t = 0;
        for (unsigned c = 0; c < k; ++c) t += form[c] * x[c];
        table.counts[j % N][t % ctx.p()] += 1;
        x = ctx.mul(x, alpha);
    }
    return table;
}

Int gauss_period(const TraceClassTable& table, std::uint64_t i) {
    if (i >= table.N) throw Error("class index out of range");
    const auto& row = table.counts[i];
    const Int off = row.size() > 1 ? row[1] : Int(0);
    for (std::size_t t = 2; t < row.size(); ++t) {
        if (row[t] != off)
            throw NonIntegralPeriod("off-zero trace counts of class " + std::to_string(i) +
                                    " are not uniform");
    }
    // eta_i = counts[i][0] - c, using sum over all p-th roots of unity = 0.
    return row[0] - off;
}

PeriodFactorization reduced_period_polynomial_direct(const FieldContext& ctx, unsigned n2,
                                                     std::uint64_t cap) {
    TraceClassTable table = trace_class_table(ctx, n2, cap);
    PeriodFactorization fact;
    fact.n2 = n2;
    for (std::uint64_t i = 0; i < n2; ++i)
        fact.roots.emplace_back(1 + Int(n2) * gauss_period(table, i), 1);
    fact.normalize();
    fact.validate();
    return fact;
}

}  // namespace wd
