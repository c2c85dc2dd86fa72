#include "wd/weights.hpp"

#include <map>

#include "wd/errors.hpp"
#include "wd/finite_field.hpp"
#include "wd/period_poly.hpp"

namespace wd {

CodeSpec code_params(std::uint64_t p, unsigned s, unsigned m, std::uint64_t N) {
    if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (s < 1 || m < 1 || N < 1) throw Error("s, m, N must be positive");

    CodeSpec spec;
    spec.p = p;
    spec.s = s;
    spec.m = m;
    spec.N = N;
    spec.k = s * m;
    spec.q = ipow(Int(p), s);
    spec.r = ipow(spec.q, m);

    if ((spec.r - 1) % N != 0)
        throw NotDividing("N = " + std::to_string(N) + " does not divide r - 1 = " +
                          Int(spec.r - 1).str());
    spec.n = (spec.r - 1) / N;

    Int index = (spec.r - 1) / (spec.q - 1);
    spec.n2 = std::uint64_t(boost::multiprecision::gcd(Int(N), index));

    unsigned order = multiplicative_order(spec.q, spec.n, m);
    if (order != m)
        throw DimensionMismatch("ord_n(q) = " + std::to_string(order) +
                                " differs from m = " + std::to_string(m));
    return spec;
}

Int weight_from_root(const CodeSpec& spec, const Int& xi) {
    Int num = (spec.q - 1) * (spec.r - xi);
    Int den = spec.q * spec.N;
    if (num % den != 0)
        throw IntegralityFailure("(q-1)(r-xi) = " + num.str() +
                                 " is not divisible by qN = " + den.str());
    return num / den;
}

void WeightDistribution::validate() const {
    Int freq_sum = 0;
    Int moment = 0;
    Int prev_w = -1;
    for (const auto& [w, f] : entries) {
        if (w <= 0 || w > spec.n)
            throw IntegralityFailure("weight " + w.str() + " outside (0, n]");
        if (w <= prev_w) throw IntegralityFailure("entries not strictly ascending");
        prev_w = w;
        if (f <= 0) throw IntegralityFailure("nonpositive frequency");
        freq_sum += f;
        moment += w * f;
    }
    if (freq_sum != spec.r - 1)
        throw IntegralityFailure("frequency sum " + freq_sum.str() + " != r - 1");
    Int expected_moment = spec.n * (spec.r / spec.q) * (spec.q - 1);
    if (moment != expected_moment)
        throw IntegralityFailure("first moment " + moment.str() + " != n*r*(q-1)/q = " +
                                 expected_moment.str());
    if (entries.size() > spec.n2)
        throw IntegralityFailure("more distinct weights than N2");
}

WeightDistribution distribution_from_factorization(const CodeSpec& spec,
                                                   const PeriodFactorization& fact,
                                                   std::string method) {
    if (fact.n2 != spec.n2)
        throw Error("factorization order does not match the code's N2");
    const Int freq_unit = (spec.r - 1) / spec.n2;
    std::map<Int, Int> merged;
    for (const auto& [xi, e] : fact.roots)
        merged[weight_from_root(spec, xi)] += Int(e) * freq_unit;

    WeightDistribution dist;
    dist.spec = spec;
    dist.method = std::move(method);
    dist.entries.assign(merged.begin(), merged.end());
    dist.validate();
    return dist;
}

WeightDistribution weight_distribution(std::uint64_t p, unsigned s, unsigned m,
                                       std::uint64_t N, Method method) {
    CodeSpec spec = code_params(p, s, m, N);

    auto closed = [&] {
        PeriodFactorization fact =
            factorize_reduced_period(p, s, m, unsigned(spec.n2));
        return distribution_from_factorization(spec, fact, "closed");
    };
    auto direct = [&] {
        FieldContext ctx = build_field(p, spec.k);
        PeriodFactorization fact =
            reduced_period_polynomial_direct(ctx, unsigned(spec.n2));
        return distribution_from_factorization(spec, fact, "direct");
    };

    switch (method) {
        case Method::Closed: return closed();
        case Method::Direct: return direct();
        case Method::Auto: break;
    }

    bool closed_ok = spec.n2 == 1 || spec.n2 == 2 || spec.n2 == 3 || spec.n2 == 4 ||
                     spec.n2 == 5 || spec.n2 == 6 || spec.n2 == 8 || spec.n2 == 12;
    bool direct_ok = spec.r <= kAutoCrossCheckCap;
    if (closed_ok) {
        WeightDistribution dist = closed();
        if (direct_ok) {
            WeightDistribution check = direct();
            if (!dist.same_entries(check))
                throw IntegralityFailure(
                    "closed-form distribution disagrees with the direct computation");
        }
        return dist;
    }
    if (spec.r <= kEnumerationCap) return direct();
    throw UnsupportedOrder("N2 = " + std::to_string(spec.n2) +
                           " has no closed form and r exceeds the enumeration cap");
}

std::string to_string(Classification c) {
    switch (c) {
        case Classification::OneWeight: return "OneWeight";
        case Classification::MaxWeights: return "MaxWeights";
        case Classification::TwoWeightSemiPrimitive: return "TwoWeightSemiPrimitive";
        case Classification::Other: return "Other";
    }
    return "?";
}

Classification classify(const CodeSpec& spec) {
    if (spec.n2 == 1) return Classification::OneWeight;
    if (spec.p % spec.n2 == 1) return Classification::MaxWeights;
    // Semi-primitive: some power of p is -1 modulo N2.
    std::uint64_t acc = spec.p % spec.n2;
    for (unsigned j = 1; j <= spec.k; ++j) {
        if (acc == spec.n2 - 1) return Classification::TwoWeightSemiPrimitive;
        if (acc == 1) break;
        acc = acc * spec.p % spec.n2;
    }
    return Classification::Other;
}

DivisibilityReport divisibility_exponent(const CodeSpec& spec,
                                         const WeightDistribution& dist) {
    if (spec.n2 == 0 || (spec.n2 != 1 && spec.p % spec.n2 != 1))
        throw HypothesisViolated("divisibility theorem requires p = 1 (mod N2)");
    if (spec.m % spec.n2 != 0)
        throw UndefinedExponent("exponent m/N2 - 1 undefined: N2 does not divide m");

    DivisibilityReport report;
    report.expected = spec.m / unsigned(spec.n2) - 1;
    report.all_match = true;
    for (const auto& [w, f] : dist.entries) {
        unsigned v = adic_valuation(w, spec.q);
        report.valuations.emplace_back(w, v);
        if (v != report.expected) report.all_match = false;
    }
    return report;
}

}  // namespace wd
