#include "wd/period_poly.hpp"

#include <string>

#include "wd/diophantine.hpp"
#include "wd/errors.hpp"

namespace wd {

namespace {

int sign_pow(std::uint64_t e) { return e % 2 == 0 ? 1 : -1; }

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int exact_div(const Int& num, int den, const char* what) {
    if (num % den != 0)
        throw IntegralityFailure(std::string(what) + ": " + num.str() +
                                 " is not divisible by " + std::to_string(den));
    return num / den;
}

unsigned exact_k_div(unsigned k, unsigned d, unsigned n2) {
    if (k % d != 0)
        throw HypothesisViolated("k = " + std::to_string(k) + " is not divisible by " +
                                 std::to_string(d) + " as required for N2 = " +
                                 std::to_string(n2));
    return k / d;
}

PeriodFactorization finish(unsigned n2, std::vector<std::pair<Int, unsigned>> roots) {
    PeriodFactorization fact;
    fact.n2 = n2;
    fact.roots = std::move(roots);
    fact.normalize();
    fact.validate();
    return fact;
}

PeriodFactorization factor_n3(std::uint64_t p, unsigned k) {
    if (p % 3 == 1) {
        unsigned k3 = exact_k_div(k, 3, 3);
        const Int t = ipow(Int(p), k3);
        CdSolution cd = solve_cd(t, p);
        Int root1 = cd.c * t;
        Int root2 = -exact_div((cd.c + 9 * cd.d_abs) * t, 2, "(c+9d)/2");
        Int root3 = -exact_div((cd.c - 9 * cd.d_abs) * t, 2, "(c-9d)/2");
        return finish(3, {{root1, 1}, {root2, 1}, {root3, 1}});
    }
    return semiprimitive_factorization(p, k, 3, 1);
}

PeriodFactorization factor_n4(std::uint64_t p, unsigned k) {
    if (p % 4 == 1) {
        unsigned k4 = exact_k_div(k, 4, 4);
        const Int q4 = ipow(Int(p), k4);       // r^{1/4}
        const Int sq = q4 * q4;                // r^{1/2}
        UvSolution uv = solve_uv(sq, p);
        return finish(4, {{-sq - 2 * q4 * uv.u, 1},
                          {-sq + 2 * q4 * uv.u, 1},
                          {sq - 4 * q4 * uv.v_abs, 1},
                          {sq + 4 * q4 * uv.v_abs, 1}});
    }
    return semiprimitive_factorization(p, k, 4, 1);
}

PeriodFactorization factor_n5(std::uint64_t p, unsigned k) {
    if (p % 5 == 1) {
        unsigned k5 = exact_k_div(k, 5, 5);
        const Int t = ipow(Int(p), k5);
        DicksonOrbit orbit = solve_dickson(t, p);
        const DicksonSolution& d0 = orbit.members[0];
        const Int x3 = d0.x * d0.x * d0.x;
        std::vector<std::pair<Int, unsigned>> roots;
        roots.emplace_back(-exact_div(t * (x3 - 25 * dickson_L(d0)), 16, "(x^3-25L)/16"), 1);
        for (const DicksonSolution& d : orbit.members)
            roots.emplace_back(exact_div(t * (x3 - 25 * dickson_M(d)), 64, "(x^3-25M)/64"),
                               1);
        return finish(5, roots);
    }
    // ord_5(p) is 2 or 4 here, so p^{ord/2} = -1 (mod 5) always holds.
    unsigned jprime = (p % 5 == 4) ? 1 : 2;
    return semiprimitive_factorization(p, k, 5, jprime);
}

PeriodFactorization factor_n6(std::uint64_t p, unsigned s, unsigned k) {
    if (p % 6 == 1) {
        unsigned k6 = exact_k_div(k, 6, 6);
        SignContext sc = SignContext::make(p, s);
        R3S3 rep = solve_r3s3(sc);
        const Int p6 = ipow(Int(p), k6);
        const Int p3 = p6 * p6;
        const Int ph = p6 * p6 * p6;  // p^{k/2}
        const std::uint64_t t = (p - 1) / 6;
        const int s_tk2 = sign_pow(t * (k / 2));
        std::vector<std::pair<Int, unsigned>> roots;
        for (int j = 1; j <= 6; ++j) {
            Int eta = -s_tk2 * p6 * sequence_V(j, 2 * k / 3, rep) -
                      p3 * sequence_V(2 * j, k / 3, rep) -
                      sign_pow(std::uint64_t(j) + t * (k / 2)) * ph;
            roots.emplace_back(eta, 1);
        }
        return finish(6, roots);
    }
    return semiprimitive_factorization(p, k, 6, 1);
}

PeriodFactorization factor_n8(std::uint64_t p, unsigned s, unsigned k) {
    const std::uint64_t res = p % 8;
    if (res == 7) return semiprimitive_factorization(p, k, 8, 1);

    SignContext sc = SignContext::make(p, s);
    if (res == 1) {
        unsigned k8 = exact_k_div(k, 8, 8);
        A4B4 r4 = solve_a4b4(sc);
        A8B8 r8 = solve_a8b8(sc);
        const Int p8 = ipow(Int(p), k8);
        const Int p4 = p8 * p8;
        const Int ph = p4 * p4;
        auto [T, S] = sequence_TS(k / 2, r8);
        auto [Q0, P0] = sequence_QP(0, k / 4, r4);
        std::vector<std::pair<Int, unsigned>> roots;
        for (int j = 1; j <= 8; ++j) {
            Int Qj = sequence_QP(j, k / 2, r4).first;
            Int A, B;
            if (j % 2 == 0) {
                A = sequence_QP(j / 2, k / 4, r4).first;
                B = T;
            } else {
                A = sign_pow(std::uint64_t(floor_div(j, 4) & 1)) * Q0 +
                    sign_pow(std::uint64_t(floor_div(j - 2, 4) & 1)) * P0;
                B = S;
            }
            // The constant term alternates with j; without the (-1)^j the
            // roots cannot sum to zero.
            roots.emplace_back(-sign_pow(unsigned(j)) * ph - p4 * Qj - p8 * A * B, 1);
        }
        return finish(8, roots);
    }
    if (res == 3) {
        unsigned k4 = exact_k_div(k, 4, 8);
        A8B8 r8 = solve_a8b8(sc);
        const Int p4 = ipow(Int(p), k4);
        const Int ph = p4 * p4;
        auto [T, S] = sequence_TS(k / 2, r8);
        // The two double factors scale with p^{k/4}, matching the simple
        // factors; the p^{k/2} coefficient printed for them is off by p^{k/4}
        // (it would force a zero weight).
        return finish(8, {{-2 * p4 * S + ph, 2},
                          {2 * p4 * S + ph, 2},
                          {ph, 2},
                          {2 * p4 * T - 3 * ph, 1},
                          {-2 * p4 * T - 3 * ph, 1}});
    }
    // res == 5
    unsigned k8 = exact_k_div(k, 8, 8);
    A4B4 r4 = solve_a4b4(sc);
    const Int p8 = ipow(Int(p), k8);
    const Int p4 = p8 * p8;
    const Int p38 = p4 * p8;  // p^{3k/8}
    const Int ph = p4 * p4;
    auto [Qh, Ph] = sequence_QP(0, k / 2, r4);
    auto [Qq, Pq] = sequence_QP(0, k / 4, r4);
    return finish(8, {{ph - p4 * Ph, 2},
                      {ph + p4 * Ph, 2},
                      {-ph - p4 * Qh - 2 * p38 * Qq, 1},
                      {-ph - p4 * Qh + 2 * p38 * Qq, 1},
                      {-ph + p4 * Qh - 2 * p38 * Pq, 1},
                      {-ph + p4 * Qh + 2 * p38 * Pq, 1}});
}

PeriodFactorization factor_n12(std::uint64_t p, unsigned s, unsigned k) {
    const std::uint64_t res = p % 12;
    if (res == 11) return semiprimitive_factorization(p, k, 12, 1);

    SignContext sc = SignContext::make(p, s);
    if (res == 1) {
        unsigned k12 = exact_k_div(k, 12, 12);
        R3S3 r3 = solve_r3s3(sc);
        A4B4 r4 = solve_a4b4(sc);
        const Int p12 = ipow(Int(p), k12);
        const Int p6 = p12 * p12;
        const Int p4 = p6 * p12;
        const Int p3 = p6 * p6;
        const Int ph = p4 * p4;  // p^{k/2}
        std::vector<std::pair<Int, unsigned>> roots;
        for (int j = 1; j <= 12; ++j) {
            Int Qj = sequence_QP(j, k / 2, r4).first;
            Int eta = -p12 * Qj * sequence_V(-j, k / 3, r3) - p4 * Qj -
                      p6 * sequence_V(j, 2 * k / 3, r3) -
                      p3 * sequence_V(2 * j, k / 3, r3) - sign_pow(unsigned(j)) * ph;
            roots.emplace_back(eta, 1);
        }
        return finish(12, roots);
    }
    if (res == 5) {
        unsigned k4 = exact_k_div(k, 4, 12);
        A4B4 r4 = solve_a4b4(sc);
        const Int p4 = ipow(Int(p), k4);
        const Int ph = p4 * p4;
        auto [Q, P] = sequence_QP(0, k / 2, r4);
        const int sg = sign_pow(k / 4);
        // In the last simple factor the coefficient is 2(-1)^{k/4}+1,
        // mirroring its partner; the printed -1 breaks the zero root sum.
        return finish(12, {{Q * p4 * (sg - 1) + ph, 2},
                           {-Q * p4 * (sg - 1) + ph, 2},
                           {P * p4 * (sg + 1) + ph, 2},
                           {-P * p4 * (sg + 1) + ph, 2},
                           {P * p4 * (2 * sg - 1) + ph, 1},
                           {-P * p4 * (2 * sg - 1) + ph, 1},
                           {Q * p4 * (2 * sg + 1) - 5 * ph, 1},
                           {-Q * p4 * (2 * sg + 1) - 5 * ph, 1}});
    }
    // res == 7
    unsigned k6 = exact_k_div(k, 6, 12);
    R3S3 r3 = solve_r3s3(sc);
    const Int p6 = ipow(Int(p), k6);
    const Int p3 = p6 * p6;
    const Int ph = p3 * p6;
    const int sk2 = sign_pow(k / 2);
    const int rho = 2 * sign_pow(std::uint64_t(k) * ((p + 5) / 6));
    std::vector<std::pair<Int, unsigned>> roots;
    for (int j = 1; j <= 12; ++j) {
        Int v1 = sequence_V(j, 2 * k / 3, r3);
        Int v2 = sequence_V(2 * j, k / 3, r3);
        Int eta;
        if (j % 2 == 1)
            eta = -sk2 * p6 * v1 - p3 * v2 + sk2 * ph;
        else if (j % 4 == 2)
            eta = -sk2 * p6 * v1 + p3 * v2 * (rho - 1) + ph * (rho - sk2);
        else
            eta = -sk2 * p6 * v1 - p3 * (rho + 1) * v2 - ph * (rho + sk2);
        roots.emplace_back(eta, 1);
    }
    return finish(12, roots);
}

}  // namespace

PeriodFactorization semiprimitive_factorization(std::uint64_t p, unsigned k, unsigned n2,
                                                unsigned jprime) {
    if (jprime == 0 || ipow(Int(p), jprime) % n2 != n2 - 1)
        throw HypothesisViolated("p^{j'} = -1 (mod N2) fails for j' = " +
                                 std::to_string(jprime));
    if (k % (2 * jprime) != 0)
        throw HypothesisViolated("2j' must divide k for the semiprimitive pattern");
    if (k % 2 != 0) throw HypothesisViolated("k must be even");
    const Int sq = ipow(Int(p), k / 2);
    const int eps = sign_pow(k / (2 * jprime));
    PeriodFactorization fact;
    fact.n2 = n2;
    fact.roots = {{eps * sq, n2 - 1}, {-Int(n2 - 1) * eps * sq, 1}};
    fact.normalize();
    fact.validate();
    return fact;
}

PeriodFactorization factorize_reduced_period(std::uint64_t p, unsigned s, unsigned m,
                                             unsigned n2) {
    const unsigned k = s * m;
    switch (n2) {
        case 1: case 2: case 3: case 4: case 5: case 6: case 8: case 12: break;
        default:
            throw UnsupportedOrder("no closed form for N2 = " + std::to_string(n2));
    }
    // Standing hypothesis of every branch: N2 | (r-1)/(p-1).
    Int index = (ipow(Int(p), k) - 1) / (Int(p) - 1);
    if (index % n2 != 0)
        throw HypothesisViolated("N2 = " + std::to_string(n2) +
                                 " does not divide (r-1)/(p-1)");

    switch (n2) {
        case 1:
            return finish(1, {{Int(0), 1}});
        case 2: {
            unsigned kh = exact_k_div(k, 2, 2);
            const Int sq = ipow(Int(p), kh);
            return finish(2, {{-sq, 1}, {sq, 1}});
        }
        case 3: return factor_n3(p, k);
        case 4: return factor_n4(p, k);
        case 5: return factor_n5(p, k);
        case 6: return factor_n6(p, s, k);
        case 8: return factor_n8(p, s, k);
        default: return factor_n12(p, s, k);
    }
}

}  // namespace wd
