#include "wd/diophantine.hpp"

#include <algorithm>
#include <vector>

#include "wd/errors.hpp"

namespace wd {

namespace {

Int mod_pos(const Int& a, std::uint64_t m) {
    Int v = a % m;
    if (v < 0) v += m;
    return v;
}

bool int_sqrt_exact(const Int& n, Int& root) { return is_perfect_square(n, root); }

}  // namespace

// --- QuadInt --------------------------------------------------------------

QuadInt::QuadInt(Ring r, Int a_, Int b_) : ring(r), a(std::move(a_)), b(std::move(b_)) {
    if (ring == Ring::HalfRootMinus3 && ((a - b) % 2 != 0))
        throw IrrationalResidue("half-integer coordinates must have equal parity");
}

Int QuadInt::norm() const {
    switch (ring) {
        case Ring::GaussInt: return a * a + b * b;
        case Ring::RootMinus2: return a * a + 2 * b * b;
        case Ring::HalfRootMinus3: {
            Int n4 = a * a + 3 * b * b;
            if (n4 % 4 != 0) throw IrrationalResidue("norm not integral");
            return n4 / 4;
        }
    }
    throw Error("bad ring tag");
}

QuadInt QuadInt::operator*(const QuadInt& rhs) const {
    if (ring != rhs.ring) throw Error("ring mismatch");
    switch (ring) {
        case Ring::GaussInt:
            return QuadInt(ring, a * rhs.a - b * rhs.b, a * rhs.b + b * rhs.a);
        case Ring::RootMinus2:
            return QuadInt(ring, a * rhs.a - 2 * b * rhs.b, a * rhs.b + b * rhs.a);
        case Ring::HalfRootMinus3: {
            Int na = a * rhs.a - 3 * b * rhs.b;
            Int nb = a * rhs.b + b * rhs.a;
            if (na % 2 != 0 || nb % 2 != 0)
                throw IrrationalResidue("product left the half-integer ring");
            return QuadInt(ring, na / 2, nb / 2);
        }
    }
    throw Error("bad ring tag");
}

QuadInt QuadInt::pow(unsigned n) const {
    QuadInt result(ring, ring == Ring::HalfRootMinus3 ? 2 : 1, 0);
    QuadInt base = *this;
    while (n) {
        if (n & 1u) result = result * base;
        base = base * base;
        n >>= 1u;
    }
    return result;
}

// --- SignContext ----------------------------------------------------------

std::uint64_t SignContext::pow_mod_p(std::uint64_t base, std::uint64_t e) const {
    std::uint64_t result = 1;
    base %= p_;
    while (e) {
        if (e & 1ull) result = result * base % p_;
        base = base * base % p_;
        e >>= 1ull;
    }
    return result;
}

SignContext SignContext::make(std::uint64_t p, unsigned s) {
    if (p == 2) throw Error("sign conventions require odd p");
    SignContext sc;
    sc.p_ = p;

    FieldContext ctx_q = build_field(p, s);
    const Elt& G = ctx_q.alpha();
    const std::uint64_t q = ctx_q.order_u64();

    // Z: least positive exponent with G^Z = 2.
    Elt two = ctx_q.from_int(2);
    Elt acc = G;
    std::uint64_t Z = 1;
    while (acc != two) {
        acc = ctx_q.mul(acc, G);
        if (++Z >= q) throw Error("2 is not in <G>");
    }
    sc.Z_ = Z;

    // Induced generator of GF(p)*.
    sc.g_ = ctx_q.prime_subfield_integer(ctx_q.pow(G, Int((q - 1) / (p - 1))));

    for (auto [num, den] : {std::pair<unsigned, unsigned>{1, 3}, {1, 4}, {1, 8}, {3, 8}}) {
        if ((std::uint64_t(num) * (p - 1)) % den != 0) continue;
        std::uint64_t e = std::uint64_t(num) * (p - 1) / den;
        Elt power = ctx_q.pow(G, Int(e));
        std::uint64_t residue = ctx_q.in_prime_subfield(power)
                                    ? ctx_q.prime_subfield_integer(power)
                                    : 0;  // fall back to g at lookup time
        sc.keys_.emplace_back(num, den);
        sc.q_residues_.push_back(residue);
    }
    return sc;
}

std::uint64_t SignContext::generator_power_residue(unsigned num, unsigned den) const {
    if ((std::uint64_t(num) * (p_ - 1)) % den != 0)
        throw HypothesisViolated("p is not 1 mod " + std::to_string(den));
    for (std::size_t i = 0; i < keys_.size(); ++i) {
        if (keys_[i] == std::pair<unsigned, unsigned>{num, den} && q_residues_[i] != 0)
            return q_residues_[i];
    }
    return pow_mod_p(g_, std::uint64_t(num) * (p_ - 1) / den);
}

// --- representation solvers -----------------------------------------------

CdSolution solve_cd(const Int& P, std::uint64_t p) {
    if (p % 3 != 1) throw NoSolution("solve_cd requires p = 1 mod 3");
    const Int target = 4 * P;
    const Int bound = isqrt_floor(target);
    std::vector<CdSolution> hits;
    for (Int c = -bound; c <= bound; ++c) {
        if (mod_pos(c, 3) != 1) continue;
        if (c % p == 0) continue;
        Int rem = target - c * c;
        if (rem < 0 || rem % 27 != 0) continue;
        Int d;
        if (!int_sqrt_exact(rem / 27, d)) continue;
        hits.push_back({c, d});
    }
    if (hits.empty()) throw NoSolution("4P = c^2 + 27 d^2 has no admissible solution");
    if (hits.size() > 1) throw Error("c is not unique in solve_cd");
    return hits.front();
}

UvSolution solve_uv(const Int& P, std::uint64_t p) {
    if (p % 4 != 1) throw NoSolution("solve_uv requires p = 1 mod 4");
    const Int bound = isqrt_floor(P);
    std::vector<UvSolution> hits;
    for (Int u = -bound; u <= bound; ++u) {
        if (mod_pos(u, 4) != 1) continue;
        if (u % p == 0) continue;
        Int rem = P - u * u;
        if (rem < 0 || rem % 4 != 0) continue;
        Int v;
        if (!int_sqrt_exact(rem / 4, v)) continue;
        hits.push_back({u, v});
    }
    if (hits.empty()) throw NoSolution("P = u^2 + 4 v^2 has no admissible solution");
    if (hits.size() > 1) throw Error("u is not unique in solve_uv");
    return hits.front();
}

R3S3 solve_r3s3(const SignContext& sc) {
    const std::uint64_t p = sc.p();
    if (p % 3 != 1) throw NoSolution("solve_r3s3 requires p = 1 mod 3");
    const std::uint64_t t = sc.generator_power_residue(1, 3);
    const Int target = Int(4) * p;
    const Int bound = isqrt_floor(target);
    std::vector<R3S3> hits;
    for (Int r3 = -bound; r3 <= bound; ++r3) {
        if (mod_pos(r3, 3) != 1) continue;
        Int rem = target - r3 * r3;
        if (rem < 0 || rem % 3 != 0) continue;
        Int s;
        if (!int_sqrt_exact(rem / 3, s)) continue;
        if (s % 3 != 0) continue;
        for (Int s3 : {s, Int(-s)}) {
            // 3 s3 = (2 G^{(p-1)/3} + 1) r3  (mod p)
            if (mod_pos(3 * s3, p) == mod_pos(Int(2 * t + 1) * r3, p)) {
                hits.push_back({r3, s3});
                if (s == 0) break;
            }
        }
    }
    if (hits.empty()) throw NoSolution("4p = r3^2 + 3 s3^2 has no admissible solution");
    if (hits.size() > 1) throw Error("(r3, s3) is not unique");
    return hits.front();
}

A4B4 solve_a4b4(const SignContext& sc) {
    const std::uint64_t p = sc.p();
    if (p % 4 != 1) throw NoSolution("solve_a4b4 requires p = 1 mod 4");
    // a4 = -(-1)^Z mod 4
    const Int a_target = (sc.Z() % 2 == 0) ? 3 : 1;
    const std::uint64_t t = sc.generator_power_residue(1, 4);
    const Int bound = isqrt_floor(Int(p));
    std::vector<A4B4> hits;
    for (Int a = -bound; a <= bound; ++a) {
        if (mod_pos(a, 4) != a_target) continue;
        Int b0;
        if (!int_sqrt_exact(Int(p) - a * a, b0)) continue;
        for (Int b : {b0, Int(-b0)}) {
            if (mod_pos(b, p) == mod_pos(a * t, p)) {
                hits.push_back({a, b});
                if (b0 == 0) break;
            }
        }
    }
    if (hits.empty()) throw NoSolution("p = a4^2 + b4^2 has no admissible solution");
    if (hits.size() > 1) throw Error("(a4, b4) is not unique");
    return hits.front();
}

A8B8 solve_a8b8(const SignContext& sc) {
    const std::uint64_t p = sc.p();
    const std::uint64_t pm8 = p % 8;
    if (pm8 != 1 && pm8 != 3) throw NoSolution("solve_a8b8 requires p = 1 or 3 mod 8");

    Int a_target;
    std::uint64_t t;  // 2 b8 = t * a8 (mod p)
    if (pm8 == 1) {
        a_target = 3;  // -1 mod 4
        t = (sc.generator_power_residue(1, 8) + sc.generator_power_residue(3, 8)) % p;
    } else {
        a_target = ((p - 3) / 8) % 2 == 0 ? 1 : 3;
        // Square root of -2 mod p; either choice flips only the sign of b8,
        // which leaves the root multiset unchanged. Take the smaller root.
        std::uint64_t root = 0;
        for (std::uint64_t c = 1; c < p; ++c) {
            if (c * c % p == p - 2) { root = c; break; }
        }
        if (!root) throw NoSolution("-2 is not a square mod p");
        t = std::min(root, p - root);
    }

    const Int bound = isqrt_floor(Int(p));
    std::vector<A8B8> hits;
    for (Int a = -bound; a <= bound; ++a) {
        if (mod_pos(a, 4) != a_target) continue;
        Int rem = Int(p) - a * a;
        if (rem < 0 || rem % 2 != 0) continue;
        Int b0;
        if (!int_sqrt_exact(rem / 2, b0)) continue;
        for (Int b : {b0, Int(-b0)}) {
            if (mod_pos(2 * b, p) == mod_pos(a * t, p)) {
                hits.push_back({a, b});
                if (b0 == 0) break;
            }
        }
    }
    if (hits.empty()) throw NoSolution("p = a8^2 + 2 b8^2 has no admissible solution");
    if (hits.size() > 1) throw Error("(a8, b8) is not unique");
    return hits.front();
}

// --- power-sum sequences --------------------------------------------------

Int sequence_V(int j, unsigned n, const R3S3& rep) {
    QuadInt lambda(Ring::HalfRootMinus3, rep.r3, rep.s3);
    QuadInt zeta6(Ring::HalfRootMinus3, 1, 1);
    unsigned shift = unsigned(((-j) % 6 + 6) % 6);
    QuadInt x = zeta6.pow(shift) * lambda.pow(n);
    return x.a;  // x + conj(x) = a for (a + b sqrt(-3))/2
}

std::pair<Int, Int> sequence_QP(int j, unsigned n, const A4B4& rep) {
    QuadInt pi(Ring::GaussInt, rep.a4, rep.b4);
    QuadInt zeta4(Ring::GaussInt, 0, 1);
    unsigned shift = unsigned(((-j) % 4 + 4) % 4);
    QuadInt x = zeta4.pow(shift) * pi.pow(n);
    return {2 * x.a, 2 * x.b};
}

std::pair<Int, Int> sequence_TS(unsigned n, const A8B8& rep) {
    QuadInt sigma(Ring::RootMinus2, rep.a8, rep.b8);
    QuadInt x = sigma.pow(n);
    return {2 * x.a, 2 * x.b};
}

// --- Dickson's system -----------------------------------------------------

DicksonSolution dickson_sigma(const DicksonSolution& s) {
    return {s.x, -s.w, -s.u, s.v};
}

Int dickson_L(const DicksonSolution& s) {
    const Int &x = s.x, &w = s.w, &v = s.v, &u = s.u;
    return 2 * x * (v * v + u * u) + 5 * w * (11 * v * v - 4 * v * u - 11 * u * u);
}

Int dickson_M(const DicksonSolution& s) {
    const Int &x = s.x, &w = s.w, &v = s.v, &u = s.u;
    return 2 * x * x * u + 7 * x * v * v + 20 * x * v * u - 3 * x * u * u + 125 * w * w * w +
           200 * w * w * v - 150 * w * w * u + 5 * w * v * v - 20 * w * v * u -
           105 * w * u * u - 40 * v * v * v - 60 * v * v * u + 120 * v * u * u + 20 * u * u * u;
}

DicksonOrbit solve_dickson(const Int& P, std::uint64_t p) {
    if (p % 5 != 1) throw NoSolution("Dickson system requires p = 1 mod 5");
    const Int target = 16 * P;
    std::vector<DicksonSolution> hits;
    const Int xb = isqrt_floor(target);
    for (Int x = -xb; x <= xb; ++x) {
        if (mod_pos(x, 5) != 4) continue;  // x = -1 mod 5
        Int rx = target - x * x;
        const Int wb = isqrt_floor(rx / 125);
        for (Int w = -wb; w <= wb; ++w) {
            Int rw = rx - 125 * w * w;
            if (rw < 0 || rw % 50 != 0) continue;
            Int vu = rw / 50;  // v^2 + u^2
            const Int vb = isqrt_floor(vu);
            for (Int v = -vb; v <= vb; ++v) {
                Int u0;
                if (!int_sqrt_exact(vu - v * v, u0)) continue;
                for (Int u : {u0, Int(-u0)}) {
                    if (x * w != v * v - 4 * v * u - u * u) {
                        if (u0 == 0) break;
                        continue;
                    }
                    Int disc = x * x - 125 * w * w;
                    if (disc % p == 0) {
                        if (u0 == 0) break;
                        continue;
                    }
                    hits.push_back({x, w, v, u});
                    if (u0 == 0) break;
                }
            }
        }
    }
    if (hits.empty()) throw NoSolution("Dickson system has no admissible solution");

    auto less = [](const DicksonSolution& a, const DicksonSolution& b) {
        return std::tie(a.x, a.w, a.v, a.u) < std::tie(b.x, b.w, b.v, b.u);
    };
    std::sort(hits.begin(), hits.end(), less);
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());

    DicksonOrbit orbit;
    orbit.members[0] = hits.front();
    for (int i = 1; i < 4; ++i) orbit.members[i] = dickson_sigma(orbit.members[i - 1]);
    for (const auto& h : hits) {
        if (std::find(orbit.members.begin(), orbit.members.end(), h) == orbit.members.end())
            throw AmbiguousOrbit("admissible Dickson solutions span more than one sigma-orbit");
    }
    return orbit;
}

}  // namespace wd
