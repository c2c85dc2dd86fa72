#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "wd/finite_field.hpp"
#include "wd/ints.hpp"

namespace wd {

/// Element of one of the three imaginary quadratic rings the closed forms
/// live in. Coordinates mean a + b*i, a + b*sqrt(-2), or (a + b*sqrt(-3))/2
/// (with a = b mod 2) depending on the tag.
enum class Ring { GaussInt, RootMinus2, HalfRootMinus3 };

struct QuadInt {
    Ring ring;
    Int a, b;

    QuadInt(Ring r, Int a_, Int b_);

    QuadInt conj() const { return QuadInt(ring, a, -b); }
    Int norm() const;
    QuadInt operator*(const QuadInt& rhs) const;
    QuadInt pow(unsigned n) const;
};

/// Generator conventions for the sign congruences: a canonical generator G of
/// GF(q)* plus the induced prime-field generator. The root multiset downstream
/// is invariant under the choice of primitive element, so the canonical field
/// context is used throughout.
class SignContext {
public:
    static SignContext make(std::uint64_t p, unsigned s);

    std::uint64_t p() const { return p_; }
    /// Least positive Z with G^Z = 2.
    std::uint64_t Z() const { return Z_; }

    /// G^{num*(p-1)/den} as an integer mod p. Falls back to the induced
    /// GF(p)* generator when the G-power leaves the prime subfield (possible
    /// only for s > 1).
    std::uint64_t generator_power_residue(unsigned num, unsigned den) const;

private:
    std::uint64_t p_ = 0;
    std::uint64_t Z_ = 0;
    std::uint64_t g_ = 0;                    // induced generator of GF(p)*
    std::vector<std::uint64_t> q_residues_;  // residue of G^{num(p-1)/den} keyed below, 0 = not in GF(p)
    std::vector<std::pair<unsigned, unsigned>> keys_;
    std::uint64_t pow_mod_p(std::uint64_t base, std::uint64_t e) const;
};

// --- representation solvers (bounded exhaustive search) -------------------

struct CdSolution { Int c; Int d_abs; };   // 4P = c^2 + 27 d^2, c = 1 mod 3, gcd(c,p) = 1
CdSolution solve_cd(const Int& P, std::uint64_t p);

struct UvSolution { Int u; Int v_abs; };   // P = u^2 + 4 v^2, u = 1 mod 4, gcd(u,p) = 1
UvSolution solve_uv(const Int& P, std::uint64_t p);

struct R3S3 { Int r3; Int s3; };           // 4p = r3^2 + 3 s3^2, sign of s3 congruence-fixed
R3S3 solve_r3s3(const SignContext& sc);

struct A4B4 { Int a4; Int b4; };           // p = a4^2 + b4^2, both signs congruence-fixed
A4B4 solve_a4b4(const SignContext& sc);

struct A8B8 { Int a8; Int b8; };           // p = a8^2 + 2 b8^2
A8B8 solve_a8b8(const SignContext& sc);

// --- conjugate power-sum sequences ---------------------------------------

/// V_{j,n} from lambda = (r3 + s3*sqrt(-3))/2; an exact integer.
Int sequence_V(int j, unsigned n, const R3S3& rep);

/// (Q_{j,n}, P_{j,n}) from pi = a4 + b4*i.
std::pair<Int, Int> sequence_QP(int j, unsigned n, const A4B4& rep);

/// (T_n, S_n) from sigma = a8 + b8*sqrt(-2).
std::pair<Int, Int> sequence_TS(unsigned n, const A8B8& rep);

// --- Dickson's quintic system --------------------------------------------

struct DicksonSolution {
    Int x, w, v, u;
    bool operator==(const DicksonSolution&) const = default;
};

/// 16P = x^2 + 125w^2 + 50v^2 + 50u^2, xw = v^2 - 4vu - u^2, x = -1 mod 5,
/// p does not divide x^2 - 125w^2. All admissible solutions form a single
/// orbit under sigma(x,w,v,u) = (x,-w,-u,v); the full orbit is returned.
struct DicksonOrbit {
    std::array<DicksonSolution, 4> members;  // sigma^0 .. sigma^3 of a representative
};
DicksonOrbit solve_dickson(const Int& P, std::uint64_t p);

DicksonSolution dickson_sigma(const DicksonSolution& s);

/// L and M polynomials of the quintic factorization.
Int dickson_L(const DicksonSolution& s);
Int dickson_M(const DicksonSolution& s);

}  // namespace wd
