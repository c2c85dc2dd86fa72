#include "wd/finite_field.hpp"

#include <algorithm>
#include <cstdlib>

namespace wd {

namespace {

using Poly = std::vector<std::uint32_t>;  // over GF(p), lsc first, no trailing zeros

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + std::uint64_t(a[i]) * b[j]) % p;
    }
    // reduce mod monic f
    const std::size_t k = f.size() - 1;
    for (std::size_t d = prod.size(); d-- > k;) {
        std::uint64_t c = prod[d] % p;
        if (!c) continue;
        prod[d] = 0;
        for (std::size_t j = 0; j < k; ++j) {
            std::uint64_t sub = c * f[j] % p;
            prod[d - k + j] = (prod[d - k + j] + p - sub) % p;
        }
    }
    Poly out(prod.begin(), prod.begin() + std::min(prod.size(), k));
    for (auto& c : out) c = std::uint32_t(c % p);
    poly_trim(out);
    return out;
}

Poly poly_pow_mod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
    Poly result = {1};
    while (e) {
        if (e & 1ull) result = poly_mul_mod(result, base, f, p);
        base = poly_mul_mod(base, base, f, p);
        e >>= 1ull;
    }
    return result;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // Fermat; p prime, a != 0 mod p
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1ull) result = result * base % p;
        base = base * base % p;
        e >>= 1ull;
    }
    return result;
}

Poly poly_mod(Poly a, const Poly& b, std::uint64_t p) {
    poly_trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint64_t lead_inv = mod_inverse(b.back(), p);
    while (a.size() > db) {
        std::uint64_t c = std::uint64_t(a.back()) * lead_inv % p;
        std::size_t shift = a.size() - 1 - db;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t sub = c * b[j] % p;
            a[shift + j] = std::uint32_t((a[shift + j] + p - sub) % p);
        }
        poly_trim(a);
        if (a.empty()) break;
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly rem = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(rem);
    }
    return a;
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
    const unsigned k = unsigned(f.size() - 1);
    if (k == 1) return true;
    // x^{p^k} == x mod f, and gcd(x^{p^{k/l}} - x, f) = 1 for primes l | k
    Poly x = {0, 1};
    Poly t = x;
    std::vector<Poly> frob_chain(k + 1);  // t after i Frobenius steps
    frob_chain[0] = x;
    for (unsigned i = 1; i <= k; ++i) {
        t = poly_pow_mod(t, p, f, p);
        frob_chain[i] = t;
    }
    if (frob_chain[k] != x) return false;
    for (std::uint64_t l : distinct_prime_factors(k)) {
        Poly diff = frob_chain[k / l];
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = std::uint32_t((std::uint64_t(diff[1]) + p - 1) % p);
        poly_trim(diff);
        Poly g = poly_gcd(f, diff, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

FieldContext FieldContext::build(std::uint64_t p, unsigned k, std::uint64_t table_cap) {
    if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (k < 1) throw Error("extension degree must be positive");

    Int r_big = ipow(Int(p), k);
    if (r_big > (Int(1) << 62))
        throw CapExceeded("field GF(" + std::to_string(p) + "^" + std::to_string(k) +
                          ") too large to enumerate");
    FieldContext ctx;
    ctx.p_ = p;
    ctx.k_ = k;
    ctx.r_ = std::uint64_t(r_big);
    ctx.table_cap_ = table_cap;

    // First irreducible monic polynomial in ascending base-p coefficient order.
    std::uint64_t count = std::uint64_t(ipow(Int(p), k));  // candidates c0..c_{k-1}
    for (std::uint64_t code = 0;; ++code) {
        if (code >= count) throw Error("no irreducible modulus found");  // unreachable
        Poly f(k + 1, 0);
        std::uint64_t c = code;
        for (unsigned i = 0; i < k; ++i) {
            f[i] = std::uint32_t(c % p);
            c /= p;
        }
        f[k] = 1;
        if (is_irreducible(f, p)) {
            ctx.modulus_ = f;
            break;
        }
    }

    // Smallest element (in packed order) of multiplicative order r-1.
    const std::uint64_t group = ctx.r_ - 1;
    auto prime_divs = distinct_prime_factors(group);
    for (std::uint64_t code = 1; code < ctx.r_; ++code) {
        Elt cand = ctx.unpack(code);
        bool primitive = true;
        for (std::uint64_t l : prime_divs) {
            if (ctx.is_zero(ctx.sub(ctx.pow(cand, Int(group / l)), ctx.one()))) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            ctx.alpha_ = cand;
            break;
        }
    }
    if (ctx.alpha_.empty() && ctx.r_ > 2) throw Error("no primitive element found");
    if (ctx.alpha_.empty()) ctx.alpha_ = ctx.one();  // GF(2): trivial group
    return ctx;
}

FieldContext build_field(std::uint64_t p, unsigned k, std::uint64_t table_cap) {
    return FieldContext::build(p, k, table_cap);
}

Elt FieldContext::one() const {
    Elt e(k_, 0);
    e[0] = 1;
    return e;
}

Elt FieldContext::from_int(std::uint64_t v) const {
    Elt e(k_, 0);
    e[0] = std::uint32_t(v % p_);
    return e;
}

bool FieldContext::is_zero(const Elt& x) const {
    return std::all_of(x.begin(), x.end(), [](std::uint32_t c) { return c == 0; });
}

Elt FieldContext::add(const Elt& a, const Elt& b) const {
    Elt out(k_);
    for (unsigned i = 0; i < k_; ++i) out[i] = std::uint32_t((std::uint64_t(a[i]) + b[i]) % p_);
    return out;
}

Elt FieldContext::sub(const Elt& a, const Elt& b) const {
    Elt out(k_);
    for (unsigned i = 0; i < k_; ++i) out[i] = std::uint32_t((std::uint64_t(a[i]) + p_ - b[i]) % p_);
    return out;
}

Elt FieldContext::mul(const Elt& a, const Elt& b) const {
    Poly prod = poly_mul_mod(a, b, modulus_, p_);
    prod.resize(k_, 0);
    return prod;
}

Elt FieldContext::pow(const Elt& a, Int e) const {
    const Int group = Int(r_) - 1;
    if (e < 0) {
        if (is_zero(a)) throw Error("negative power of zero");
        e %= group;
        if (e < 0) e += group;
    }
    Elt result = one();
    Elt base = a;
    while (e > 0) {
        if ((e & 1) != 0) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Elt FieldContext::inv(const Elt& a) const {
    if (is_zero(a)) throw Error("inverse of zero");
    return pow(a, Int(r_) - 2);
}

Elt FieldContext::frobenius(const Elt& x, unsigned d) const {
    Elt out = x;
    for (unsigned i = 0; i < d; ++i) out = pow(out, Int(p_));
    return out;
}

std::uint64_t FieldContext::pack(const Elt& x) const {
    std::uint64_t code = 0;
    for (unsigned i = k_; i-- > 0;) code = code * p_ + x[i];
    return code;
}

Elt FieldContext::unpack(std::uint64_t code) const {
    Elt e(k_, 0);
    for (unsigned i = 0; i < k_; ++i) {
        e[i] = std::uint32_t(code % p_);
        code /= p_;
    }
    return e;
}

Elt FieldContext::trace(const Elt& x, unsigned sub_degree) const {
    if (sub_degree == 0 || k_ % sub_degree != 0)
        throw BadSubfield("sub_degree " + std::to_string(sub_degree) +
                          " does not divide k = " + std::to_string(k_));
    Elt acc = zero();
    Elt term = x;
    for (unsigned i = 0; i < k_ / sub_degree; ++i) {
        acc = add(acc, term);
        term = frobenius(term, sub_degree);
    }
    return acc;
}

std::vector<std::vector<std::uint32_t>> FieldContext::trace_matrix(unsigned sub_degree) const {
    std::vector<std::vector<std::uint32_t>> mat(k_, std::vector<std::uint32_t>(k_, 0));
    for (unsigned j = 0; j < k_; ++j) {
        Elt basis = zero();
        basis[j] = 1;
        Elt tr = trace(basis, sub_degree);
        for (unsigned i = 0; i < k_; ++i) mat[i][j] = tr[i];
    }
    return mat;
}

bool FieldContext::in_prime_subfield(const Elt& x) const {
    return frobenius(x, 1) == x;
}

std::uint64_t FieldContext::prime_subfield_integer(const Elt& x) const {
    if (!in_prime_subfield(x))
        throw NotInPrimeField("element is not fixed by the Frobenius");
    return x[0];
}

std::uint64_t FieldContext::dlog(const Elt& x) const {
    if (is_zero(x)) throw Error("dlog of zero");
    if (!log_table_.empty()) {
        auto it = log_table_.find(pack(x));
        if (it == log_table_.end()) throw Error("element missing from log table");
        return it->second;
    }
    Elt acc = one();
    for (std::uint64_t e = 0; e < r_ - 1; ++e) {
        if (acc == x) return e;
        acc = mul(acc, alpha_);
    }
    throw Error("dlog walk failed");  // unreachable for valid contexts
}

void FieldContext::build_log_table() {
    if (!log_table_.empty()) return;
    if (r_ > table_cap_)
        throw CapExceeded("log table for r = " + std::to_string(r_) +
                          " exceeds cap " + std::to_string(table_cap_));
    log_table_.reserve(r_ - 1);
    Elt acc = one();
    for (std::uint64_t e = 0; e < r_ - 1; ++e) {
        log_table_.emplace(pack(acc), e);
        acc = mul(acc, alpha_);
    }
}

}  // namespace wd
