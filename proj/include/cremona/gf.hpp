#pragma once

// Finite fields: F_p with word-sized p, and F_{p^r} in a polynomial basis
// over a deterministically chosen irreducible modulus. Both follow the
// field-object pattern of field.hpp.

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "cremona/errors.hpp"
#include "cremona/rational.hpp"

namespace cremona {

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        if (n % d == 0) return n == d;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
        return static_cast<std::uint64_t>((__uint128_t)a * b % m);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
        std::uint64_t r = 1;
        a %= m;
        while (e) {
            if (e & 1) r = mulmod(r, a, m);
            a = mulmod(a, a, m);
            e >>= 1;
        }
        return r;
    };
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (a % n == 0) continue;
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

// Prime field F_p.
struct Fp {
    using Elem = std::uint64_t;
    std::uint64_t p = 2;

    Fp() = default;
    explicit Fp(std::uint64_t prime) : p(prime) {
        if (!is_prime_u64(p)) throw ParameterError("modulus " + std::to_string(p) + " is not prime");
        if (p >= (1ull << 62)) throw ParameterError("prime too large");
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_int(long v) const {
        long long r = v % static_cast<long long>(p);
        if (r < 0) r += p;
        return static_cast<Elem>(r);
    }
    Elem from_rat(const Rat& r) const {
        Int num = r.get_num() % Int(static_cast<unsigned long>(p));
        Int den = r.get_den() % Int(static_cast<unsigned long>(p));
        Elem n = from_int(num.get_si());
        Elem d = from_int(den.get_si());
        return mul(n, inv(d));
    }

    Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p ? s - p : s; }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem mul(Elem a, Elem b) const { return static_cast<Elem>((__uint128_t)a * b % p); }
    Elem neg(Elem a) const { return a ? p - a : 0; }
    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = one();
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    Elem inv(Elem a) const {
        if (a == 0) throw DomainError("division by zero in F_p");
        return pow(a, p - 2);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == one(); }
    bool eq(Elem a, Elem b) const { return a == b; }

    unsigned long characteristic() const { return p; }
    std::string to_string(Elem a) const { return std::to_string(a); }

    template <class Rng>
    Elem sample(Rng& rng) const {
        std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
        return d(rng);
    }

    // Element of multiplicative order exactly n (requires n | p-1; n small).
    Elem root_of_unity(std::uint64_t n) const {
        if (n == 0 || (p - 1) % n != 0) throw DomainError("no n-th root of unity in F_p");
        for (Elem g = 2; g < p; ++g) {
            Elem a = pow(g, (p - 1) / n);
            if (a == 1) continue;
            Elem t = a;
            std::uint64_t ord = 1;
            while (t != 1) { t = mul(t, a); ++ord; }
            if (ord == n) return a;
        }
        throw DomainError("no n-th root of unity found");
    }

    bool operator==(const Fp& o) const { return p == o.p; }
};

// F_{p^r} in the basis 1, g, ..., g^{r-1} modulo a deterministically chosen
// irreducible polynomial (first in lexicographic coefficient order).
class GFq {
  public:
    using Elem = std::vector<std::uint64_t>;

    GFq() : base_(2), r_(1) { init_modulus(); }
    GFq(std::uint64_t p, unsigned r) : base_(p), r_(r) {
        if (r == 0 || r > 16) throw ParameterError("extension degree must be in 1..16");
        init_modulus();
    }
    static GFq of_order(std::uint64_t q) {
        for (std::uint64_t p = 2; p * p <= q; ++p) {
            if (q % p == 0) {
                unsigned r = 0;
                std::uint64_t t = q;
                while (t % p == 0) { t /= p; ++r; }
                if (t != 1) throw ParameterError("field order must be a prime power");
                return GFq(p, r);
            }
        }
        return GFq(q, 1); // q itself prime
    }

    const Fp& prime_field() const { return base_; }
    unsigned degree() const { return r_; }
    std::uint64_t order_u64() const {
        std::uint64_t q = 1;
        for (unsigned i = 0; i < r_; ++i) q *= base_.p;
        return q;
    }
    const std::vector<std::uint64_t>& modulus() const { return mod_; }

    Elem zero() const { return Elem(r_, 0); }
    Elem one() const { Elem e(r_, 0); e[0] = base_.one(); return e; }
    Elem generator() const {
        Elem e(r_, 0);
        if (r_ == 1) e[0] = base_.from_int(1); else e[1] = 1;
        return e;
    }
    Elem from_int(long v) const { Elem e(r_, 0); e[0] = base_.from_int(v); return e; }
    Elem from_rat(const Rat& v) const { Elem e(r_, 0); e[0] = base_.from_rat(v); return e; }

    Elem add(const Elem& a, const Elem& b) const {
        Elem r(r_);
        for (unsigned i = 0; i < r_; ++i) r[i] = base_.add(a[i], b[i]);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r(r_);
        for (unsigned i = 0; i < r_; ++i) r[i] = base_.sub(a[i], b[i]);
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r(r_);
        for (unsigned i = 0; i < r_; ++i) r[i] = base_.neg(a[i]);
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        std::vector<std::uint64_t> prod(2 * r_ - 1, 0);
        for (unsigned i = 0; i < r_; ++i) {
            if (!a[i]) continue;
            for (unsigned j = 0; j < r_; ++j)
                prod[i + j] = base_.add(prod[i + j], base_.mul(a[i], b[j]));
        }
        reduce(prod);
        prod.resize(r_);
        return prod;
    }
    Elem pow(Elem a, Int e) const {
        Elem r = one();
        if (e < 0) { a = inv(a); e = -e; }
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    Elem inv(const Elem& a) const;
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    Elem frobenius(const Elem& a, unsigned times = 1) const {
        Elem r = a;
        for (unsigned t = 0; t < times % frob_period(); ++t) r = pow(r, Int(static_cast<unsigned long>(base_.p)));
        return r;
    }
    unsigned frob_period() const { return r_; }

    bool is_zero(const Elem& a) const {
        for (auto v : a) if (v) return false;
        return true;
    }
    bool is_one(const Elem& a) const { return a == one(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool in_prime_field(const Elem& a) const {
        for (unsigned i = 1; i < r_; ++i) if (a[i]) return false;
        return true;
    }

    unsigned long characteristic() const { return base_.p; }
    std::string to_string(const Elem& a) const;

    template <class Rng>
    Elem sample(Rng& rng) const {
        Elem e(r_);
        for (unsigned i = 0; i < r_; ++i) e[i] = base_.sample(rng);
        return e;
    }

    bool operator==(const GFq& o) const { return base_.p == o.base_.p && r_ == o.r_; }

  private:
    Fp base_;
    unsigned r_;
    std::vector<std::uint64_t> mod_; // monic of degree r_, low-to-high

    void reduce(std::vector<std::uint64_t>& prod) const {
        for (std::size_t d = prod.size(); d-- > r_;) {
            std::uint64_t c = prod[d];
            if (!c) continue;
            prod[d] = 0;
            for (unsigned i = 0; i < r_; ++i)
                prod[d - r_ + i] = base_.sub(prod[d - r_ + i], base_.mul(c, mod_[i]));
        }
    }
    void init_modulus();
};

} // namespace cremona
