#pragma once

// Dense univariate polynomials over a field object (see field.hpp).
// Coefficients are stored low-to-high; the zero polynomial is the empty
// vector and has degree -1.

#include <utility>
#include <vector>

#include "cremona/errors.hpp"
#include "cremona/field.hpp"

namespace cremona {

template <class F>
struct UPoly {
    using Elem = typename F::Elem;
    std::vector<Elem> c;

    UPoly() = default;
    explicit UPoly(std::vector<Elem> coeffs) : c(std::move(coeffs)) {}

    long deg() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
};

template <class F>
void utrim(const F& K, UPoly<F>& a) {
    while (!a.c.empty() && K.is_zero(a.c.back())) a.c.pop_back();
}

template <class F>
UPoly<F> umono(const F& K, typename F::Elem coeff, std::size_t e) {
    UPoly<F> r;
    if (K.is_zero(coeff)) return r;
    r.c.assign(e + 1, K.zero());
    r.c[e] = std::move(coeff);
    return r;
}

template <class F>
UPoly<F> uconst(const F& K, typename F::Elem v) { return umono(K, std::move(v), 0); }

template <class F>
UPoly<F> uadd(const F& K, const UPoly<F>& a, const UPoly<F>& b) {
    UPoly<F> r;
    r.c.resize(std::max(a.c.size(), b.c.size()), K.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = K.add(r.c[i], b.c[i]);
    utrim(K, r);
    return r;
}

template <class F>
UPoly<F> uneg(const F& K, const UPoly<F>& a) {
    UPoly<F> r = a;
    for (auto& x : r.c) x = K.neg(x);
    return r;
}

template <class F>
UPoly<F> usub(const F& K, const UPoly<F>& a, const UPoly<F>& b) { return uadd(K, a, uneg(K, b)); }

template <class F>
UPoly<F> umul(const F& K, const UPoly<F>& a, const UPoly<F>& b) {
    UPoly<F> r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, K.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (K.is_zero(a.c[i])) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = K.add(r.c[i + j], K.mul(a.c[i], b.c[j]));
    }
    utrim(K, r);
    return r;
}

template <class F>
UPoly<F> uscale(const F& K, const UPoly<F>& a, const typename F::Elem& s) {
    UPoly<F> r;
    if (K.is_zero(s)) return r;
    r.c.reserve(a.c.size());
    for (const auto& x : a.c) r.c.push_back(K.mul(x, s));
    utrim(K, r);
    return r;
}

template <class F>
std::pair<UPoly<F>, UPoly<F>> udivmod(const F& K, UPoly<F> a, const UPoly<F>& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    UPoly<F> q;
    if (a.deg() < b.deg()) return {q, a};
    q.c.assign(a.c.size() - b.c.size() + 1, K.zero());
    const auto ilc = K.inv(b.c.back());
    while (!a.is_zero() && a.deg() >= b.deg()) {
        const std::size_t s = a.c.size() - b.c.size();
        const auto f = K.mul(a.c.back(), ilc);
        q.c[s] = f;
        for (std::size_t i = 0; i < b.c.size(); ++i)
            a.c[s + i] = K.sub(a.c[s + i], K.mul(f, b.c[i]));
        utrim(K, a);
    }
    utrim(K, q);
    return {q, a};
}

// Exact quotient; throws if the division has a remainder.
template <class F>
UPoly<F> udiv_exact(const F& K, const UPoly<F>& a, const UPoly<F>& b) {
    auto [q, r] = udivmod(K, a, b);
    if (!r.is_zero()) throw InternalError("inexact polynomial division");
    return q;
}

template <class F>
UPoly<F> umonic(const F& K, UPoly<F> a) {
    if (a.is_zero()) return a;
    return uscale(K, a, K.inv(a.c.back()));
}

// Monic gcd by the Euclidean algorithm.
template <class F>
UPoly<F> ugcd(const F& K, UPoly<F> a, UPoly<F> b) {
    while (!b.is_zero()) {
        auto r = udivmod(K, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return umonic(K, std::move(a));
}

template <class F>
UPoly<F> uderiv(const F& K, const UPoly<F>& a) {
    UPoly<F> r;
    if (a.deg() <= 0) return r;
    r.c.reserve(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) {
        auto k = K.from_int(static_cast<long>(i));
        r.c.push_back(K.mul(a.c[i], k));
    }
    utrim(K, r);
    return r;
}

template <class F>
typename F::Elem ueval(const F& K, const UPoly<F>& a, const typename F::Elem& x) {
    auto r = K.zero();
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) r = K.add(K.mul(r, x), *it);
    return r;
}

// Composition a(b(t)).
template <class F>
UPoly<F> ucompose(const F& K, const UPoly<F>& a, const UPoly<F>& b) {
    UPoly<F> r;
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it)
        r = uadd(K, umul(K, r, b), uconst(K, *it));
    return r;
}

template <class F>
bool ueq(const F& K, const UPoly<F>& a, const UPoly<F>& b) {
    if (a.c.size() != b.c.size()) return false;
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (!K.eq(a.c[i], b.c[i])) return false;
    return true;
}

} // namespace cremona
