#pragma once

// Sparse trivariate polynomials in x, y, z over a field object. The birmap
// engine keeps its map components homogeneous; homogeneity is a property of
// the values, not the type, so affine intermediates can use the same class.

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "cremona/errors.hpp"
#include "cremona/field.hpp"

namespace cremona {

struct Mono {
    std::uint32_t i = 0, j = 0, k = 0; // exponents of x, y, z
    std::uint64_t total() const { return std::uint64_t(i) + j + k; }
    friend bool operator==(const Mono&, const Mono&) = default;
};

// graded-lex, largest first: higher total degree first, then lex on (i,j,k)
struct MonoGradedLexDesc {
    bool operator()(const Mono& a, const Mono& b) const {
        if (a.total() != b.total()) return a.total() > b.total();
        if (a.i != b.i) return a.i > b.i;
        if (a.j != b.j) return a.j > b.j;
        return a.k > b.k;
    }
};

template <class F>
struct Poly3 {
    using Elem = typename F::Elem;
    using Terms = std::map<Mono, Elem, MonoGradedLexDesc>;
    Terms t;

    bool is_zero() const { return t.empty(); }
    std::size_t term_count() const { return t.size(); }
    long degree() const { return t.empty() ? -1 : static_cast<long>(t.begin()->first.total()); }
    bool is_monomial() const { return t.size() == 1; }
    const Mono& leading_mono() const {
        if (t.empty()) throw InternalError("leading monomial of zero polynomial");
        return t.begin()->first;
    }
    const Elem& leading_coeff() const {
        if (t.empty()) throw InternalError("leading coefficient of zero polynomial");
        return t.begin()->second;
    }
    bool is_homogeneous() const {
        if (t.empty()) return true;
        auto d = t.begin()->first.total();
        for (const auto& [m, c] : t)
            if (m.total() != d) return false;
        return true;
    }
};

template <class F>
void p3_add_term(const F& K, Poly3<F>& p, const Mono& m, const typename F::Elem& c) {
    if (K.is_zero(c)) return;
    auto it = p.t.find(m);
    if (it == p.t.end()) {
        p.t.emplace(m, c);
    } else {
        it->second = K.add(it->second, c);
        if (K.is_zero(it->second)) p.t.erase(it);
    }
}

template <class F>
Poly3<F> p3_mono(const F& K, const Mono& m, typename F::Elem c) {
    Poly3<F> p;
    if (!K.is_zero(c)) p.t.emplace(m, std::move(c));
    return p;
}

template <class F>
Poly3<F> p3_var(const F& K, int which /*0=x,1=y,2=z*/) {
    Mono m;
    if (which == 0) m.i = 1;
    else if (which == 1) m.j = 1;
    else m.k = 1;
    return p3_mono(K, m, K.one());
}

template <class F>
Poly3<F> p3_add(const F& K, const Poly3<F>& a, const Poly3<F>& b) {
    Poly3<F> r = a;
    for (const auto& [m, c] : b.t) p3_add_term(K, r, m, c);
    return r;
}

template <class F>
Poly3<F> p3_neg(const F& K, const Poly3<F>& a) {
    Poly3<F> r = a;
    for (auto& [m, c] : r.t) c = K.neg(c);
    return r;
}

template <class F>
Poly3<F> p3_sub(const F& K, const Poly3<F>& a, const Poly3<F>& b) {
    Poly3<F> r = a;
    for (const auto& [m, c] : b.t) p3_add_term(K, r, m, K.neg(c));
    return r;
}

template <class F>
Poly3<F> p3_mul(const F& K, const Poly3<F>& a, const Poly3<F>& b) {
    Poly3<F> r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.t)
        for (const auto& [mb, cb] : b.t) {
            Mono m{ma.i + mb.i, ma.j + mb.j, ma.k + mb.k};
            p3_add_term(K, r, m, K.mul(ca, cb));
        }
    return r;
}

template <class F>
Poly3<F> p3_scale(const F& K, const Poly3<F>& a, const typename F::Elem& s) {
    Poly3<F> r;
    if (K.is_zero(s)) return r;
    for (const auto& [m, c] : a.t) r.t.emplace(m, K.mul(c, s));
    return r;
}

template <class F>
Poly3<F> p3_pow(const F& K, Poly3<F> base, std::uint64_t e) {
    Poly3<F> r = p3_mono(K, Mono{}, K.one());
    while (e) {
        if (e & 1) r = p3_mul(K, r, base);
        if (e >>= 1) base = p3_mul(K, base, base);
    }
    return r;
}

template <class F>
bool p3_eq(const F& K, const Poly3<F>& a, const Poly3<F>& b) {
    if (a.t.size() != b.t.size()) return false;
    auto ita = a.t.begin();
    auto itb = b.t.begin();
    for (; ita != a.t.end(); ++ita, ++itb) {
        if (!(ita->first == itb->first)) return false;
        if (!K.eq(ita->second, itb->second)) return false;
    }
    return true;
}

template <class F>
typename F::Elem p3_eval(const F& K, const Poly3<F>& p,
                         const typename F::Elem& x, const typename F::Elem& y,
                         const typename F::Elem& z) {
    auto r = K.zero();
    auto powc = [&](const typename F::Elem& v, std::uint32_t e) {
        auto acc = K.one();
        auto b = v;
        while (e) {
            if (e & 1) acc = K.mul(acc, b);
            b = K.mul(b, b);
            e >>= 1;
        }
        return acc;
    };
    for (const auto& [m, c] : p.t)
        r = K.add(r, K.mul(K.mul(c, powc(x, m.i)), K.mul(powc(y, m.j), powc(z, m.k))));
    return r;
}

// per-variable minimum exponents (valuations); p must be nonzero
template <class F>
std::array<std::uint32_t, 3> p3_valuations(const Poly3<F>& p) {
    std::array<std::uint32_t, 3> v{UINT32_MAX, UINT32_MAX, UINT32_MAX};
    for (const auto& [m, c] : p.t) {
        v[0] = std::min(v[0], m.i);
        v[1] = std::min(v[1], m.j);
        v[2] = std::min(v[2], m.k);
    }
    return v;
}

template <class F>
Poly3<F> p3_shift_down(const F& K, const Poly3<F>& p, const std::array<std::uint32_t, 3>& v) {
    Poly3<F> r;
    for (const auto& [m, c] : p.t)
        r.t.emplace(Mono{m.i - v[0], m.j - v[1], m.k - v[2]}, c);
    (void)K;
    return r;
}

template <class F>
std::string p3_to_string(const F& K, const Poly3<F>& p,
                         const std::array<std::string, 3>& vars = {"x", "y", "z"}) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : p.t) {
        if (!s.empty()) s += " + ";
        std::string term;
        if (!K.is_one(c) || (m.i == 0 && m.j == 0 && m.k == 0)) term = K.to_string(c);
        auto app = [&](std::uint32_t e, const std::string& v) {
            if (!e) return;
            if (!term.empty()) term += "*";
            term += v;
            if (e > 1) term += "^" + std::to_string(e);
        };
        app(m.i, vars[0]);
        app(m.j, vars[1]);
        app(m.k, vars[2]);
        s += term;
    }
    return s;
}

} // namespace cremona
