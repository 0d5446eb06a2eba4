#pragma once

// Gcd of homogeneous trivariate polynomials over a field. Strategy: strip the
// common monomial content, dehomogenize at z = 1, compute a bivariate gcd,
// and rehomogenize. The bivariate gcd uses Brown's evaluation/interpolation
// scheme over big enough prime fields and a primitive pseudo-remainder
// sequence elsewhere. Every interpolated candidate is certified by exact
// trivariate division before it is believed.

#include <optional>
#include <vector>

#include "cremona/poly3.hpp"
#include "cremona/upoly.hpp"

namespace cremona {

// Bivariate polynomials as dense-in-y vectors of univariate x-polynomials.
template <class F>
struct BPoly {
    std::vector<UPoly<F>> c; // c[j] = coefficient of y^j
    long degy() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
};

template <class F>
void btrim(BPoly<F>& a) {
    while (!a.c.empty() && a.c.back().is_zero()) a.c.pop_back();
}

template <class F>
long b_degx(const BPoly<F>& a) {
    long d = -1;
    for (const auto& u : a.c) d = std::max(d, u.deg());
    return d;
}

template <class F>
long b_total_degree(const BPoly<F>& a) {
    long d = -1;
    for (std::size_t j = 0; j < a.c.size(); ++j)
        if (!a.c[j].is_zero()) d = std::max(d, a.c[j].deg() + static_cast<long>(j));
    return d;
}

// content with respect to x: gcd of all coefficient polynomials
template <class F>
UPoly<F> b_content(const F& K, const BPoly<F>& a) {
    UPoly<F> g;
    for (const auto& u : a.c) {
        if (u.is_zero()) continue;
        g = g.is_zero() ? umonic(K, u) : ugcd(K, g, u);
        if (g.deg() == 0) break;
    }
    return g;
}

template <class F>
BPoly<F> b_divide_content(const F& K, const BPoly<F>& a, const UPoly<F>& cont) {
    if (cont.deg() == 0 && K.is_one(cont.c[0])) return a;
    BPoly<F> r;
    r.c.reserve(a.c.size());
    for (const auto& u : a.c)
        r.c.push_back(u.is_zero() ? u : udiv_exact(K, u, cont));
    return r;
}

template <class F>
BPoly<F> b_scale(const F& K, const BPoly<F>& a, const UPoly<F>& s) {
    BPoly<F> r;
    r.c.reserve(a.c.size());
    for (const auto& u : a.c) r.c.push_back(umul(K, u, s));
    btrim(r);
    return r;
}

template <class F>
BPoly<F> b_sub(const F& K, const BPoly<F>& a, const BPoly<F>& b) {
    BPoly<F> r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t j = 0; j < r.c.size(); ++j) {
        UPoly<F> x = j < a.c.size() ? a.c[j] : UPoly<F>{};
        UPoly<F> y = j < b.c.size() ? b.c[j] : UPoly<F>{};
        r.c[j] = usub(K, x, y);
    }
    btrim(r);
    return r;
}

// pseudo-remainder of a by b with respect to y (b nonzero, degy a >= degy b)
template <class F>
BPoly<F> b_pseudo_rem(const F& K, BPoly<F> a, const BPoly<F>& b) {
    const long db = b.degy();
    const UPoly<F>& lcb = b.c[db];
    while (!a.is_zero() && a.degy() >= db) {
        long da = a.degy();
        UPoly<F> lca = a.c[da];
        // a = lcb * a - lca * y^{da-db} * b
        BPoly<F> scaled = b_scale(K, a, lcb);
        BPoly<F> shift;
        shift.c.assign(da - db + b.c.size(), UPoly<F>{});
        for (std::size_t j = 0; j < b.c.size(); ++j)
            shift.c[j + (da - db)] = umul(K, b.c[j], lca);
        a = b_sub(K, scaled, shift);
        if (a.degy() == da) throw InternalError("pseudo-division failed to reduce degree");
    }
    return a;
}

// primitive PRS gcd of primitive inputs
template <class F>
BPoly<F> b_gcd_prs(const F& K, BPoly<F> f, BPoly<F> g) {
    if (f.degy() < g.degy()) std::swap(f, g);
    while (!g.is_zero()) {
        BPoly<F> r = b_pseudo_rem(K, f, g);
        if (!r.is_zero()) {
            auto cont = b_content(K, r);
            r = b_divide_content(K, r, cont);
        }
        f = std::move(g);
        g = std::move(r);
    }
    return f;
}

template <class F>
UPoly<F> b_eval_x(const F& K, const BPoly<F>& a, const typename F::Elem& v) {
    UPoly<F> r;
    r.c.reserve(a.c.size());
    for (const auto& u : a.c) r.c.push_back(ueval(K, u, v));
    utrim(K, r);
    return r;
}

// Brown's modular gcd for F_p-like fields with enough evaluation points.
// Returns the primitive gcd of primitive f, g, or nullopt when the field is
// too small or evaluations keep misbehaving (caller falls back to PRS).
template <class F>
std::optional<BPoly<F>> b_gcd_brown(const F& K, const BPoly<F>& f, const BPoly<F>& g) {
    const unsigned long p = K.characteristic();
    if (p == 0) return std::nullopt;
    UPoly<F> lcf = f.c[f.degy()], lcg = g.c[g.degy()];
    UPoly<F> gamma = ugcd(K, lcf, lcg);
    long bound = b_degx(f) + b_degx(g) + gamma.deg() + 2;
    if (static_cast<unsigned long>(bound) + 2 > p) return std::nullopt;

    long dmin = std::min(f.degy(), g.degy()) + 1;
    std::vector<typename F::Elem> points;
    std::vector<UPoly<F>> values; // gamma(a) * monic gcd at x=a
    for (unsigned long raw = 0; raw < p; ++raw) {
        auto a = K.from_int(static_cast<long>(raw));
        if (K.is_zero(ueval(K, lcf, a)) || K.is_zero(ueval(K, lcg, a))) continue;
        auto ha = ugcd(K, b_eval_x(K, f, a), b_eval_x(K, g, a));
        long d = ha.deg();
        if (d == 0) { // coprime images: gcd is 1
            BPoly<F> one;
            one.c.push_back(uconst(K, K.one()));
            return one;
        }
        if (d < dmin) {
            dmin = d;
            points.clear();
            values.clear();
        }
        if (d == dmin) {
            points.push_back(a);
            values.push_back(uscale(K, ha, ueval(K, gamma, a)));
            if (static_cast<long>(points.size()) == bound) break;
        }
    }
    if (static_cast<long>(points.size()) < bound) return std::nullopt;

    // Lagrange interpolation of each y-coefficient
    const std::size_t m = points.size();
    BPoly<F> H;
    H.c.assign(dmin + 1, UPoly<F>{});
    // basis polynomials: build numerator products incrementally per point
    for (std::size_t kpt = 0; kpt < m; ++kpt) {
        UPoly<F> numer = uconst(K, K.one());
        auto denom = K.one();
        for (std::size_t l = 0; l < m; ++l) {
            if (l == kpt) continue;
            UPoly<F> lin;
            lin.c = {K.neg(points[l]), K.one()};
            numer = umul(K, numer, lin);
            denom = K.mul(denom, K.sub(points[kpt], points[l]));
        }
        auto idenom = K.inv(denom);
        for (long j = 0; j <= dmin; ++j) {
            auto yj = (j < static_cast<long>(values[kpt].c.size())) ? values[kpt].c[j] : K.zero();
            if (K.is_zero(yj)) continue;
            H.c[j] = uadd(K, H.c[j], uscale(K, numer, K.mul(yj, idenom)));
        }
    }
    btrim(H);
    if (H.is_zero()) return std::nullopt;
    auto cont = b_content(K, H);
    return b_divide_content(K, H, cont);
}

// ---- trivariate layer -----------------------------------------------------

// exact division of sparse trivariate polynomials (graded-lex long division);
// nullopt when the division leaves a remainder
template <class F>
std::optional<Poly3<F>> p3_divide_exact(const F& K, const Poly3<F>& num, const Poly3<F>& den) {
    if (den.is_zero()) throw DomainError("division by zero polynomial");
    Poly3<F> rem = num, quot;
    const Mono& lm = den.leading_mono();
    auto ilc = K.inv(den.leading_coeff());
    while (!rem.is_zero()) {
        const Mono& rm = rem.leading_mono();
        if (rm.i < lm.i || rm.j < lm.j || rm.k < lm.k) return std::nullopt;
        Mono q{rm.i - lm.i, rm.j - lm.j, rm.k - lm.k};
        auto coeff = K.mul(rem.leading_coeff(), ilc);
        quot.t.emplace(q, coeff);
        for (const auto& [m, c] : den.t)
            p3_add_term(K, rem, Mono{q.i + m.i, q.j + m.j, q.k + m.k}, K.neg(K.mul(coeff, c)));
    }
    return quot;
}

// homogeneous p with z-valuation 0 -> bivariate p(x, y, 1)
template <class F>
BPoly<F> p3_dehomogenize(const F& K, const Poly3<F>& p) {
    BPoly<F> b;
    for (const auto& [m, c] : p.t) {
        if (m.j >= b.c.size()) b.c.resize(m.j + 1);
        auto& u = b.c[m.j];
        if (u.c.size() <= m.i) u.c.resize(m.i + 1, K.zero());
        u.c[m.i] = K.add(u.c[m.i], c);
    }
    for (auto& u : b.c) utrim(K, u);
    btrim(b);
    return b;
}

// bivariate h of total degree d -> z^d h(x/z, y/z)
template <class F>
Poly3<F> p3_rehomogenize(const F& K, const BPoly<F>& h) {
    Poly3<F> p;
    long d = b_total_degree(h);
    for (std::size_t j = 0; j < h.c.size(); ++j)
        for (std::size_t i = 0; i < h.c[j].c.size(); ++i) {
            const auto& c = h.c[j].c[i];
            if (K.is_zero(c)) continue;
            p.t.emplace(Mono{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                             static_cast<std::uint32_t>(d - i - j)},
                        c);
        }
    return p;
}

// gcd of two nonzero homogeneous polynomials
template <class F>
Poly3<F> p3_gcd_pair(const F& K, const Poly3<F>& a, const Poly3<F>& b) {
    auto va = p3_valuations(a), vb = p3_valuations(b);
    std::array<std::uint32_t, 3> vz{0, 0, std::min(va[2], vb[2])};
    Poly3<F> a1 = p3_shift_down(K, a, {0, 0, va[2]});
    Poly3<F> b1 = p3_shift_down(K, b, {0, 0, vb[2]});
    BPoly<F> fa = p3_dehomogenize(K, a1);
    BPoly<F> fb = p3_dehomogenize(K, b1);

    BPoly<F> g;
    if (fa.is_zero() || fb.is_zero()) throw InternalError("zero operand in gcd pair");
    auto ca = b_content(K, fa), cb = b_content(K, fb);
    auto fap = b_divide_content(K, fa, ca);
    auto fbp = b_divide_content(K, fb, cb);
    auto cg = ugcd(K, ca, cb);
    auto brown = b_gcd_brown(K, fap, fbp);
    BPoly<F> pp = brown ? *brown : b_gcd_prs(K, fap, fbp);
    g = b_scale(K, pp, cg);

    Poly3<F> G = p3_rehomogenize(K, g);
    if (vz[2]) {
        Poly3<F> shifted;
        for (const auto& [m, c] : G.t) shifted.t.emplace(Mono{m.i, m.j, m.k + vz[2]}, c);
        G = std::move(shifted);
    }
    // certify (Brown candidates can come from unlucky evaluation patterns)
    if (!p3_divide_exact(K, a, G) || !p3_divide_exact(K, b, G)) {
        // exact-by-construction fallback
        BPoly<F> pp2 = b_gcd_prs(K, fap, fbp);
        g = b_scale(K, pp2, cg);
        G = p3_rehomogenize(K, g);
        if (vz[2]) {
            Poly3<F> shifted;
            for (const auto& [m, c] : G.t) shifted.t.emplace(Mono{m.i, m.j, m.k + vz[2]}, c);
            G = std::move(shifted);
        }
        if (!p3_divide_exact(K, a, G) || !p3_divide_exact(K, b, G))
            throw InternalError("gcd certification failed");
    }
    return G;
}

// gcd of the (nonzero) entries of a component triple; components may be zero
template <class F>
Poly3<F> p3_gcd3(const F& K, const std::array<Poly3<F>, 3>& comps) {
    std::vector<const Poly3<F>*> nz;
    for (const auto& p : comps)
        if (!p.is_zero()) nz.push_back(&p);
    if (nz.empty()) throw DomainError("gcd of all-zero components");

    // common monomial content
    std::array<std::uint32_t, 3> vmin{UINT32_MAX, UINT32_MAX, UINT32_MAX};
    for (auto* p : nz) {
        auto v = p3_valuations(*p);
        for (int t = 0; t < 3; ++t) vmin[t] = std::min(vmin[t], v[t]);
    }
    std::vector<Poly3<F>> stripped;
    for (auto* p : nz) stripped.push_back(p3_shift_down(K, *p, vmin));

    Poly3<F> mono = p3_mono(K, Mono{vmin[0], vmin[1], vmin[2]}, K.one());
    bool any_monomial = false;
    for (const auto& p : stripped) any_monomial |= p.is_monomial();
    if (any_monomial || stripped.size() == 1) return mono;

    Poly3<F> g = p3_gcd_pair(K, stripped[0], stripped[1]);
    for (std::size_t i = 2; i < stripped.size() && g.degree() > 0; ++i)
        g = p3_gcd_pair(K, g, stripped[i]);
    if (g.degree() <= 0) return mono;
    return p3_mul(K, mono, g);
}

} // namespace cremona
