#include "cremona/weyl.hpp"

#include <random>

#include "cremona/errors.hpp"

namespace cremona::weyl {

std::vector<Int> xi9() {
    std::vector<Int> v(rank9 + 1, -1);
    v[0] = 3;
    return v;
}

Rat inner_int(const std::vector<Int>& u, const std::vector<Int>& v) {
    if (u.size() != v.size()) throw DimensionError("rank mismatch");
    Int s = u[0] * v[0];
    for (std::size_t j = 1; j < u.size(); ++j) s -= u[j] * v[j];
    return Rat(s);
}

std::vector<Int> root_general(std::size_t n, std::size_t i) {
    if (i + 1 > n && i != 0) throw ParameterError("root index out of range");
    std::vector<Int> v(n + 1, 0);
    if (i == 0) {
        if (n < 3) throw ParameterError("alpha_0 needs rank >= 3");
        v[0] = 1; v[1] = v[2] = v[3] = -1;
    } else {
        if (i + 1 > n) throw ParameterError("root index out of range");
        v[i] = 1; v[i + 1] = -1;
    }
    return v;
}

std::vector<Int> root(std::size_t i) {
    if (i > 8) throw ParameterError("E9 root index must be in 0..8");
    return root_general(rank9, i);
}

LatticeIsometry reflection_general(std::size_t n, std::size_t i) {
    auto alpha = root_general(n, i);
    IMat m(n + 1, n + 1);
    // column j: e_j + (e_j . alpha) alpha
    for (std::size_t j = 0; j <= n; ++j) {
        Int dot = (j == 0 ? alpha[0] : -alpha[j]);
        for (std::size_t r = 0; r <= n; ++r) m(r, j) = (r == j ? 1 : 0) + dot * alpha[r];
    }
    return LatticeIsometry(std::move(m));
}

LatticeIsometry reflection(std::size_t i) {
    if (i > 8) throw ParameterError("E9 root index must be in 0..8");
    return reflection_general(rank9, i);
}

E8Class::E8Class(std::vector<Int> rep) : w(std::move(rep)) {
    if (w.size() != rank9 + 1) throw DimensionError("E8 class representative must live in Z^{1,9}");
    if (inner_int(w, xi9()) != 0) throw DomainError("representative must be orthogonal to xi9");
}

bool E8Class::same_class(const E8Class& o) const {
    // xi9.e0 = 3, so the candidate multiple is fixed by the e0 coordinate
    Int diff0 = w[0] - o.w[0];
    if (diff0 % 3 != 0) return false;
    Int k = diff0 / 3;
    auto xi = xi9();
    for (std::size_t i = 0; i <= rank9; ++i)
        if (w[i] - o.w[i] != k * xi[i]) return false;
    return true;
}

LatticeIsometry iota(const E8Class& cls) {
    const auto& w = cls.w;
    auto xi = xi9();
    Rat ww = inner_int(w, w);
    if (ww.get_den() != 1 || ww.get_num() % 2 != 0)
        throw DomainError("w.w must be an even integer on xi9-perp");
    Int half_ww = ww.get_num() / 2;
    IMat m(rank9 + 1, rank9 + 1);
    for (std::size_t j = 0; j <= rank9; ++j) {
        // v = e_j: v.xi9 and w.v
        Int v_xi = (j == 0 ? xi[0] : -xi[j]);
        Int w_v = (j == 0 ? w[0] : -w[j]);
        Int c = w_v - v_xi * half_ww;
        for (std::size_t r = 0; r <= rank9; ++r)
            m(r, j) = (r == j ? 1 : 0) - v_xi * w[r] + c * xi[r];
    }
    return LatticeIsometry(std::move(m));
}

namespace {

bool fixes_xi9(const LatticeIsometry& g) {
    return g.apply_int(xi9()) == xi9();
}

} // namespace

E8Class iota_inverse(const LatticeIsometry& g) {
    if (!fixes_xi9(g)) throw DomainError("isometry does not fix xi9");
    auto xi = xi9();
    std::vector<Int> e0(rank9 + 1, 0);
    e0[0] = 1;
    auto ge0 = g.apply_int(e0);
    // e0 - g(e0) = 3w - sigma xi9; search sigma mod 3 making it divisible
    for (int sigma = 0; sigma < 3; ++sigma) {
        std::vector<Int> v(rank9 + 1);
        bool ok = true;
        for (std::size_t i = 0; i <= rank9; ++i) {
            v[i] = e0[i] - ge0[i] + sigma * xi[i];
            if (v[i] % 3 != 0) { ok = false; break; }
            v[i] /= 3;
        }
        if (!ok) continue;
        if (inner_int(v, xi) != 0) continue;
        E8Class cand(v);
        if (iota(cand) == g) return cand;
    }
    throw DomainError("isometry is not a P* translation");
}

bool membership_pstar(const LatticeIsometry& g) {
    if (!fixes_xi9(g)) throw DomainError("isometry does not fix xi9");
    try {
        iota_inverse(g);
        return true;
    } catch (const DomainError&) {
        return false;
    }
}

TranslationLength translation_length(const LatticeIsometry& g, const Rat& eps) {
    if (!fixes_xi9(g)) throw DomainError("isometry does not fix xi9");
    std::vector<Int> e0(rank9 + 1, 0);
    e0[0] = 1;
    auto ge0 = g.apply_int(e0);
    Rat c = inner_int(e0, ge0);
    if (c == 1 && ge0 == e0 && membership_pstar(g)) {
        // only the trivial translation fixes e0
        throw DomainError("translation length of the identity translation");
    }
    // euclidean length on the level-eps horosphere:
    // (eps/3) * 2 sinh(arcosh(c)/2) = (eps/3) * sqrt(2(c-1))
    ExprPtr expr = Expr::mul(Expr::div(Expr::num(eps), Expr::num(3)),
                             Expr::sqrt(Expr::mul(Expr::num(2), Expr::add(Expr::num(c), Expr::num(-1)))));
    Real val = expr->eval();
    return {std::move(c), std::move(expr), std::move(val)};
}

DeltaBounds delta_bounds(const Rat& eps, unsigned long n) {
    if (eps <= 0) throw ParameterError("eps must be positive");
    if (n == 0) throw ParameterError("n must be >= 1");
    Rat ne = eps * Rat(static_cast<long>(n));
    ExprPtr sqrt2 = Expr::sqrt(Expr::num(2));
    ExprPtr euc = Expr::div(Expr::mul(Expr::num(ne), sqrt2), Expr::num(3));
    ExprPtr hyp = Expr::mul(Expr::num(2),
                            Expr::arcsinh(Expr::div(Expr::num(ne),
                                                    Expr::mul(Expr::num(3), sqrt2))));
    Real ev = euc->eval(), hv = hyp->eval();
    return {std::move(euc), std::move(hyp), std::move(ev), std::move(hv)};
}

namespace {

// Upper unitriangular 3x3 over Z/k: (a, b, c) encodes rows
// [1 a c; 0 1 b; 0 0 1]. Multiplication picks up the ab' cross term.
struct Heis {
    unsigned long a, b, c;
};

Heis hmul(const Heis& x, const Heis& y, unsigned long k) {
    return {(x.a + y.a) % k, (x.b + y.b) % k, (x.c + y.c + x.a * y.b % k) % k};
}

Heis hpow(Heis x, unsigned long e, unsigned long k) {
    Heis r{0, 0, 0};
    while (e) {
        if (e & 1) r = hmul(r, x, k);
        x = hmul(x, x, k);
        e >>= 1;
    }
    return r;
}

Heis hinv(const Heis& x, unsigned long k) {
    auto m = [&](unsigned long v) { return (k - v % k) % k; };
    return {m(x.a), m(x.b), m(x.c + m(x.a * x.b % k))};
}

bool heq(const Heis& x, const Heis& y) { return x.a == y.a && x.b == y.b && x.c == y.c; }

} // namespace

CentralPowerReport central_power_identity_check(unsigned long m, unsigned long k,
                                                unsigned long samples, unsigned long seed) {
    if (m < 1) throw ParameterError("m must be >= 1");
    if (k < 2) throw ParameterError("modulus must be >= 2");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned long> d(0, k - 1);
    unsigned long e = m * (m + 1) / 2;
    bool holds = true;
    for (unsigned long s = 0; s < samples && holds; ++s) {
        Heis f{d(rng), d(rng), d(rng)};
        Heis g{d(rng), d(rng), d(rng)};
        // fg = gf c defines c = (gf)^{-1} (fg); central in the Heisenberg group
        Heis fg = hmul(f, g, k);
        Heis gf = hmul(g, f, k);
        Heis c = hmul(hinv(gf, k), fg, k);
        Heis lhs = hpow(fg, m, k);
        Heis rhs = hmul(hmul(hpow(g, m, k), hpow(f, m, k), k), hpow(c, e, k), k);
        holds = heq(lhs, rhs);
    }
    return {holds, e, samples};
}

Int index_bound(unsigned s, unsigned long K_order) {
    if (s < 1 || s > 8) throw ParameterError("rank s must be in 1..8");
    if (K_order < 1) throw ParameterError("K order must be >= 1");
    Int r = pow_int(Int(s), 2 * K_order);
    return r * factorial(K_order + 1);
}

} // namespace cremona::weyl
