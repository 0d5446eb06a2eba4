#pragma once

// Exact characteristic polynomials and real-root machinery for integer
// matrices: Faddeev-LeVerrier over Q, Sturm chains, and bisection isolation
// of the largest real root.

#include <vector>

#include "cremona/matrix.hpp"
#include "cremona/real.hpp"
#include "cremona/upoly.hpp"

namespace cremona {

// Monic characteristic polynomial det(xI - M), exact over Q.
inline UPoly<QQ> char_poly(const IMat& m) {
    if (m.rows() != m.cols()) throw DimensionError("char poly of non-square matrix");
    const std::size_t n = m.rows();
    QQ K;
    QMat A = to_rational(m);
    QMat Mk = A;
    std::vector<Rat> coeff(n + 1, Rat(0));
    coeff[n] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Rat tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += Mk(i, i);
        Rat ck = -tr / Rat(static_cast<long>(k));
        coeff[n - k] = ck;
        if (k < n) {
            QMat S = Mk;
            for (std::size_t i = 0; i < n; ++i) S(i, i) += ck;
            Mk = A * S;
        }
    }
    UPoly<QQ> p{std::move(coeff)};
    utrim(K, p);
    return p;
}

inline UPoly<QQ> squarefree_part(const UPoly<QQ>& p) {
    QQ K;
    auto g = ugcd(K, p, uderiv(K, p));
    if (g.deg() <= 0) return umonic(K, p);
    return umonic(K, udiv_exact(K, p, g));
}

// Sturm chain of a squarefree polynomial.
inline std::vector<UPoly<QQ>> sturm_chain(const UPoly<QQ>& p) {
    QQ K;
    std::vector<UPoly<QQ>> chain;
    chain.push_back(p);
    chain.push_back(uderiv(K, p));
    while (!chain.back().is_zero() && chain.back().deg() > 0) {
        auto r = udivmod(K, chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(uneg(K, r));
    }
    return chain;
}

inline int sturm_variations(const std::vector<UPoly<QQ>>& chain, const Rat& x) {
    QQ K;
    int var = 0, prev = 0;
    for (const auto& p : chain) {
        Rat v = ueval(K, p, x);
        int s = sgn(v);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

// Number of distinct real roots in (a, b].
inline int roots_in(const std::vector<UPoly<QQ>>& chain, const Rat& a, const Rat& b) {
    return sturm_variations(chain, a) - sturm_variations(chain, b);
}

// Cauchy bound: all roots have |x| <= 1 + max |a_i / a_n|.
inline Rat cauchy_bound(const UPoly<QQ>& p) {
    Rat m(0);
    for (std::size_t i = 0; i + 1 < p.c.size(); ++i) {
        Rat a = abs(p.c[i] / p.c.back());
        if (a > m) m = a;
    }
    return m + 1;
}

// Largest real root strictly greater than `low`, isolated by Sturm bisection
// to 2^-bits, or nothing if no such root exists. Exact rational bracket.
struct RootBracket {
    Rat lo, hi;
    Real mid() const { return Real((lo + hi) / 2); }
};

inline bool largest_root_above(const UPoly<QQ>& p, const Rat& low, int bits, RootBracket& out) {
    auto sf = squarefree_part(p);
    auto chain = sturm_chain(sf);
    Rat hi = cauchy_bound(sf);
    if (hi <= low) return false;
    if (roots_in(chain, low, hi) == 0) return false;
    Rat lo = low;
    Rat width = hi - lo;
    Rat limit = Rat(1);
    for (int i = 0; i < bits; ++i) limit /= 2;
    while (hi - lo > limit) {
        Rat mid = (lo + hi) / 2;
        if (roots_in(chain, mid, hi) >= 1)
            lo = mid;
        else
            hi = mid;
    }
    out = {lo, hi};
    return true;
}

} // namespace cremona
