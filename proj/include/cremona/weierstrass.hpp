#pragma once

// Group law on a Weierstrass curve y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
// in long form, valid in every characteristic (the char-2 cases go through the
// same formulas). Points are affine pairs or the point at infinity.

#include <optional>
#include <utility>
#include <vector>

#include "cremona/errors.hpp"
#include "cremona/gf.hpp"
#include "cremona/ratfunc.hpp"
#include "cremona/upoly.hpp"

namespace cremona::weierstrass {

template <class F>
struct Curve {
    F K;
    typename F::Elem a1, a2, a3, a4, a6;

    using Point = std::optional<std::pair<typename F::Elem, typename F::Elem>>; // nullopt = O

    bool on_curve(const Point& p) const {
        if (!p) return true;
        const auto& [x, y] = *p;
        auto lhs = K.add(K.mul(y, y), K.add(K.mul(K.mul(a1, x), y), K.mul(a3, y)));
        auto rhs = K.add(K.mul(K.mul(x, x), x),
                         K.add(K.mul(a2, K.mul(x, x)), K.add(K.mul(a4, x), a6)));
        return K.eq(lhs, rhs);
    }

    Point neg(const Point& p) const {
        if (!p) return p;
        const auto& [x, y] = *p;
        // -(x, y) = (x, -y - a1 x - a3)
        return std::make_pair(x, K.neg(K.add(y, K.add(K.mul(a1, x), a3))));
    }

    Point add(const Point& p, const Point& r) const {
        if (!p) return r;
        if (!r) return p;
        const auto& [x1, y1] = *p;
        const auto& [x2, y2] = *r;
        typename F::Elem lam, nu;
        if (K.eq(x1, x2)) {
            // r == -p?
            auto negp = neg(p);
            if (K.eq(negp->second, y2)) return std::nullopt;
            // doubling: lambda = (3x^2 + 2 a2 x + a4 - a1 y) / (2y + a1 x + a3)
            auto den = K.add(K.add(y1, y1), K.add(K.mul(a1, x1), a3));
            if (K.is_zero(den)) return std::nullopt; // 2-torsion
            auto x1sq = K.mul(x1, x1);
            auto num = K.sub(K.add(K.add(K.add(x1sq, x1sq), x1sq),
                                   K.add(K.add(K.mul(a2, x1), K.mul(a2, x1)), a4)),
                             K.mul(a1, y1));
            lam = K.div(num, den);
            // nu = (-x^3 + a4 x + 2 a6 - a3 y) / (2y + a1 x + a3)
            auto nun = K.sub(K.add(K.neg(K.mul(x1sq, x1)), K.add(K.mul(a4, x1), K.add(a6, a6))),
                             K.mul(a3, y1));
            nu = K.div(nun, den);
        } else {
            lam = K.div(K.sub(y2, y1), K.sub(x2, x1));
            nu = K.sub(y1, K.mul(lam, x1));
        }
        auto x3 = K.sub(K.sub(K.sub(K.add(K.mul(lam, lam), K.mul(a1, lam)), a2), x1), x2);
        auto y3 = K.sub(K.sub(K.neg(K.mul(K.add(lam, a1), x3)), nu), a3);
        return std::make_pair(x3, y3);
    }

    Point mul(const Point& p, unsigned long k) const {
        Point acc = std::nullopt, base = p;
        while (k) {
            if (k & 1) acc = add(acc, base);
            base = add(base, base);
            k >>= 1;
        }
        return acc;
    }
};

// The characteristic-2 Weierstrass pencil y^2 + xy + t^3 y = x^3 + 1 over
// F_2(t), with the translation point P = (-1, 0) = (1, 0).
struct TranslationDegrees {
    std::vector<long> x_degrees;   // deg_t of x(nP), n = 1..N
    std::vector<long> second_differences;
    bool second_differences_eventually_constant;
    bool second_differences_eventually_periodic; // with period <= 3
    unsigned period;                              // 0 when not periodic
};

TranslationDegrees weierstrass_translation_degrees(unsigned N);

// the curve object over F_2(t), shared by the tests
Curve<RatFuncField<Fp>> lang_pencil_curve();

} // namespace cremona::weierstrass
