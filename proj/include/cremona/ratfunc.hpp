#pragma once

// Rational functions over a base field: reduced fractions of univariate
// polynomials, with a monic denominator. RatFuncField<F> is itself a field
// object, so generic polynomial and curve code runs over F_p(t) unchanged.

#include <utility>

#include "cremona/upoly.hpp"

namespace cremona {

template <class F>
struct RatFunc {
    UPoly<F> num, den; // den monic, gcd(num, den) = 1; zero is 0/1

    long deg() const { // degree as a map P^1 -> P^1
        return std::max(num.deg(), den.deg());
    }
};

template <class F>
class RatFuncField {
  public:
    using Elem = RatFunc<F>;

    RatFuncField() = default;
    explicit RatFuncField(F base, std::string var = "t") : base_(std::move(base)), var_(std::move(var)) {}

    const F& base() const { return base_; }
    const std::string& variable() const { return var_; }

    Elem make(UPoly<F> num, UPoly<F> den) const {
        if (den.is_zero()) throw DomainError("zero denominator");
        return reduce(std::move(num), std::move(den));
    }
    Elem from_poly(UPoly<F> p) const { return {std::move(p), uconst(base_, base_.one())}; }
    Elem variable_elem() const { return from_poly(umono(base_, base_.one(), 1)); }

    Elem zero() const { return from_poly(UPoly<F>{}); }
    Elem one() const { return from_poly(uconst(base_, base_.one())); }
    Elem from_int(long v) const { return from_poly(uconst(base_, base_.from_int(v))); }
    Elem from_rat(const Rat& r) const { return from_poly(uconst(base_, base_.from_rat(r))); }

    Elem add(const Elem& a, const Elem& b) const {
        return reduce(uadd(base_, umul(base_, a.num, b.den), umul(base_, b.num, a.den)),
                      umul(base_, a.den, b.den));
    }
    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
    Elem neg(const Elem& a) const { return {uneg(base_, a.num), a.den}; }
    Elem mul(const Elem& a, const Elem& b) const {
        return reduce(umul(base_, a.num, b.num), umul(base_, a.den, b.den));
    }
    Elem inv(const Elem& a) const {
        if (a.num.is_zero()) throw DomainError("division by zero in rational function field");
        return reduce(a.den, a.num);
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    bool is_zero(const Elem& a) const { return a.num.is_zero(); }
    bool is_one(const Elem& a) const { return a.den.deg() == 0 && ueq(base_, a.num, a.den); }
    bool eq(const Elem& a, const Elem& b) const {
        return ueq(base_, a.num, b.num) && ueq(base_, a.den, b.den);
    }

    unsigned long characteristic() const { return base_.characteristic(); }

    std::string to_string(const Elem& a) const {
        auto poly_str = [&](const UPoly<F>& p) {
            if (p.is_zero()) return std::string("0");
            std::string s;
            for (long i = p.deg(); i >= 0; --i) {
                const auto& c = p.c[i];
                if (base_.is_zero(c)) continue;
                if (!s.empty()) s += "+";
                if (i == 0 || !base_.is_one(c)) s += base_.to_string(c);
                if (i > 0 && !base_.is_one(c)) s += "*";
                if (i == 1) s += var_;
                if (i > 1) s += var_ + "^" + std::to_string(i);
            }
            return s;
        };
        if (a.den.deg() == 0) return poly_str(a.num);
        return "(" + poly_str(a.num) + ")/(" + poly_str(a.den) + ")";
    }

    template <class Rng>
    Elem sample(Rng& rng) const {
        std::uniform_int_distribution<int> d(0, 2);
        UPoly<F> n, den = uconst(base_, base_.one());
        int dn = d(rng);
        n.c.resize(dn + 1, base_.zero());
        for (auto& c : n.c) c = base_.sample(rng);
        utrim(base_, n);
        return reduce(std::move(n), std::move(den));
    }

    bool operator==(const RatFuncField& o) const { return base_ == o.base_; }

  private:
    F base_;
    std::string var_ = "t";

    Elem reduce(UPoly<F> num, UPoly<F> den) const {
        if (den.is_zero()) throw DomainError("zero denominator");
        if (num.is_zero()) return {UPoly<F>{}, uconst(base_, base_.one())};
        auto g = ugcd(base_, num, den);
        if (g.deg() > 0) {
            num = udiv_exact(base_, num, g);
            den = udiv_exact(base_, den, g);
        }
        auto lc = den.c.back();
        if (!base_.is_one(lc)) {
            auto ilc = base_.inv(lc);
            num = uscale(base_, num, ilc);
            den = uscale(base_, den, ilc);
        }
        return {std::move(num), std::move(den)};
    }
};

} // namespace cremona
