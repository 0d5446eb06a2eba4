#pragma once

// Field-object pattern: arithmetic is routed through a small context value
// so that runtime-parameterized fields (F_p, F_q, F_p(t)) and GMP rationals
// share the same generic polynomial code.

#include <cstdint>
#include <random>
#include <string>

#include "cremona/rational.hpp"

namespace cremona {

// The rationals. Stateless context around mpq_class.
struct QQ {
    using Elem = Rat;

    Elem zero() const { return Rat(0); }
    Elem one() const { return Rat(1); }
    Elem from_int(long v) const { return Rat(v); }
    Elem from_rat(const Rat& r) const { return r; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw DomainError("division by zero in Q");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    unsigned long characteristic() const { return 0; }
    std::string to_string(const Elem& a) const { return a.get_str(); }

    template <class Rng>
    Elem sample(Rng& rng) const {
        std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
        Rat r(num(rng), den(rng));
        r.canonicalize();
        return r;
    }

    bool operator==(const QQ&) const { return true; }
};

} // namespace cremona
