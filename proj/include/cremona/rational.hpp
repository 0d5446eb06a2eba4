#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "cremona/errors.hpp"

namespace cremona {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) { Rat r(num, den); r.canonicalize(); return r; }

inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
    r.canonicalize();
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

// Exact decimal digit count of |z|, z != 0.
inline std::size_t digit_count(const Int& z) {
    if (z == 0) return 1;
    Int a = abs(z);
    std::size_t d = mpz_sizeinbase(a.get_mpz_t(), 10); // exact or one too large
    Int p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, d - 1);
    return a >= p10 ? d : d - 1;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

} // namespace cremona
