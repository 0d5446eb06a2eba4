#pragma once

// Correctly-rounded multiprecision reals (thin RAII layer over MPFR).
// Working precision defaults to 64 decimal digits and is configurable
// through the CREMONA_DIGITS environment variable or set_real_digits().

#include <mpfr.h>

#include <cstdlib>
#include <string>
#include <utility>

#include "cremona/rational.hpp"

namespace cremona {

inline long& real_digits_ref() {
    static long digits = [] {
        if (const char* env = std::getenv("CREMONA_DIGITS")) {
            long d = std::atol(env);
            if (d >= 8 && d <= 100000) return d;
        }
        return 64L;
    }();
    return digits;
}

inline long real_digits() { return real_digits_ref(); }
inline void set_real_digits(long d) { if (d >= 8) real_digits_ref() = d; }

// Working bit precision: requested digits plus guard bits.
inline mpfr_prec_t real_prec() {
    return static_cast<mpfr_prec_t>(real_digits() * 3.3219280948873626 + 48);
}

class Real {
  public:
    Real() { mpfr_init2(x_, real_prec()); mpfr_set_ui(x_, 0, MPFR_RNDN); }
    explicit Real(long v) { mpfr_init2(x_, real_prec()); mpfr_set_si(x_, v, MPFR_RNDN); }
    explicit Real(double v) { mpfr_init2(x_, real_prec()); mpfr_set_d(x_, v, MPFR_RNDN); }
    explicit Real(const Rat& r) {
        mpfr_init2(x_, real_prec());
        mpfr_set_q(x_, r.get_mpq_t(), MPFR_RNDN);
    }
    explicit Real(const Int& z) {
        mpfr_init2(x_, real_prec());
        mpfr_set_z(x_, z.get_mpz_t(), MPFR_RNDN);
    }
    explicit Real(const std::string& s) {
        mpfr_init2(x_, real_prec());
        if (mpfr_set_str(x_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw ParseError("bad real literal '" + s + "'");
    }
    Real(const Real& o) { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(x_, 64); mpfr_swap(x_, o.x_); }
    Real& operator=(Real o) noexcept { mpfr_swap(x_, o.x_); return *this; }
    ~Real() { mpfr_clear(x_); }

    mpfr_ptr get() { return x_; }
    mpfr_srcptr get() const { return x_; }

    friend Real operator+(const Real& a, const Real& b) { Real r; mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN); return r; }
    friend Real operator-(const Real& a, const Real& b) { Real r; mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN); return r; }
    friend Real operator*(const Real& a, const Real& b) { Real r; mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN); return r; }
    friend Real operator/(const Real& a, const Real& b) { Real r; mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN); return r; }
    Real operator-() const { Real r; mpfr_neg(r.x_, x_, MPFR_RNDN); return r; }

    friend bool operator<(const Real& a, const Real& b)  { return mpfr_cmp(a.x_, b.x_) < 0; }
    friend bool operator>(const Real& a, const Real& b)  { return mpfr_cmp(a.x_, b.x_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) == 0; }

    bool is_zero() const { return mpfr_zero_p(x_); }
    int sign() const { return mpfr_sgn(x_); }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

    std::string str(long digits = 0) const {
        if (digits <= 0) digits = real_digits();
        char* raw = nullptr;
        mpfr_asprintf(&raw, "%.*Rg", static_cast<int>(digits), x_);
        std::string s(raw);
        mpfr_free_str(raw);
        return s;
    }

  private:
    mpfr_t x_;
};

#define CREMONA_REAL_FN1(name, fn) \
    inline Real name(const Real& a) { Real r; fn(r.get(), a.get(), MPFR_RNDN); return r; }

CREMONA_REAL_FN1(sqrt, mpfr_sqrt)
CREMONA_REAL_FN1(exp, mpfr_exp)
CREMONA_REAL_FN1(log, mpfr_log)
CREMONA_REAL_FN1(log2, mpfr_log2)
CREMONA_REAL_FN1(log10, mpfr_log10)
CREMONA_REAL_FN1(sinh, mpfr_sinh)
CREMONA_REAL_FN1(cosh, mpfr_cosh)
CREMONA_REAL_FN1(asinh, mpfr_asinh)
CREMONA_REAL_FN1(acosh, mpfr_acosh)
CREMONA_REAL_FN1(expm1, mpfr_expm1)
CREMONA_REAL_FN1(log1p, mpfr_log1p)
CREMONA_REAL_FN1(abs, mpfr_abs)

#undef CREMONA_REAL_FN1

inline Real pi()  { Real r; mpfr_const_pi(r.get(), MPFR_RNDN); return r; }
inline Real ln2() { Real r; mpfr_const_log2(r.get(), MPFR_RNDN); return r; }

inline Real pow(const Real& a, long e) {
    Real r;
    mpfr_pow_si(r.get(), a.get(), e, MPFR_RNDN);
    return r;
}

inline Real ceil(const Real& a) { Real r; mpfr_ceil(r.get(), a.get()); return r; }
inline Real floor(const Real& a) { Real r; mpfr_floor(r.get(), a.get()); return r; }

inline Int to_int_exact(const Real& a) {
    Int z;
    mpfr_get_z(z.get_mpz_t(), a.get(), MPFR_RNDZ);
    return z;
}

// ln Gamma(x) for x > 0 via Stirling with explicit correction terms.
// Used for digit estimates of factorials whose argument exceeds any
// feasible exact computation; relative error far below working precision
// for the huge arguments it is applied to.
inline Real log_gamma(const Real& x) {
    Real r;
    int sgn;
    mpfr_lgamma(r.get(), &sgn, x.get(), MPFR_RNDN);
    return r;
}

} // namespace cremona
