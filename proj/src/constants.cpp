#include "cremona/constants.hpp"

#include "cremona/errors.hpp"

namespace cremona::coneoff {

ConstantsTable constants() {
    ConstantsTable t;
    t.delta_U = {"delta_U", Expr::num(900), Real(900L), Provenance::Exact};
    t.r_U = {"r_U", Expr::num(Rat(Int("5000000000000"))), Real(Int("5000000000000")), Provenance::Exact};
    ExprPtr dg = Expr::add(Expr::log(Expr::add(Expr::num(1), Expr::sqrt(Expr::num(2)))), Expr::num(1));
    Real dgv = dg->eval();
    t.delta_G = {"delta_G", dg, std::move(dgv), Provenance::HighPrecision};
    t.parabolic_coneoff_delta = {"parabolic_coneoff_delta",
                                 Expr::mul(Expr::num(16), Expr::num(900)),
                                 Real(14400L), Provenance::Exact};
    t.threshold_lhs = Int("10000000000000");      // 2 r_U
    t.threshold_rhs = Int(200) * Int(16) * 900;   // 200 * (16 delta_U)
    t.rotating_threshold_ok = t.threshold_lhs > t.threshold_rhs;
    return t;
}

EpsilonBound epsilon_threshold(const Real& delta) {
    if (!(delta > Real(0L))) throw ParameterError("delta must be positive");
    // arcosh(1/(4 eps^2)) >= 40 delta  <=>  eps <= 1/(2 sqrt(cosh(40 delta)))
    Real bound = Real(1L) / (Real(2L) * sqrt(cosh(Real(40L) * delta)));
    Real cap = Real(1L) / sqrt(Real(2L));
    EpsilonBound out;
    out.capped = !(bound < cap);
    out.value = out.capped ? cap : bound;
    out.form = Expr::div(
        Expr::num(1),
        Expr::mul(Expr::num(2),
                  Expr::sqrt(Expr::cosh(Expr::mul(Expr::num(40), Expr::sym("delta"))))));
    return out;
}

UniformN uniform_n(const Rat& eps, const Rat& lambda, const Tower& r0) {
    if (eps <= 0 || lambda <= 0) throw ParameterError("eps and lambda must be positive");
    // lambda * 2 arcsinh(n eps / (3 sqrt 2)) >= 4 pi sinh(r0)
    // <=> n >= (3 sqrt 2 / eps) * sinh((2 pi / lambda) * sinh(r0))
    Tower sh = r0.sinh_();
    Tower scaled = Tower(Real(2L) * pi() / Real(lambda)) * sh;
    Tower inner = scaled.sinh_();
    Tower n = (Tower(Real(3L) * sqrt(Real(2L)) / Real(eps)) * inner).ceil_();
    ExprPtr form = Expr::mul(
        Expr::div(Expr::mul(Expr::num(3), Expr::sqrt(Expr::num(2))), Expr::num(eps)),
        Expr::sinh(Expr::mul(Expr::div(Expr::mul(Expr::num(2), Expr::pi()), Expr::num(lambda)),
                             Expr::sinh(Expr::sym("r0")))));
    return {std::move(n), std::move(form)};
}

N0Report n0_pipeline(const Tower& n, unsigned long B_H) {
    if (B_H < 1) throw ParameterError("B_H must be >= 1");
    N0Report rep;
    rep.inner = pow_int(Int(8), 2 * B_H) * factorial(B_H + 1);
    rep.inner_digits = digit_count(rep.inner);

    // independent digit count: 2 B_H log10 8 + sum log10 k
    Real lg = Real(static_cast<long>(2 * B_H)) * log10(Real(8L));
    for (unsigned long k = 2; k <= B_H + 1; ++k) lg = lg + log10(Real(static_cast<long>(k)));
    rep.inner_digits_log10 = static_cast<std::size_t>(to_int_exact(floor(lg)).get_ui()) + 1;

    // (inner)! via lnGamma(inner + 1); inner fits a Real exactly in magnitude
    Real inner_r(rep.inner);
    Real ln_fact = log_gamma(inner_r + Real(1L));
    rep.outer_log10 = ln_fact / log(Real(10.0));
    rep.outer_factorial = Tower::exp_tower(1, ln_fact);
    rep.n0 = n * rep.outer_factorial;
    rep.form = Expr::mul(Expr::sym("n"), Expr::factorial(Expr::num(Rat(rep.inner))));
    return rep;
}

} // namespace cremona::coneoff
