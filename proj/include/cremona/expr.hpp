#pragma once

// Tiny immutable expression trees for the handful of closed forms the
// library reports symbolically (sqrt(2), arcsinh/arcosh values, factorial
// towers). Evaluation is correctly rounded at the working precision.

#include <memory>
#include <string>
#include <vector>

#include "cremona/real.hpp"

namespace cremona {

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

class Expr {
  public:
    enum class Kind { Num, Pi, Sym, Add, Mul, Div, PowInt, Sqrt, Exp, Log, Sinh, Cosh,
                      ArcSinh, ArcCosh, Factorial };

    static ExprPtr num(Rat v);
    static ExprPtr num(long v) { return num(Rat(v)); }
    static ExprPtr pi();
    static ExprPtr sym(std::string name); // free symbol; evaluation throws
    static ExprPtr add(ExprPtr a, ExprPtr b);
    static ExprPtr mul(ExprPtr a, ExprPtr b);
    static ExprPtr div(ExprPtr a, ExprPtr b);
    static ExprPtr pow_int(ExprPtr a, long e);
    static ExprPtr sqrt(ExprPtr a);
    static ExprPtr exp(ExprPtr a);
    static ExprPtr log(ExprPtr a);
    static ExprPtr sinh(ExprPtr a);
    static ExprPtr cosh(ExprPtr a);
    static ExprPtr arcsinh(ExprPtr a);
    static ExprPtr arcosh(ExprPtr a);
    static ExprPtr factorial(ExprPtr a);

    Real eval() const;
    std::string str() const;

    Kind kind() const { return kind_; }
    const Rat& value() const { return value_; }
    long exponent() const { return exponent_; }
    const std::string& name() const { return name_; }
    const std::vector<ExprPtr>& args() const { return args_; }

  private:
    Expr(Kind k, Rat v, long e, std::vector<ExprPtr> args)
        : kind_(k), value_(std::move(v)), exponent_(e), args_(std::move(args)) {}

    Kind kind_;
    Rat value_;
    long exponent_ = 0;
    std::string name_;
    std::vector<ExprPtr> args_;

    static ExprPtr make(Kind k, Rat v, long e, std::vector<ExprPtr> args) {
        return ExprPtr(new Expr(k, std::move(v), e, std::move(args)));
    }
    friend class ExprFactory;
};

inline ExprPtr Expr::num(Rat v) { return make(Kind::Num, std::move(v), 0, {}); }
inline ExprPtr Expr::pi() { return make(Kind::Pi, Rat(0), 0, {}); }
inline ExprPtr Expr::sym(std::string name) {
    auto e = new Expr(Kind::Sym, Rat(0), 0, {});
    e->name_ = std::move(name);
    return ExprPtr(e);
}
inline ExprPtr Expr::add(ExprPtr a, ExprPtr b) { return make(Kind::Add, Rat(0), 0, {std::move(a), std::move(b)}); }
inline ExprPtr Expr::mul(ExprPtr a, ExprPtr b) { return make(Kind::Mul, Rat(0), 0, {std::move(a), std::move(b)}); }
inline ExprPtr Expr::div(ExprPtr a, ExprPtr b) { return make(Kind::Div, Rat(0), 0, {std::move(a), std::move(b)}); }
inline ExprPtr Expr::pow_int(ExprPtr a, long e) { return make(Kind::PowInt, Rat(0), e, {std::move(a)}); }
inline ExprPtr Expr::sqrt(ExprPtr a) { return make(Kind::Sqrt, Rat(0), 0, {std::move(a)}); }
inline ExprPtr Expr::exp(ExprPtr a) { return make(Kind::Exp, Rat(0), 0, {std::move(a)}); }
inline ExprPtr Expr::log(ExprPtr a) { return make(Kind::Log, Rat(0), 0, {std::move(a)}); }
inline ExprPtr Expr::sinh(ExprPtr a) { return make(Kind::Sinh, Rat(0), 0, {std::move(a)}); }
inline ExprPtr Expr::cosh(ExprPtr a) { return make(Kind::Cosh, Rat(0), 0, {std::move(a)}); }
inline ExprPtr Expr::arcsinh(ExprPtr a) { return make(Kind::ArcSinh, Rat(0), 0, {std::move(a)}); }
inline ExprPtr Expr::arcosh(ExprPtr a) { return make(Kind::ArcCosh, Rat(0), 0, {std::move(a)}); }
inline ExprPtr Expr::factorial(ExprPtr a) { return make(Kind::Factorial, Rat(0), 0, {std::move(a)}); }

Real eval_expr(const Expr& e);
std::string expr_to_string(const Expr& e);

inline Real Expr::eval() const { return eval_expr(*this); }
inline std::string Expr::str() const { return expr_to_string(*this); }

} // namespace cremona
