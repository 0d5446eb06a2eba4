#include "cremona/expr.hpp"

#include "cremona/errors.hpp"

namespace cremona {

Real eval_expr(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind()) {
        case K::Num: return Real(e.value());
        case K::Pi: return pi();
        case K::Sym: throw DomainError("cannot evaluate free symbol '" + e.name() + "'");
        case K::Add: return eval_expr(*e.args()[0]) + eval_expr(*e.args()[1]);
        case K::Mul: return eval_expr(*e.args()[0]) * eval_expr(*e.args()[1]);
        case K::Div: return eval_expr(*e.args()[0]) / eval_expr(*e.args()[1]);
        case K::PowInt: return pow(eval_expr(*e.args()[0]), e.exponent());
        case K::Sqrt: return sqrt(eval_expr(*e.args()[0]));
        case K::Exp: return exp(eval_expr(*e.args()[0]));
        case K::Log: return log(eval_expr(*e.args()[0]));
        case K::Sinh: return sinh(eval_expr(*e.args()[0]));
        case K::Cosh: return cosh(eval_expr(*e.args()[0]));
        case K::ArcSinh: return asinh(eval_expr(*e.args()[0]));
        case K::ArcCosh: return acosh(eval_expr(*e.args()[0]));
        case K::Factorial: {
            // Gamma(x+1); arguments are far too large for exact factorials
            // whenever this node appears.
            Real x = eval_expr(*e.args()[0]);
            return exp(log_gamma(x + Real(1L)));
        }
    }
    throw InternalError("unhandled expression node");
}

std::string expr_to_string(const Expr& e) {
    using K = Expr::Kind;
    auto arg = [&](std::size_t i) { return expr_to_string(*e.args()[i]); };
    switch (e.kind()) {
        case K::Num: return e.value().get_str();
        case K::Pi: return "pi";
        case K::Sym: return e.name();
        case K::Add: return "(" + arg(0) + " + " + arg(1) + ")";
        case K::Mul: return "(" + arg(0) + " * " + arg(1) + ")";
        case K::Div: return "(" + arg(0) + " / " + arg(1) + ")";
        case K::PowInt: return "(" + arg(0) + ")^" + std::to_string(e.exponent());
        case K::Sqrt: return "sqrt(" + arg(0) + ")";
        case K::Exp: return "exp(" + arg(0) + ")";
        case K::Log: return "log(" + arg(0) + ")";
        case K::Sinh: return "sinh(" + arg(0) + ")";
        case K::Cosh: return "cosh(" + arg(0) + ")";
        case K::ArcSinh: return "arcsinh(" + arg(0) + ")";
        case K::ArcCosh: return "arcosh(" + arg(0) + ")";
        case K::Factorial: return "(" + arg(0) + ")!";
    }
    throw InternalError("unhandled expression node");
}

} // namespace cremona
