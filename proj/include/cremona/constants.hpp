#pragma once

// The explicit constants of the cone-off construction and the pipeline from
// them to the uniform power n0: delta_U = 900, r_U = 5*10^12,
// delta_G = ln(1+sqrt 2)+1, the threshold on epsilon, the uniform n with
// lambda * Delta(n eps) >= 4 pi sinh(r0), and
// n0 = n * (8^{2 B_H} * (B_H+1)!)!.

#include <string>
#include <vector>

#include "cremona/expr.hpp"
#include "cremona/tower.hpp"

namespace cremona::coneoff {

enum class Provenance { Exact, HighPrecision, Bracketed };

struct NamedValue {
    std::string name;
    ExprPtr form;     // closed form (may be a plain number)
    Real value;       // evaluation at working precision
    Provenance provenance;
};

struct ConstantsTable {
    NamedValue delta_U;               // 900
    NamedValue r_U;                   // 5 * 10^12
    NamedValue delta_G;               // ln(1+sqrt2) + 1
    NamedValue parabolic_coneoff_delta; // 16 * delta_U
    bool rotating_threshold_ok;       // 2 r_U > 200 * (16 delta_U), exact integers
    Int threshold_lhs, threshold_rhs;
    std::vector<const NamedValue*> all() const {
        return {&delta_U, &r_U, &delta_G, &parabolic_coneoff_delta};
    }
};

ConstantsTable constants();

struct EpsilonBound {
    ExprPtr form;   // min(1/(2 sqrt(cosh(40 delta))), 1/sqrt 2)
    Real value;
    bool capped;    // whether the 1/sqrt2 cap was the binding constraint
};

// Largest eps with arcosh(1/(4 eps^2)) >= 40 delta, capped at 1/sqrt 2.
EpsilonBound epsilon_threshold(const Real& delta);

struct UniformN {
    Tower n;        // ceil((3 sqrt2 / eps) * sinh((2 pi / lambda) * sinh(r0)))
    ExprPtr form;
};

// Smallest n with lambda * Delta(n * eps) >= 4 pi sinh(r0).
UniformN uniform_n(const Rat& eps, const Rat& lambda, const Tower& r0);

struct N0Report {
    Int inner;                  // 8^{2 B_H} * (B_H + 1)!, exact
    std::size_t inner_digits;   // exact digit count
    std::size_t inner_digits_log10; // floor(log10) + 1 via summation, must agree
    Tower outer_factorial;      // (inner)!
    Real outer_log10;           // log10 of (inner)!
    Tower n0;                   // n * (inner)!
    ExprPtr form;
};

N0Report n0_pipeline(const Tower& n, unsigned long B_H = 40320);

} // namespace cremona::coneoff
