#pragma once

// Z^{1,9} with the anti-canonical vector xi9 = 3e0 - e1 - ... - e9, the
// E9 root basis and its reflections, the translation embedding
// iota: E8 -> W9, horospherical translation lengths, and the two
// group-theoretic counting facts used by the passage from P* to uniform
// powers (central power identity, index bound).

#include <optional>
#include <vector>

#include "cremona/expr.hpp"
#include "cremona/lorentz.hpp"

namespace cremona::weyl {

using lorentz::LatticeIsometry;

inline constexpr std::size_t rank9 = 9;

std::vector<Int> xi9();                       // 3e0 - e1 - ... - e9
std::vector<Int> root(std::size_t i);         // alpha_0 = e0-e1-e2-e3, alpha_i = e_i - e_{i+1}
Rat inner_int(const std::vector<Int>& u, const std::vector<Int>& v);

// Generic analogues in Z^{1,n} (used for the rank-10 Coxeter element).
std::vector<Int> root_general(std::size_t n, std::size_t i);
LatticeIsometry reflection_general(std::size_t n, std::size_t i);

// s_i : x -> x + (x.alpha_i) alpha_i, an involution fixing xi9.
LatticeIsometry reflection(std::size_t i);

// Translation class w modulo Z xi9, stored by an integral representative
// with w.xi9 = 0.
struct E8Class {
    std::vector<Int> w;

    explicit E8Class(std::vector<Int> rep); // validates w.xi9 = 0
    bool same_class(const E8Class& other) const; // equality mod Z xi9
};

// iota(w) : v -> v - (v.xi9) w + ((w.v) - (v.xi9)(w.w)/2) xi9.
LatticeIsometry iota(const E8Class& w);

// Extracts w with iota(w) = g, or throws when g is not a P* translation.
E8Class iota_inverse(const LatticeIsometry& g);

// P* = iota(E8): g fixes xi9 and acts trivially on xi9-perp / Z xi9.
bool membership_pstar(const LatticeIsometry& g);

struct TranslationLength {
    Rat cosh_hyperbolic;   // e0 . g(e0), exact
    ExprPtr euclidean;     // (eps/3) * 2 sinh(arcosh(c)/2) as a closed form
    Real euclidean_value;
};
TranslationLength translation_length(const LatticeIsometry& g, const Rat& eps);

struct DeltaBounds {
    ExprPtr euclidean; // n eps sqrt(2) / 3
    ExprPtr hyperbolic; // 2 arcsinh(n eps / (3 sqrt 2))
    Real euclidean_value;
    Real hyperbolic_value;
};
DeltaBounds delta_bounds(const Rat& eps, unsigned long n);

// Verifies (fg)^m = g^m f^m c^{m(m+1)/2} for sampled f, g in the mod-k
// Heisenberg group (upper unitriangular 3x3), where fg = gfc.
struct CentralPowerReport {
    bool holds;
    unsigned long exponent; // m(m+1)/2
    unsigned long samples;
};
CentralPowerReport central_power_identity_check(unsigned long m, unsigned long k,
                                                unsigned long samples = 32,
                                                unsigned long seed = 1);

// s^{2 K_order} * (K_order + 1)!, exact.
Int index_bound(unsigned s, unsigned long K_order);

} // namespace cremona::weyl
