#pragma once

// The twisted polynomial ring k[Fr] over F_q (multiplication twisted by the
// Frobenius: (a Fr^i)(b Fr^j) = a b^{p^i} Fr^{i+j}), 2x2 matrices over it,
// additive-map automorphisms of the affine plane, and the constructive
// decomposition into alternating affine / elementary factors that yields
// dynamical degrees.

#include <optional>
#include <string>
#include <vector>

#include "cremona/gf.hpp"
#include "cremona/rational.hpp"
#include "cremona/upoly.hpp"

namespace cremona::skew {

// coefficient vector indexed by Frobenius power; phi(t) = sum a_j t^{p^j}
struct SkewPoly {
    std::vector<GFq::Elem> a;

    long deg() const { return static_cast<long>(a.size()) - 1; } // -1 encodes zero
    bool is_zero() const { return a.empty(); }
};

SkewPoly skew_trim(const GFq& K, SkewPoly s);
SkewPoly skew_const(const GFq& K, GFq::Elem c);
SkewPoly skew_frobenius_term(const GFq& K, GFq::Elem c, unsigned j);
SkewPoly skew_add(const GFq& K, const SkewPoly& x, const SkewPoly& y);
SkewPoly skew_neg(const GFq& K, const SkewPoly& x);
SkewPoly skew_mul(const GFq& K, const SkewPoly& x, const SkewPoly& y);
bool skew_eq(const GFq& K, const SkewPoly& x, const SkewPoly& y);

// value of the additive polynomial at a field point
GFq::Elem skew_eval(const GFq& K, const SkewPoly& x, const GFq::Elem& v);

// the additive polynomial sum a_j t^{p^j} as an ordinary univariate
UPoly<GFq> skew_to_upoly(const GFq& K, const SkewPoly& x);

// symbolic + sampled additivity test of an arbitrary univariate polynomial
bool additivity_check(const GFq& K, const UPoly<GFq>& phi, unsigned samples = 32,
                      unsigned long seed = 1);

struct SkewMatrix {
    SkewPoly a, b, c, d; // (x, y) -> (a(x) + b(y), c(x) + d(y))
};

SkewMatrix skew_mat_mul(const GFq& K, const SkewMatrix& m1, const SkewMatrix& m2);
bool skew_mat_eq(const GFq& K, const SkewMatrix& m1, const SkewMatrix& m2);
SkewMatrix skew_mat_identity(const GFq& K);

// element of (Ga x Ga) |x GL2(k[Fr]): x -> M(x) + t
struct PAutElement {
    SkewMatrix linear;
    GFq::Elem tu, tv;
};

PAutElement paut_identity(const GFq& K);
PAutElement paut_compose(const GFq& K, const PAutElement& f, const PAutElement& g); // f o g
bool paut_eq(const GFq& K, const PAutElement& f, const PAutElement& g);
std::pair<GFq::Elem, GFq::Elem> paut_apply(const GFq& K, const PAutElement& f,
                                           const GFq::Elem& x, const GFq::Elem& y);

// polynomial degree of the map (p^max Fr-degree; 1 for affine maps)
Int paut_degree(const GFq& K, const PAutElement& f);

enum class FactorTag { Aff, PEl };

struct Factor {
    FactorTag tag;
    PAutElement map;
};

// alternating word, leftmost factor applied last: f = w[0] o w[1] o ... o w[back]
struct AmalgamWord {
    std::vector<Factor> factors;
    bool cyclically_reduced() const;
};

bool in_aff(const GFq& K, const PAutElement& f);
bool in_pel(const GFq& K, const PAutElement& f);
bool in_s(const GFq& K, const PAutElement& f); // Aff intersect pEl: upper-triangular affine

// Constructive reduction: strips the top of c against a by the pivot
// u = c_n (Fr^{n-m}(a_m))^{-1}, swapping rows through J when needed, until an
// elementary or affine base case remains. The product of the returned word
// equals the input exactly; the complexity deg a + deg c strictly decreases
// along the recorded steps. Throws when the reduction stalls (the matrix is
// not invertible over k[Fr]).
struct Decomposition {
    AmalgamWord word;
    std::vector<long> complexity_trace;
};
Decomposition amalgam_decompose(const GFq& K, const PAutElement& f);

// conjugator prefix c and cyclically reduced word w with f = c o w o c^{-1}
struct CyclicReduction {
    std::vector<Factor> conjugator;
    AmalgamWord word;
};
CyclicReduction cyclically_reduce(const GFq& K, AmalgamWord w);

PAutElement word_product(const GFq& K, const AmalgamWord& w);
PAutElement paut_inverse(const GFq& K, const PAutElement& f);

// lambda(f): 1 for words of length <= 1, else the product of the factor
// degrees of the cyclically reduced word; always a power of p
Int dynamical_degree(const GFq& K, const PAutElement& f);

struct NormalizesReport {
    bool all_translations;
    bool induced_additive;
    bool induced_matches_f; // when f fixes the origin
};
NormalizesReport normalizes_translations(const GFq& K, const PAutElement& f,
                                         unsigned samples = 24, unsigned long seed = 1);

// --- text format ------------------------------------------------------------
// skew polynomials: "a0 + a1*F + a2*F^2" with F_q coefficients written as
// polynomials in the generator g
std::string skew_to_string(const GFq& K, const SkewPoly& s);
SkewPoly parse_skew(const GFq& K, const std::string& text);

} // namespace cremona::skew
