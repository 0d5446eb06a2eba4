#pragma once

// Evaluation/interpolation kernel for composing plane maps over F_p when the
// raw composite degree D = deg f * deg g fits below p. Everything is exact:
// dehomogenized composites are interpolated from a (D+1)x(D+1) grid, the
// common factor is removed through per-line univariate gcds, and the
// interpolated quotient triple is certified against every usable line before
// it is accepted (two polynomials of x-degree < m agreeing on m lines are
// equal). Unusable lines are those where some leading y-coefficient
// vanishes or the line gcd jumps above the generic value.

#include <cstdint>
#include <optional>
#include <vector>

#include "cremona/gf.hpp"
#include "cremona/poly3.hpp"

namespace cremona::fpk {

using Row = std::vector<std::uint64_t>;

struct DenseBi {
    // coefficient[j][i] of x^i y^j
    std::vector<Row> c;
    long degy() const { return static_cast<long>(c.size()) - 1; }
};

// dehomogenized values of a homogeneous component on the integer grid
// (a, b) -> p3(a, b, 1), organized per x-line: line[a][b].
std::vector<Row> evaluate_component(const Fp& K, const Poly3<Fp>& p, std::size_t grid);
std::vector<Row> evaluate_component_rect(const Fp& K, const Poly3<Fp>& p, std::size_t xgrid,
                                         std::size_t ygrid);

// univariate Newton interpolation through x = 0..m-1 (finite differences)
Row newton_interpolate(const Fp& K, const Row& values);

struct NormalizedTriple {
    std::array<Poly3<Fp>, 3> comps; // coprime, rehomogenized
    long degree;
};

// Values of the three raw composite components on an (xgrid x ygrid) integer
// grid -> gcd-free homogeneous triple of the composite map. degree_bound is
// an upper bound on the x-degree of every component (the raw composite
// degree); the interpolation uses degree_bound+1 good lines and certifies
// the result against the remaining good lines.
NormalizedTriple normalize_from_values(const Fp& K, std::array<std::vector<Row>, 3> values,
                                       std::size_t xgrid, std::size_t ygrid, long degree_bound);

// Full fast path: substitute g into f. Requires deg f * deg g + 1 <= usable
// grid size (p). Returns nothing when the field is too small.
std::optional<NormalizedTriple> compose_eval(const Fp& K,
                                             const std::array<Poly3<Fp>, 3>& f,
                                             long deg_f,
                                             const std::array<Poly3<Fp>, 3>& g,
                                             long deg_g);

} // namespace cremona::fpk
