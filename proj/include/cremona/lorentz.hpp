#pragma once

// The lattice Z^{1,n} with the standard odd unimodular form
// diag(1, -1, ..., -1), horoballs around rational boundary points, the
// separation bound between horoballs, and exact classification of lattice
// isometries by orbit growth and spectral radius.

#include <optional>
#include <string>
#include <vector>

#include "cremona/matrix.hpp"
#include "cremona/rational.hpp"
#include "cremona/real.hpp"

namespace cremona::lorentz {

// Vector in Z^{1,n} (x) Q, coordinates (a0, ..., an) in the basis (e0, ..., en).
struct LorentzVector {
    std::vector<Rat> a;

    LorentzVector() = default;
    explicit LorentzVector(std::vector<Rat> coeffs);
    static LorentzVector basis(std::size_t rank, std::size_t i); // e_i in Z^{1,rank}

    std::size_t rank() const { return a.size() - 1; }
    friend bool operator==(const LorentzVector&, const LorentzVector&) = default;
};

Rat inner(const LorentzVector& u, const LorentzVector& v);

// Primitive integral isotropic vector with positive e0 part.
struct BoundaryClass {
    std::vector<Int> v;

    explicit BoundaryClass(std::vector<Int> coeffs); // validates the invariants
    std::size_t rank() const { return v.size() - 1; }
    LorentzVector vec() const;
    bool same_ray(const BoundaryClass& other) const;
};

struct Horoball {
    BoundaryClass xi;
    Rat eps;

    Horoball(BoundaryClass c, Rat e);
    // Membership 0 < v.xi <= eps for a norm-1 point v.
    bool contains(const LorentzVector& v) const;
};

// (u.v)^2 / (u.u v.v) and arcosh of its square root; representatives need not
// be normalized to norm one.
struct CoshDistance {
    Rat cosh_sq;
    Real distance;
};
CoshDistance cosh_distance(const LorentzVector& u, const LorentzVector& v);

// cosh of the distance between the entry points of the geodesic [x1,x2] on
// the two horospheres at level eps: m/(4 eps^2) + eps^2/m with m = x1.x2.
Rat horoball_gap(const BoundaryClass& x1, const BoundaryClass& x2, const Rat& eps);

struct SeparationReport {
    std::optional<Rat> min_gap; // empty when the family has no pairs
    Rat bound;                  // 1/(4 eps^2)
    bool separated;
    std::size_t pairs;
};
SeparationReport separation_check(const std::vector<BoundaryClass>& family, const Rat& eps);

// Integer matrix with M^T J M = J, preserving the upper sheet.
struct LatticeIsometry {
    IMat m;

    explicit LatticeIsometry(IMat mat); // validates form and orientation
    std::size_t rank() const { return m.rows() - 1; }
    LorentzVector apply(const LorentzVector& v) const;
    std::vector<Int> apply_int(const std::vector<Int>& v) const;
    friend bool operator==(const LatticeIsometry&, const LatticeIsometry&) = default;
};

enum class IsometryType { Elliptic, Parabolic, Loxodromic, Inconclusive };
enum class ParabolicKind { None, Jonquieres, Halphen };

struct Classification {
    IsometryType type = IsometryType::Inconclusive;
    ParabolicKind parabolic = ParabolicKind::None;
    std::optional<Real> spectral_radius;     // loxodromic only
    std::optional<Real> translation_length;  // log of the spectral radius
    std::optional<unsigned> order;           // finite order, when detected
    std::vector<Int> orbit;                  // (M^k e0).e0 for k = 0..horizon
};

// Loxodromic iff the spectral radius exceeds 1 (decided exactly by Sturm
// counts on the characteristic polynomial). At spectral radius 1 the orbit
// values (M^k e0).e0 decide: finite order or a bounded orbit window gives
// Elliptic, eventually constant positive first/second differences give the
// Jonquieres/Halphen parabolic kinds, anything else is Inconclusive.
Classification classify_isometry(const LatticeIsometry& m, unsigned horizon = 32);

// --- line-oriented text format ------------------------------------------
// `lorentz n=<rank> [a0 a1 ... an]`, entries integers or p/q.
std::string format_vector(const LorentzVector& v);
LorentzVector parse_vector(const std::string& line);
IMat parse_matrix_text(const std::string& text); // whitespace-separated ints, square
std::string format_matrix(const IMat& m);

} // namespace cremona::lorentz
