#pragma once

// Explicit birational constructions: the standard quadratic involution, the
// Jonquieres involution attached to a smooth cubic and a point on it, its
// composition for two points (a parabolic twist), and the loxodromic
// conjugation example s g s^{-1} = g^q built from a monomial map composed
// with an elementary shift.

#include <array>
#include <optional>
#include <vector>

#include "cremona/birmap.hpp"
#include "cremona/gf.hpp"

namespace cremona::birmap {

// sigma[x:y:z] = [yz : zx : xy]
template <class F>
HomogeneousMap<F> standard_quadratic(const F& K) {
    typename HomogeneousMap<F>::Components c{
        p3_mono(K, Mono{0, 1, 1}, K.one()),
        p3_mono(K, Mono{1, 0, 1}, K.one()),
        p3_mono(K, Mono{1, 1, 0}, K.one())};
    auto d = c;
    return HomogeneousMap<F>(K, std::move(c), std::move(d));
}

// substitute the linear change of coordinates v -> T v into p
template <class F>
Poly3<F> substitute_linear(const F& K, const Poly3<F>& p,
                           const std::array<std::array<typename F::Elem, 3>, 3>& T) {
    std::array<Poly3<F>, 3> rows;
    for (int r = 0; r < 3; ++r) {
        p3_add_term(K, rows[r], Mono{1, 0, 0}, T[r][0]);
        p3_add_term(K, rows[r], Mono{0, 1, 0}, T[r][1]);
        p3_add_term(K, rows[r], Mono{0, 0, 1}, T[r][2]);
    }
    Poly3<F> out;
    for (const auto& [m, c] : p.t) {
        auto term = p3_mono(K, Mono{}, c);
        term = p3_mul(K, term, p3_pow(K, rows[0], m.i));
        term = p3_mul(K, term, p3_pow(K, rows[1], m.j));
        term = p3_mul(K, term, p3_pow(K, rows[2], m.k));
        out = p3_add(K, out, term);
    }
    return out;
}

// Smoothness of a plane cubic over F_p by scanning for singular points.
bool cubic_is_smooth_fp(const Fp& K, const Poly3<Fp>& C);

template <class F>
Poly3<F> partial_derivative(const F& K, const Poly3<F>& p, int var) {
    Poly3<F> r;
    for (const auto& [m, c] : p.t) {
        std::uint32_t e = var == 0 ? m.i : var == 1 ? m.j : m.k;
        if (!e) continue;
        Mono mm = m;
        if (var == 0) --mm.i;
        else if (var == 1) --mm.j;
        else --mm.k;
        p3_add_term(K, r, mm, K.mul(c, K.from_int(static_cast<long>(e))));
    }
    return r;
}

// Jonquieres involution s_q: fixes the cubic C pointwise and preserves the
// pencil of lines through q in C. On each line through q it is the unique
// involution fixing the two residual intersections with C. Moving q to
// [0:0:1] and writing C(vx, vy, u) = A u^2 v + B u v^2 + C3 v^3 gives
//   s[x : y : z] = [x (2Az + B) : y (2Az + B) : -(Bz + 2 C3)].
template <class F>
HomogeneousMap<F> jonquieres_involution(const F& K, const Poly3<F>& cubic,
                                        const std::array<typename F::Elem, 3>& q,
                                        bool check_smooth = true);

template <class F>
HomogeneousMap<F> blanc_twist(const F& K, const Poly3<F>& cubic,
                              const std::array<typename F::Elem, 3>& q,
                              const std::array<typename F::Elem, 3>& qp,
                              bool check_smooth = true) {
    bool equal = true;
    // projective comparison of q and q'
    for (int i = 0; i < 3 && equal; ++i)
        for (int j = i + 1; j < 3 && equal; ++j)
            equal = K.eq(K.mul(q[i], qp[j]), K.mul(q[j], qp[i]));
    if (equal) throw DomainError("twist needs two distinct points of the cubic");
    auto s1 = jonquieres_involution(K, cubic, q, check_smooth);
    auto s2 = jonquieres_involution(K, cubic, qp, false);
    return compose(s1, s2);
}

// x^3 + y^3 + z^3 + xyz (the example cubic away from characteristic 7)
template <class F>
Poly3<F> fermat_like_cubic(const F& K) {
    Poly3<F> c;
    p3_add_term(K, c, Mono{3, 0, 0}, K.one());
    p3_add_term(K, c, Mono{0, 3, 0}, K.one());
    p3_add_term(K, c, Mono{0, 0, 3}, K.one());
    p3_add_term(K, c, Mono{1, 1, 1}, K.one());
    return c;
}

// y^2 z = x^3 + z^3 (the characteristic-7 example cubic)
template <class F>
Poly3<F> char7_cubic(const F& K) {
    Poly3<F> c;
    p3_add_term(K, c, Mono{0, 2, 1}, K.one());
    p3_add_term(K, c, Mono{3, 0, 0}, K.neg(K.one()));
    p3_add_term(K, c, Mono{0, 0, 3}, K.neg(K.one()));
    return c;
}

// ---- the congruence example ------------------------------------------------

struct CongruenceLift {
    long a, b, c, d; // integer matrix with det +-1
    long e;          // shift exponent, e = m mod n
    bool ordered;    // e > c > d > a > b > 1
    Int predicted_degree; // max(a + b e, c + d e); -1 when entries are signed
};

struct CongruenceCertificate {
    unsigned long m, q, n;
    std::uint64_t alpha, beta; // diagonal weights in F_p
    CongruenceLift lift;                  // the lift used for the map identities
    std::optional<CongruenceLift> ordered_lift;
    bool conjugation_ok;                  // s g s^{-1} = g^q, exact
    std::vector<bool> commutator_ok;      // [s^k, g] = g^{q^k - 1}, k = 1..K
    std::vector<Int> degree_by_compose;   // deg s^k from exact composition
    std::vector<Int> small_recursion;     // exact recursion degrees for the working lift
    std::vector<Int> ordered_degrees;     // deg s'^k from the exact factored recursion
    std::vector<Int> ordered_degrees_compose; // cross-check (prefix)
};

// Exact degrees of (f o h)^k for f = (x^a y^b, x^c y^d), h = (y, x + y^e),
// by the product/max recursion on the affine components; every max is over
// two distinct integers, so each step is exact. Throws on a degree tie.
std::vector<Int> shift_monomial_degrees(long a, long b, long c, long d, long e, unsigned K);

CongruenceCertificate congruence_example(const Fp& K, unsigned long m, unsigned long q,
                                         std::optional<long> e = std::nullopt,
                                         unsigned commutator_k = 3,
                                         unsigned degree_k = 3);

// ---- implementation of the templated pieces --------------------------------

template <class F>
HomogeneousMap<F> jonquieres_involution(const F& K, const Poly3<F>& cubic,
                                        const std::array<typename F::Elem, 3>& q,
                                        bool check_smooth) {
    if (K.characteristic() == 2)
        throw DomainError("the involution does not exist in characteristic 2");
    if (cubic.is_zero() || !cubic.is_homogeneous() || cubic.degree() != 3)
        throw DomainError("curve must be a homogeneous cubic");
    if (!K.is_zero(p3_eval(K, cubic, q[0], q[1], q[2])))
        throw DomainError("the point does not lie on the cubic");
    if (check_smooth) {
        if constexpr (std::is_same_v<F, Fp>) {
            if (!cubic_is_smooth_fp(K, cubic)) throw DomainError("cubic is singular");
        }
        // other fields: smoothness is certified by the caller
    }

    // T with third column q, the other two columns standard basis vectors
    int piv = -1;
    for (int i = 0; i < 3 && piv < 0; ++i)
        if (!K.is_zero(q[i])) piv = i;
    std::array<std::array<typename F::Elem, 3>, 3> T{};
    for (auto& row : T) row = {K.zero(), K.zero(), K.zero()};
    int col = 0;
    for (int i = 0; i < 3; ++i) {
        if (i == piv) continue;
        T[i][col++] = K.one();
    }
    for (int i = 0; i < 3; ++i) T[i][2] = q[i];

    auto Ct = substitute_linear(K, cubic, T);
    Poly3<F> A, B, C3;
    for (const auto& [mn, coef] : Ct.t) {
        if (mn.k == 3) throw InternalError("moved point not on the moved cubic");
        Poly3<F>* target = mn.k == 2 ? &A : mn.k == 1 ? &B : &C3;
        p3_add_term(K, *target, Mono{mn.i, mn.j, 0}, coef);
    }
    if (A.is_zero()) throw DomainError("point is singular on the cubic");

    auto two = K.from_int(2);
    Poly3<F> G = p3_add(K, p3_scale(K, p3_mul(K, A, p3_var(K, 2)), two), B);
    typename HomogeneousMap<F>::Components st{
        p3_mul(K, p3_var(K, 0), G),
        p3_mul(K, p3_var(K, 1), G),
        p3_neg(K, p3_add(K, p3_mul(K, B, p3_var(K, 2)), p3_scale(K, C3, two)))};
    HomogeneousMap<F> s_tilde(K, std::move(st));

    auto lin = linear_map(K, T);
    auto s = compose_forward(compose_forward(lin, s_tilde), lin.inverse());
    // involution contract, checked before the inverse is trusted
    auto square = compose_forward(s, s);
    if (!square.is_identity()) throw InternalError("involution contract failed");
    s.attach_inverse(s.components());
    return s;
}

} // namespace cremona::birmap
