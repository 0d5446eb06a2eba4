#pragma once

// Exact birational self-maps of the projective plane: coprime homogeneous
// component triples, composition with gcd removal, degree sequences, and
// growth classification.

#include <array>
#include <optional>
#include <vector>

#include "cremona/fpcompose.hpp"
#include "cremona/matrix.hpp"
#include "cremona/polygcd.hpp"

namespace cremona::birmap {

using cremona::BPoly;
using cremona::Mono;
using cremona::Poly3;

struct Budget {
    std::size_t max_terms = 4'000'000;   // combined term count of a composite
    std::uint64_t max_degree = 2'000'000;
};

template <class F>
class HomogeneousMap {
  public:
    using Components = std::array<Poly3<F>, 3>;

    struct normalized_tag {};

    HomogeneousMap(const F& field, Components comps) : K_(field) {
        set_components(std::move(comps));
    }
    HomogeneousMap(const F& field, Components comps, Components inverse_comps)
        : HomogeneousMap(field, std::move(comps)) {
        inv_ = normalized(K_, std::move(inverse_comps));
    }
    // components already coprime (certified upstream); only unit-normalize
    HomogeneousMap(const F& field, Components comps, normalized_tag) : K_(field) {
        c_ = unit_normalized(K_, std::move(comps));
    }

    const F& field() const { return K_; }
    const Components& components() const { return c_; }
    long degree() const {
        for (const auto& p : c_)
            if (!p.is_zero()) return p.degree();
        return -1;
    }
    bool has_inverse() const { return inv_.has_value(); }
    const Components& inverse_components() const {
        if (!inv_) throw DomainError("map carries no inverse");
        return *inv_;
    }
    HomogeneousMap inverse() const {
        if (!inv_) throw DomainError("map carries no inverse");
        return HomogeneousMap(K_, *inv_, c_);
    }
    void attach_inverse(Components inverse_comps) { inv_ = normalized(K_, std::move(inverse_comps)); }

    bool operator==(const HomogeneousMap& o) const {
        for (int t = 0; t < 3; ++t)
            if (!p3_eq(K_, c_[t], o.c_[t])) return false;
        return true;
    }

    bool is_identity() const {
        HomogeneousMap id = identity(K_);
        return *this == id;
    }

    static HomogeneousMap identity(const F& K) {
        return HomogeneousMap(K, {p3_var(K, 0), p3_var(K, 1), p3_var(K, 2)},
                              {p3_var(K, 0), p3_var(K, 1), p3_var(K, 2)});
    }

    static Components unit_normalized(const F& K, Components comps) {
        bool all_zero = true;
        long deg = -1;
        for (const auto& p : comps) {
            if (p.is_zero()) continue;
            all_zero = false;
            if (!p.is_homogeneous()) throw DomainError("map components must be homogeneous");
            if (deg < 0) deg = p.degree();
            else if (deg != p.degree()) throw DomainError("map components must share a degree");
        }
        if (all_zero) throw DomainError("all map components are zero");
        // leading coefficient of the first nonzero component (graded-lex)
        // becomes 1
        for (auto& p : comps) {
            if (p.is_zero()) continue;
            auto s = K.inv(p.leading_coeff());
            if (!K.is_one(s))
                for (auto& q : comps) q = p3_scale(K, q, s);
            break;
        }
        return comps;
    }

    static Components normalized(const F& K, Components comps) {
        bool all_zero = true;
        for (const auto& p : comps) all_zero &= p.is_zero();
        if (all_zero) throw DomainError("all map components are zero");
        auto g = p3_gcd3(K, comps);
        if (g.degree() > 0 || !K.is_one(g.leading_coeff())) {
            for (auto& p : comps) {
                if (p.is_zero()) continue;
                auto q = p3_divide_exact(K, p, g);
                if (!q) throw InternalError("component not divisible by component gcd");
                p = std::move(*q);
            }
        }
        return unit_normalized(K, std::move(comps));
    }

  private:
    F K_;
    Components c_;
    std::optional<Components> inv_;

    void set_components(Components comps) { c_ = normalized(K_, std::move(comps)); }
};

template <class F>
std::size_t map_term_count(const HomogeneousMap<F>& f) {
    std::size_t n = 0;
    for (const auto& p : f.components()) n += p.term_count();
    return n;
}

// f after g (substitute g's components into f), gcd-normalized. Over F_p
// with the raw composite degree well below p, the substitution and the
// common-factor removal run on an evaluation grid (see fpcompose.hpp);
// otherwise the sparse substitution with cached powers is used.
template <class F>
HomogeneousMap<F> compose(const HomogeneousMap<F>& f, const HomogeneousMap<F>& g,
                          const Budget& budget = {}) {
    const F& K = f.field();
    if (!(K == g.field())) throw DomainError("composition over different fields");
    if constexpr (std::is_same_v<F, Fp>) {
        long D = f.degree() * g.degree();
        if (D >= 20) {
            auto fast = fpk::compose_eval(K, f.components(), f.degree(), g.components(),
                                          g.degree());
            if (fast) {
                HomogeneousMap<F> r(K, std::move(fast->comps),
                                    typename HomogeneousMap<F>::normalized_tag{});
                if (f.has_inverse() && g.has_inverse()) {
                    HomogeneousMap<F> gi(K, g.inverse_components());
                    HomogeneousMap<F> fi(K, f.inverse_components());
                    auto comp_inv = compose(gi, fi, budget);
                    r.attach_inverse(comp_inv.components());
                }
                return r;
            }
        }
    }
    const auto& gc = g.components();

    // cache powers of g's components
    std::array<std::vector<Poly3<F>>, 3> pows;
    auto power = [&](int var, std::uint32_t e) -> const Poly3<F>& {
        auto& cache = pows[var];
        if (cache.empty()) cache.push_back(p3_mono(K, Mono{}, K.one()));
        while (cache.size() <= e) {
            cache.push_back(p3_mul(K, cache.back(), gc[var]));
            if (cache.back().term_count() > budget.max_terms)
                throw BudgetError("composition exceeded the term budget",
                                  static_cast<long>(cache.size()));
        }
        return cache[e];
    };

    typename HomogeneousMap<F>::Components out;
    for (int t = 0; t < 3; ++t) {
        Poly3<F> acc;
        for (const auto& [m, coef] : f.components()[t].t) {
            auto term = p3_mul(K, power(0, m.i), power(1, m.j));
            term = p3_mul(K, term, power(2, m.k));
            acc = p3_add(K, acc, p3_scale(K, term, coef));
            if (acc.term_count() > budget.max_terms)
                throw BudgetError("composition exceeded the term budget", 0);
        }
        out[t] = std::move(acc);
    }
    bool all_zero = true;
    for (const auto& p : out) all_zero &= p.is_zero();
    if (all_zero)
        throw DomainError("degenerate composition: image lies in the indeterminacy locus");
    HomogeneousMap<F> r(K, std::move(out));
    if (f.has_inverse() && g.has_inverse()) {
        HomogeneousMap<F> gi(K, g.inverse_components());
        HomogeneousMap<F> fi(K, f.inverse_components());
        auto comp_inv = compose(gi, fi, budget); // (f o g)^{-1} = g^{-1} o f^{-1}
        r.attach_inverse(comp_inv.components());
    }
    return r;
}

// like compose but never tries to propagate inverses (cheaper for iteration)
template <class F>
HomogeneousMap<F> compose_forward(const HomogeneousMap<F>& f, const HomogeneousMap<F>& g,
                                  const Budget& budget = {}) {
    HomogeneousMap<F> fs(f.field(), f.components());
    HomogeneousMap<F> gs(g.field(), g.components());
    return compose(fs, gs, budget);
}

struct DegreeSequence {
    std::vector<Int> values; // deg f^1 .. deg f^N
    bool truncated = false;  // budget ran out
    long completed = 0;
};

template <class F>
DegreeSequence degree_sequence(const HomogeneousMap<F>& f, unsigned N,
                               const Budget& budget = {}) {
    if (N < 1) throw ParameterError("degree sequence needs N >= 1");
    DegreeSequence seq;
    HomogeneousMap<F> power(f.field(), f.components());
    seq.values.emplace_back(power.degree());
    seq.completed = 1;
    for (unsigned n = 2; n <= N; ++n) {
        try {
            power = compose_forward(f, power, budget);
        } catch (const BudgetError&) {
            seq.truncated = true;
            break;
        }
        if (static_cast<std::uint64_t>(power.degree()) > budget.max_degree) {
            seq.truncated = true;
            break;
        }
        seq.values.emplace_back(power.degree());
        seq.completed = n;
    }
    return seq;
}

enum class Growth { Bounded, Linear, Quadratic, Exponential, Inconclusive };

inline const char* growth_name(Growth g) {
    switch (g) {
        case Growth::Bounded: return "Bounded";
        case Growth::Linear: return "Linear";
        case Growth::Quadratic: return "Quadratic";
        case Growth::Exponential: return "Exponential";
        case Growth::Inconclusive: return "Inconclusive";
    }
    return "?";
}

// Exact tail tests, checked in this order: bounded (no new maximum in the
// second half), linear/quadratic (last three first/second differences agree
// and are positive), exponential (ratios at least 101/100 across the last
// half). Anything else is Inconclusive.
Growth classify_growth(const std::vector<Int>& degs);

inline Growth classify_growth(const DegreeSequence& seq) { return classify_growth(seq.values); }

// ---- constructions --------------------------------------------------------

// homogenization of the monomial map (x, y) -> (x^a y^b, x^c y^d), det = +-1
template <class F>
HomogeneousMap<F> monomial_map(const F& K, long a, long b, long c, long d) {
    if (a * d - b * c != 1 && a * d - b * c != -1)
        throw DomainError("monomial matrix must have determinant +-1");
    auto build = [&](long A, long B, long C, long D) {
        // exponent vectors of (x^A y^B, x^C y^D, 1) in x, y, z
        long e1[3] = {A, B, -A - B};
        long e2[3] = {C, D, -C - D};
        long e3[3] = {0, 0, 0};
        long shift[3];
        for (int v = 0; v < 3; ++v)
            shift[v] = -std::min({e1[v], e2[v], e3[v], 0L});
        auto mono = [&](const long* e) {
            return p3_mono(K,
                           Mono{static_cast<std::uint32_t>(e[0] + shift[0]),
                                static_cast<std::uint32_t>(e[1] + shift[1]),
                                static_cast<std::uint32_t>(e[2] + shift[2])},
                           K.one());
        };
        return typename HomogeneousMap<F>::Components{mono(e1), mono(e2), mono(e3)};
    };
    long det = a * d - b * c;
    // inverse matrix: (d, -b; -c, a) / det
    long ia = d * det, ib = -b * det, ic = -c * det, id = a * det;
    return HomogeneousMap<F>(K, build(a, b, c, d), build(ia, ib, ic, id));
}

// projective linear map from an invertible 3x3 coefficient matrix
template <class F>
HomogeneousMap<F> linear_map(const F& K, const std::array<std::array<typename F::Elem, 3>, 3>& m) {
    auto row = [&](const std::array<typename F::Elem, 3>& r) {
        Poly3<F> p;
        p3_add_term(K, p, Mono{1, 0, 0}, r[0]);
        p3_add_term(K, p, Mono{0, 1, 0}, r[1]);
        p3_add_term(K, p, Mono{0, 0, 1}, r[2]);
        return p;
    };
    // adjugate serves as the projective inverse
    auto co = [&](int r0, int c0, int r1, int c1) {
        return K.sub(K.mul(m[r0][c0], m[r1][c1]), K.mul(m[r0][c1], m[r1][c0]));
    };
    std::array<std::array<typename F::Elem, 3>, 3> adj = {{
        {co(1, 1, 2, 2), K.neg(co(0, 1, 2, 2)), co(0, 1, 1, 2)},
        {K.neg(co(1, 0, 2, 2)), co(0, 0, 2, 2), K.neg(co(0, 0, 1, 2))},
        {co(1, 0, 2, 1), K.neg(co(0, 0, 2, 1)), co(0, 0, 1, 1)},
    }};
    auto det = K.add(K.mul(m[0][0], adj[0][0]),
                     K.add(K.mul(m[0][1], adj[1][0]), K.mul(m[0][2], adj[2][0])));
    if (K.is_zero(det)) throw DomainError("linear map matrix is singular");
    return HomogeneousMap<F>(K, {row(m[0]), row(m[1]), row(m[2])},
                             {row(adj[0]), row(adj[1]), row(adj[2])});
}

// homogenize an affine polynomial p(x, y) (z-exponent 0) to degree target
template <class F>
Poly3<F> homogenize_xy(const F& K, const Poly3<F>& p, std::uint32_t target) {
    Poly3<F> r;
    for (const auto& [m, c] : p.t) {
        if (m.k != 0) throw DomainError("affine polynomial must not involve z");
        if (m.i + m.j > target) throw DomainError("degree exceeds homogenization target");
        r.t.emplace(Mono{m.i, m.j, target - m.i - m.j}, c);
    }
    (void)K;
    return r;
}

// affine map (x, y) -> (nx/dx, ny/dy) with polynomial entries, homogenized
template <class F>
HomogeneousMap<F> affine_map(const F& K, const Poly3<F>& nx, const Poly3<F>& dx,
                             const Poly3<F>& ny, const Poly3<F>& dy) {
    if (dx.is_zero() || dy.is_zero()) throw DomainError("zero denominator in affine map");
    Poly3<F> A = p3_mul(K, nx, dy);
    Poly3<F> B = p3_mul(K, ny, dx);
    Poly3<F> C = p3_mul(K, dx, dy);
    long target = std::max({A.is_zero() ? 0l : A.degree(), B.is_zero() ? 0l : B.degree(),
                            C.degree()});
    auto t = static_cast<std::uint32_t>(target);
    typename HomogeneousMap<F>::Components comps{
        A.is_zero() ? Poly3<F>{} : homogenize_xy(K, A, t),
        B.is_zero() ? Poly3<F>{} : homogenize_xy(K, B, t),
        homogenize_xy(K, C, t)};
    return HomogeneousMap<F>(K, std::move(comps));
}

// the elementary shift h_e : (x, y) -> (y, x + y^e), with its inverse
template <class F>
HomogeneousMap<F> elementary_shift(const F& K, std::uint32_t e) {
    if (e < 1) throw ParameterError("shift exponent must be >= 1");
    typename HomogeneousMap<F>::Components fwd{
        p3_mono(K, Mono{0, 1, e - 1}, K.one()),
        p3_add(K, p3_mono(K, Mono{1, 0, e - 1}, K.one()), p3_mono(K, Mono{0, e, 0}, K.one())),
        p3_mono(K, Mono{0, 0, e}, K.one())};
    // inverse: (x, y) -> (y - x^e, x)
    typename HomogeneousMap<F>::Components bwd{
        p3_sub(K, p3_mono(K, Mono{0, 1, e - 1}, K.one()), p3_mono(K, Mono{e, 0, 0}, K.one())),
        p3_mono(K, Mono{1, 0, e - 1}, K.one()),
        p3_mono(K, Mono{0, 0, e}, K.one())};
    return HomogeneousMap<F>(K, std::move(fwd), std::move(bwd));
}

// translation (x, y) -> (x + u, y + v)
template <class F>
HomogeneousMap<F> translation_map(const F& K, const typename F::Elem& u, const typename F::Elem& v) {
    return linear_map<F>(K, {{{K.one(), K.zero(), u}, {K.zero(), K.one(), v},
                              {K.zero(), K.zero(), K.one()}}});
}

// diagonal map (x, y) -> (u x, v y)
template <class F>
HomogeneousMap<F> diagonal_map(const F& K, const typename F::Elem& u, const typename F::Elem& v) {
    if (K.is_zero(u) || K.is_zero(v)) throw DomainError("diagonal map needs nonzero weights");
    return linear_map<F>(K, {{{u, K.zero(), K.zero()}, {K.zero(), v, K.zero()},
                              {K.zero(), K.zero(), K.one()}}});
}

// f g f^{-1} g^{-1}; both maps must carry inverses
template <class F>
HomogeneousMap<F> commutator(const HomogeneousMap<F>& f, const HomogeneousMap<F>& g,
                             const Budget& budget = {}) {
    if (!f.has_inverse() || !g.has_inverse())
        throw DomainError("commutator needs both inverses");
    const F& K = f.field();
    HomogeneousMap<F> fi(K, f.inverse_components());
    HomogeneousMap<F> gi(K, g.inverse_components());
    HomogeneousMap<F> fs(K, f.components());
    HomogeneousMap<F> gs(K, g.components());
    return compose_forward(compose_forward(fs, gs, budget),
                           compose_forward(fi, gi, budget), budget);
}

} // namespace cremona::birmap
