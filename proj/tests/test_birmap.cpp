#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cremona/birmap.hpp"
#include "cremona/constructions.hpp"

using namespace cremona;
using namespace cremona::birmap;

namespace {

Poly3<Fp> affine_poly(const Fp& K, std::initializer_list<std::tuple<int, int, long>> terms) {
    Poly3<Fp> p;
    for (auto [i, j, c] : terms)
        p3_add_term(K, p, Mono{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), 0},
                    K.from_int(c));
    return p;
}

template <class F>
HomogeneousMap<F> random_linear(const F& K, std::mt19937_64& rng) {
    while (true) {
        std::array<std::array<typename F::Elem, 3>, 3> m;
        for (auto& row : m)
            for (auto& v : row) v = K.sample(rng);
        try {
            return linear_map(K, m);
        } catch (const DomainError&) {
        }
    }
}

} // namespace

TEST_CASE("sigma composed with itself is the identity") {
    QQ K;
    auto sigma = standard_quadratic(K);
    CHECK(sigma.degree() == 2);
    auto sq = compose(sigma, sigma);
    CHECK(sq.degree() == 1);
    CHECK(sq.is_identity());
}

TEST_CASE("linear compose linear is the product matrix") {
    Fp K(101);
    std::mt19937_64 rng(8);
    for (int t = 0; t < 10; ++t) {
        auto f = random_linear(K, rng);
        auto g = random_linear(K, rng);
        auto fg = compose(f, g);
        CHECK(fg.degree() == 1);
        // degree-1 maps act on points; compare on a few
        for (int s = 0; s < 5; ++s) {
            auto x = K.sample(rng), y = K.sample(rng), z = K.one();
            std::array<Fp::Elem, 3> gp, fgp, direct;
            for (int i = 0; i < 3; ++i) gp[i] = p3_eval(K, g.components()[i], x, y, z);
            for (int i = 0; i < 3; ++i)
                direct[i] = p3_eval(K, f.components()[i], gp[0], gp[1], gp[2]);
            for (int i = 0; i < 3; ++i) fgp[i] = p3_eval(K, fg.components()[i], x, y, z);
            // projective equality
            bool anydir = false;
            for (int i = 0; i < 3; ++i) anydir |= !K.is_zero(direct[i]);
            if (!anydir) continue;
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j)
                    CHECK(K.eq(K.mul(fgp[i], direct[j]), K.mul(fgp[j], direct[i])));
        }
    }
}

TEST_CASE("quadratic shift h(x,y) = (y, x + y^2) composes to degree 4") {
    QQ K;
    auto h = elementary_shift(K, 2);
    CHECK(h.degree() == 2);
    auto hh = compose(h, h);
    CHECK(hh.degree() == 4);
    // inverse round-trip
    auto id = compose(h, h.inverse());
    CHECK(id.is_identity());
}

TEST_CASE("degree sequences: involution, shift, monomial") {
    QQ K;
    auto sigma = standard_quadratic(K);
    auto seq = degree_sequence(sigma, 4);
    CHECK(seq.values == std::vector<Int>{2, 1, 2, 1});

    auto h = elementary_shift(K, 2);
    auto hseq = degree_sequence(h, 8);
    CHECK(hseq.values == std::vector<Int>{2, 4, 8, 16, 32, 64, 128, 256});
    CHECK(classify_growth(hseq) == Growth::Exponential);

    // Jonquieres map (x, y (x+1)/(x-1)): linear degree growth
    Fp Kp(1009);
    auto nx = affine_poly(Kp, {{1, 0, 1}});
    auto one = affine_poly(Kp, {{0, 0, 1}});
    auto ny = affine_poly(Kp, {{1, 1, 1}, {0, 1, 1}});  // y(x+1)
    auto dy = affine_poly(Kp, {{1, 0, 1}, {0, 0, -1}}); // x - 1
    auto jon = affine_map(Kp, nx, one, ny, dy);
    auto jseq = degree_sequence(jon, 6);
    CHECK(classify_growth(jseq) == Growth::Linear);
}

TEST_CASE("monomial map degrees match matrix powers") {
    QQ K;
    auto f = monomial_map(K, 2, 1, 1, 1);
    CHECK(f.degree() == 3);
    auto seq = degree_sequence(f, 8);
    // deg(f^n) = deg(monomial(M^n))
    long m[2][2] = {{2, 1}, {1, 1}};
    long p[2][2] = {{1, 0}, {0, 1}};
    for (int n = 1; n <= 8; ++n) {
        long q[2][2];
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                q[i][j] = p[i][0] * m[0][j] + p[i][1] * m[1][j];
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) p[i][j] = q[i][j];
        auto fn = monomial_map(K, p[0][0], p[0][1], p[1][0], p[1][1]);
        CHECK(Int(fn.degree()) == seq.values[n - 1]);
    }
    CHECK(seq.values[7] == 2584);
    CHECK(classify_growth(seq) == Growth::Exponential);

    // identity and parabolic monomial maps
    CHECK(monomial_map(K, 1, 0, 0, 1).is_identity());
    auto par = monomial_map(K, 1, 1, 0, 1);
    auto pseq = degree_sequence(par, 8);
    CHECK(classify_growth(pseq) == Growth::Linear);

    CHECK_THROWS_AS(monomial_map(K, 2, 0, 0, 2), DomainError);
}

TEST_CASE("composition is associative up to normalization") {
    Fp K(1009);
    std::mt19937_64 rng(9);
    auto sigma = standard_quadratic(K);
    for (int t = 0; t < 6; ++t) {
        auto f = random_linear(K, rng);
        auto g = sigma;
        auto h = random_linear(K, rng);
        auto left = compose_forward(f, compose_forward(g, h));
        auto right = compose_forward(compose_forward(f, g), h);
        CHECK(left == right);
    }
}

TEST_CASE("degree sequence is submultiplicative") {
    Fp K(1009);
    auto h = elementary_shift(K, 2);
    auto lin = linear_map<Fp>(K, {{{K.from_int(1), K.from_int(2), K.from_int(0)},
                                   {K.from_int(0), K.from_int(1), K.from_int(3)},
                                   {K.from_int(0), K.from_int(0), K.from_int(1)}}});
    auto f = compose(h, lin);
    auto seq = degree_sequence(f, 7);
    const auto& v = seq.values;
    for (std::size_t m = 1; m + 1 <= v.size(); ++m)
        for (std::size_t n = 1; m + n <= v.size(); ++n)
            CHECK(v[m + n - 1] <= v[m - 1] * v[n - 1]);
}

TEST_CASE("growth classification rules") {
    using V = std::vector<Int>;
    CHECK(classify_growth(V{2, 1, 2, 1, 2, 1}) == Growth::Bounded);
    CHECK(classify_growth(V{2, 3, 4, 5, 6, 7}) == Growth::Linear);
    CHECK(classify_growth(V{2, 4, 8, 16, 32, 64}) == Growth::Exponential);
    CHECK(classify_growth(V{1, 4, 9, 16, 25, 36}) == Growth::Quadratic);
    CHECK(classify_growth(V{1, 1, 2, 1, 5, 9}) == Growth::Inconclusive);
    CHECK_THROWS_AS(static_cast<void>(classify_growth(V{1, 2, 3})), ParameterError);
}

TEST_CASE("commutator identities") {
    Fp K(1009);
    std::mt19937_64 rng(10);
    // commuting linear maps give the identity
    auto d1 = diagonal_map(K, K.from_int(5), K.from_int(7));
    auto d2 = diagonal_map(K, K.from_int(3), K.from_int(11));
    CHECK(commutator(d1, d2).is_identity());

    // f with linear part F and g a translation: [f, g] is the translation
    // with (u' + u, v' + v) = F(u, v)
    auto F = linear_map<Fp>(K, {{{K.from_int(2), K.from_int(1), K.zero()},
                                 {K.from_int(1), K.from_int(1), K.zero()},
                                 {K.zero(), K.zero(), K.one()}}});
    auto u = K.from_int(3), v = K.from_int(4);
    auto g = translation_map(K, u, v);
    auto comm = commutator(F, g);
    // F(u,v) = (2u + v, u + v); u' = F(u,v)_1 - u, v' = F(u,v)_2 - v
    auto up = K.sub(K.add(K.add(u, u), v), u);
    auto vp = K.sub(K.add(u, v), v);
    CHECK(comm == translation_map(K, up, vp));

    // monomial f against a diagonal map gives a diagonal map
    auto mono = monomial_map(K, 2, 1, 1, 1);
    auto diag = diagonal_map(K, K.from_int(5), K.from_int(2));
    auto dcomm = commutator(mono, diag);
    CHECK(dcomm.degree() == 1);
    // (x,y) -> (u^a v^b x, u^c v^d y) conjugation: commutator is diagonal
    // with weights u^a v^b / u, u^c v^d / v
    auto w1 = K.div(K.mul(K.mul(K.from_int(5), K.from_int(5)), K.from_int(2)), K.from_int(5));
    auto w2 = K.div(K.mul(K.from_int(5), K.from_int(2)), K.from_int(2));
    CHECK(dcomm == diagonal_map(K, w1, w2));
}

TEST_CASE("degenerate composition is reported") {
    QQ K;
    // g maps everything into [0:0:1], the unique indeterminacy point of sigma-like maps
    Poly3<QQ> z3 = p3_mono(K, Mono{0, 0, 1}, K.one());
    auto cst = HomogeneousMap<QQ>(K, {Poly3<QQ>{}, Poly3<QQ>{}, z3});
    auto f = HomogeneousMap<QQ>(K, {p3_mono(K, Mono{1, 0, 0}, K.one()),
                                    p3_mono(K, Mono{0, 1, 0}, K.one()),
                                    Poly3<QQ>{}});
    CHECK_THROWS_AS(static_cast<void>(compose(f, cst)), DomainError);
}
