#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cremona/gf.hpp"
#include "cremona/polygcd.hpp"

using namespace cremona;

namespace {

// random homogeneous polynomial of the given degree
template <class F>
Poly3<F> random_homog(const F& K, std::mt19937_64& rng, std::uint32_t deg, int density = 2) {
    std::uniform_int_distribution<int> pickd(0, density);
    Poly3<F> p;
    for (std::uint32_t i = 0; i <= deg; ++i)
        for (std::uint32_t j = 0; i + j <= deg; ++j) {
            if (pickd(rng) != 0) continue;
            p3_add_term(K, p, Mono{i, j, deg - i - j}, K.sample(rng));
        }
    if (p.is_zero()) p3_add_term(K, p, Mono{deg, 0, 0}, K.one());
    return p;
}

} // namespace

TEST_CASE("trivariate exact division") {
    Fp K(1009);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        auto a = random_homog(K, rng, 4);
        auto b = random_homog(K, rng, 3);
        auto prod = p3_mul(K, a, b);
        auto q = p3_divide_exact(K, prod, b);
        REQUIRE(q.has_value());
        CHECK(p3_eq(K, *q, a));
        // a constant term cannot be divisible by a positive-degree polynomial
        auto broken = prod;
        p3_add_term(K, broken, Mono{0, 0, 0}, K.one());
        CHECK_FALSE(p3_divide_exact(K, broken, b).has_value());
    }
}

TEST_CASE("pair gcd recovers planted common factors over F_p") {
    Fp K(1009);
    std::mt19937_64 rng(4);
    for (int t = 0; t < 25; ++t) {
        auto g = random_homog(K, rng, 3, 1);
        auto a = p3_mul(K, g, random_homog(K, rng, 4, 1));
        auto b = p3_mul(K, g, random_homog(K, rng, 5, 1));
        auto got = p3_gcd_pair(K, a, b);
        // the planted factor divides the gcd, and the gcd divides both inputs
        CHECK(p3_divide_exact(K, a, got).has_value());
        CHECK(p3_divide_exact(K, b, got).has_value());
        CHECK(p3_divide_exact(K, got, g).has_value());
    }
}

TEST_CASE("pair gcd over the rationals (PRS route)") {
    QQ K;
    std::mt19937_64 rng(5);
    for (int t = 0; t < 8; ++t) {
        auto g = random_homog(K, rng, 2, 1);
        auto a = p3_mul(K, g, random_homog(K, rng, 2, 1));
        auto b = p3_mul(K, g, random_homog(K, rng, 3, 1));
        auto got = p3_gcd_pair(K, a, b);
        CHECK(p3_divide_exact(K, a, got).has_value());
        CHECK(p3_divide_exact(K, b, got).has_value());
        CHECK(p3_divide_exact(K, got, g).has_value());
    }
}

TEST_CASE("component gcd strips monomial content fast") {
    Fp K(101);
    std::array<Poly3<Fp>, 3> comps{
        p3_mono(K, Mono{2, 1, 1}, K.one()),
        p3_mono(K, Mono{1, 2, 1}, K.one()),
        p3_mono(K, Mono{1, 1, 2}, K.one())};
    auto g = p3_gcd3(K, comps);
    CHECK(g.is_monomial());
    CHECK(g.leading_mono() == Mono{1, 1, 1});
}

TEST_CASE("coprime pairs give unit gcd") {
    Fp K(1009);
    auto x3 = p3_mono(K, Mono{3, 0, 0}, K.one());
    Poly3<Fp> p;
    p3_add_term(K, p, Mono{0, 3, 0}, K.one());
    p3_add_term(K, p, Mono{0, 0, 3}, K.one());
    auto g = p3_gcd_pair(K, x3, p);
    CHECK(g.degree() == 0);
}

TEST_CASE("small prime fields fall back to the PRS route") {
    Fp K(5);
    std::mt19937_64 rng(6);
    for (int t = 0; t < 10; ++t) {
        auto g = random_homog(K, rng, 2, 1);
        auto a = p3_mul(K, g, random_homog(K, rng, 3, 1));
        auto b = p3_mul(K, g, random_homog(K, rng, 3, 1));
        auto got = p3_gcd_pair(K, a, b);
        CHECK(p3_divide_exact(K, a, got).has_value());
        CHECK(p3_divide_exact(K, b, got).has_value());
        CHECK(p3_divide_exact(K, got, g).has_value());
    }
}

TEST_CASE("univariate arithmetic over GF(9)") {
    GFq K(3, 2);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 10; ++t) {
        UPoly<GFq> a, b;
        a.c.resize(4);
        b.c.resize(3);
        for (auto& c : a.c) c = K.sample(rng);
        for (auto& c : b.c) c = K.sample(rng);
        utrim(K, a);
        utrim(K, b);
        if (a.is_zero() || b.is_zero()) continue;
        auto prod = umul(K, a, b);
        CHECK(ueq(K, udiv_exact(K, prod, b), a));
        auto g = ugcd(K, prod, b);
        CHECK(g.deg() == b.deg()); // b divides the product: gcd is monic b
    }
}
