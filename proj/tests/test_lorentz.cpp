#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cremona/lorentz.hpp"
#include "cremona/weyl.hpp"
#include "test_support.hpp"

using namespace cremona;
using namespace cremona::lorentz;

TEST_CASE("inner product on basis vectors") {
    auto e0 = LorentzVector::basis(9, 0);
    auto e1 = LorentzVector::basis(9, 1);
    CHECK(inner(e0, e0) == 1);
    CHECK(inner(e1, e1) == -1);
    CHECK(inner(e0, e1) == 0);

    std::vector<Rat> xi(10, Rat(-1));
    xi[0] = 3;
    LorentzVector xi9{xi};
    CHECK(inner(xi9, xi9) == 0);
}

TEST_CASE("inner product rejects rank mismatch") {
    auto u = LorentzVector::basis(9, 0);
    auto v = LorentzVector::basis(8, 0);
    CHECK_THROWS_AS(inner(u, v), DimensionError);
}

TEST_CASE("cosh distance in exact form") {
    auto e0 = LorentzVector::basis(9, 0);
    auto d0 = cosh_distance(e0, e0);
    CHECK(d0.cosh_sq == 1);
    CHECK(d0.distance.to_double() == doctest::Approx(0.0));

    // 2e0 - e1 has norm 3, e0.(2e0-e1) = 2
    std::vector<Rat> v(10, Rat(0));
    v[0] = 2; v[1] = -1;
    auto d1 = cosh_distance(e0, LorentzVector{v});
    CHECK(d1.cosh_sq == Rat(4, 3));

    // iota(alpha_1)(e0) = 10e0 - 6e1 - 3e3 - ... - 3e9, norm 1, e0-pairing 10
    weyl::E8Class a1(weyl::root(1));
    auto g = weyl::iota(a1);
    auto img = g.apply(e0);
    std::vector<Rat> want(10, Rat(-3));
    want[0] = 10; want[1] = -6; want[2] = 0;
    CHECK(img.a == want);
    auto d2 = cosh_distance(e0, img);
    CHECK(d2.cosh_sq == 100);
    CHECK(d2.distance.to_double() == doctest::Approx(std::acosh(10.0)));

    CHECK_THROWS_AS(cosh_distance(e0, LorentzVector::basis(9, 1)), GeometryError);
}

TEST_CASE("horoball gap formula") {
    // xi9 and e0 - e1 are both primitive isotropic; their pairing is 2
    BoundaryClass xi9(std::vector<Int>{3, -1, -1, -1, -1, -1, -1, -1, -1, -1});
    BoundaryClass e01(std::vector<Int>{1, -1, 0, 0, 0, 0, 0, 0, 0, 0});
    CHECK(inner(xi9.vec(), e01.vec()) == 2);

    // m = 1: xi = e0 - e1 vs e0 - e2
    BoundaryClass e02(std::vector<Int>{1, 0, -1, 0, 0, 0, 0, 0, 0, 0});
    CHECK(inner(e01.vec(), e02.vec()) == 1);
    CHECK(horoball_gap(e01, e02, Rat(1, 10)) == Rat(2501, 100));
    CHECK(horoball_gap(e01, e02, Rat(1, 2)) == Rat(5, 4));

    // symmetry
    CHECK(horoball_gap(e01, xi9, Rat(1, 7)) == horoball_gap(xi9, e01, Rat(1, 7)));

    CHECK_THROWS_AS(horoball_gap(e01, e01, Rat(1, 10)), GeometryError);
    CHECK_THROWS_AS(horoball_gap(e01, e02, Rat(0)), ParameterError);
}

TEST_CASE("horoball membership predicate") {
    BoundaryClass e01(std::vector<Int>{1, -1, 0, 0, 0, 0, 0, 0, 0, 0});
    Horoball h(e01, Rat(1, 2));
    auto e0 = LorentzVector::basis(9, 0);
    CHECK_FALSE(h.contains(e0)); // e0.(e0-e1) = 1 > 1/2
    Horoball wide(e01, Rat(2));
    CHECK(wide.contains(e0));
}

TEST_CASE("separation check on small and random families") {
    BoundaryClass xi9(std::vector<Int>{3, -1, -1, -1, -1, -1, -1, -1, -1, -1});
    BoundaryClass e01(std::vector<Int>{1, -1, 0, 0, 0, 0, 0, 0, 0, 0});
    auto rep = separation_check({xi9, e01}, Rat(1, 10));
    CHECK(rep.separated);
    CHECK(rep.pairs == 1);
    CHECK(*rep.min_gap > rep.bound);

    auto single = separation_check({xi9}, Rat(1, 10));
    CHECK(single.separated);
    CHECK(single.pairs == 0);
    CHECK_FALSE(single.min_gap.has_value());

    // randomized family of 50 primitive isotropic vectors, eps = 1/4
    std::mt19937_64 rng(2024);
    auto fam = testsupport::random_isotropic_family(rng, 50);
    auto big = separation_check(fam, Rat(1, 4));
    CHECK(big.pairs == 50 * 49 / 2);
    CHECK(big.separated);
}

TEST_CASE("lattice isometry validation") {
    CHECK_THROWS_AS((LatticeIsometry(IMat{{2, 0}, {0, 1}})), GeometryError);
    // -identity flips the sheet
    IMat neg = IMat::identity(3);
    for (int i = 0; i < 3; ++i) neg(i, i) = -1;
    CHECK_THROWS_AS((LatticeIsometry(neg)), GeometryError);
    CHECK_NOTHROW((LatticeIsometry(IMat::identity(10))));
}

TEST_CASE("isometries preserve the form exactly") {
    std::mt19937_64 rng(7);
    auto e0 = LorentzVector::basis(9, 0);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = testsupport::random_w9_isometry(rng);
        auto u = testsupport::random_vector(rng);
        auto v = testsupport::random_vector(rng);
        CHECK(inner(g.apply(u), g.apply(v)) == inner(u, v));
    }
    (void)e0;
}

TEST_CASE("classification: identity and reflections are elliptic") {
    auto id = LatticeIsometry(IMat::identity(10));
    auto c = classify_isometry(id);
    CHECK(c.type == IsometryType::Elliptic);
    CHECK(c.order == 1u);

    auto s1 = weyl::reflection(1);
    auto cs = classify_isometry(s1);
    CHECK(cs.type == IsometryType::Elliptic);
    CHECK(cs.order == 2u);
}

TEST_CASE("classification: iota translation is Halphen-type parabolic") {
    auto g = weyl::iota(weyl::E8Class(weyl::root(1)));
    auto c = classify_isometry(g);
    CHECK(c.type == IsometryType::Parabolic);
    CHECK(c.parabolic == ParabolicKind::Halphen);
    // orbit values 1 + 9k^2
    REQUIRE(c.orbit.size() >= 4);
    CHECK(c.orbit[0] == 1);
    CHECK(c.orbit[1] == 10);
    CHECK(c.orbit[2] == 37);
    CHECK(c.orbit[3] == 82);
}

TEST_CASE("classification: rank-10 Coxeter element is loxodromic with Lehmer spectral radius") {
    // product of the ten reflections of the alpha-basis of Z^{1,10}
    IMat prod = IMat::identity(11);
    for (std::size_t i = 0; i < 10; ++i)
        prod = prod * weyl::reflection_general(10, i).m;
    auto cox = LatticeIsometry(prod);
    auto c = classify_isometry(cox);
    CHECK(c.type == IsometryType::Loxodromic);
    // Lehmer's number, computed independently by isolating the largest real
    // root of x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1
    Real lehmer("1.17628081825991750654407033847403505069341581");
    CHECK(abs(*c.spectral_radius - lehmer) < Real("1e-40"));
}

TEST_CASE("classification: explicit Z^{1,3} isometry with quadratic-unit spectral radius") {
    IMat m{{3, -2, -2, 0}, {2, -2, -1, 0}, {0, 0, 0, -1}, {2, -1, -2, 0}};
    auto iso = LatticeIsometry(m);
    auto c = classify_isometry(iso);
    CHECK(c.type == IsometryType::Loxodromic);
    Real golden_sq("2.61803398874989484820458683436563811772030918");
    CHECK(abs(*c.spectral_radius - golden_sq) < Real("1e-40"));
}

TEST_CASE("classification is conjugation invariant") {
    std::mt19937_64 rng(99);
    auto base = weyl::iota(weyl::E8Class(weyl::root(2)));
    for (int trial = 0; trial < 8; ++trial) {
        auto g = testsupport::random_w9_isometry(rng);
        IMat conj = g.m * base.m * inverse_int(g.m);
        auto c = classify_isometry(LatticeIsometry(conj));
        CHECK(c.type == IsometryType::Parabolic);
        CHECK(c.parabolic == ParabolicKind::Halphen);
    }
}

TEST_CASE("cosh_sq >= 1 for positive norm vectors") {
    std::mt19937_64 rng(5);
    int done = 0;
    while (done < 30) {
        auto u = testsupport::random_vector(rng);
        auto v = testsupport::random_vector(rng);
        if (inner(u, u) <= 0 || inner(v, v) <= 0) continue;
        if (u.a[0] <= 0 || v.a[0] <= 0) continue;
        auto d = cosh_distance(u, v);
        CHECK(d.cosh_sq >= 1);
        ++done;
    }
}

TEST_CASE("vector text format round-trips") {
    std::vector<Rat> c(10, Rat(0));
    c[0] = Rat(5, 2);
    c[3] = -7;
    LorentzVector v{c};
    auto s = format_vector(v);
    CHECK(s == "lorentz n=9 [5/2 0 0 -7 0 0 0 0 0 0]");
    CHECK(parse_vector(s) == v);
    CHECK_THROWS_AS(parse_vector("lorentz n=9 [1 2]"), ParseError);
}

TEST_CASE("matrix text format round-trips") {
    auto m = weyl::reflection(0).m;
    auto s = format_matrix(m);
    CHECK(parse_matrix_text(s) == m);
}
