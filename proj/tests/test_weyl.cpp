#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cremona/weyl.hpp"
#include "test_support.hpp"

using namespace cremona;
using namespace cremona::weyl;

TEST_CASE("root basis and Gram matrix") {
    // Gram(alpha_i, alpha_j) = Gamma_9 - 2 Id with Gamma_9 the E9 incidence matrix:
    // chain 1-2-...-8 with node 0 attached to node 3
    for (int i = 0; i <= 8; ++i) {
        CHECK(inner_int(root(i), root(i)) == -2);
        for (int j = i + 1; j <= 8; ++j) {
            bool adjacent = (i >= 1 && j == i + 1) || (i == 0 && j == 3);
            CHECK(inner_int(root(i), root(j)) == (adjacent ? 1 : 0));
        }
    }
    for (int i = 0; i <= 8; ++i) CHECK(inner_int(root(i), xi9()) == 0);
    CHECK_THROWS_AS(root(9), ParameterError);
}

TEST_CASE("reflections are involutions fixing xi9") {
    for (int i = 0; i <= 8; ++i) {
        auto s = reflection(i);
        CHECK(s.m * s.m == IMat::identity(10));
        CHECK(s.apply_int(xi9()) == xi9());
    }
    // s1 swaps e1 and e2
    auto s1 = reflection(1);
    std::vector<Int> e1(10, 0), e2(10, 0);
    e1[1] = 1; e2[2] = 1;
    CHECK(s1.apply_int(e1) == e2);
    // s0(e0) = 2e0 - e1 - e2 - e3
    auto s0 = reflection(0);
    std::vector<Int> e0(10, 0), want(10, 0);
    e0[0] = 1;
    want[0] = 2; want[1] = want[2] = want[3] = -1;
    CHECK(s0.apply_int(e0) == want);
}

TEST_CASE("iota of zero is the identity") {
    CHECK(iota(E8Class(std::vector<Int>(10, 0))).m == IMat::identity(10));
}

TEST_CASE("iota images fix xi9 and translate e0 as computed") {
    E8Class a1(root(1));
    auto g = iota(a1);
    CHECK(g.apply_int(xi9()) == xi9());
    std::vector<Int> e0(10, 0);
    e0[0] = 1;
    std::vector<Int> want{10, -6, 0, -3, -3, -3, -3, -3, -3, -3};
    CHECK(g.apply_int(e0) == want);
}

TEST_CASE("iota rejects non-orthogonal representatives") {
    std::vector<Int> bad(10, 0);
    bad[0] = 1; // e0 . xi9 = 3 != 0
    CHECK_THROWS_AS((E8Class(bad)), DomainError);
}

TEST_CASE("iota is a homomorphism and representative independent") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 25; ++t) {
        auto w1 = testsupport::random_e8_vector(rng);
        auto w2 = testsupport::random_e8_vector(rng);
        std::vector<Int> sum(10);
        for (int i = 0; i < 10; ++i) sum[i] = w1[i] + w2[i];
        CHECK(iota(E8Class(sum)).m == iota(E8Class(w1)).m * iota(E8Class(w2)).m);

        // w + k xi9 gives the same isometry
        std::uniform_int_distribution<int> dk(-3, 3);
        int k = dk(rng);
        std::vector<Int> shifted(10);
        auto xi = xi9();
        for (int i = 0; i < 10; ++i) shifted[i] = w1[i] + k * xi[i];
        CHECK(iota(E8Class(shifted)).m == iota(E8Class(w1)).m);
        CHECK(E8Class(shifted).same_class(E8Class(w1)));
    }
}

TEST_CASE("iota_inverse round-trips and rejects non-translations") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 20; ++t) {
        auto w = testsupport::random_e8_vector(rng);
        auto g = iota(E8Class(w));
        auto back = iota_inverse(g);
        CHECK(back.same_class(E8Class(w)));
        CHECK(iota(back).m == g.m);
    }
    CHECK(iota_inverse(lorentz::LatticeIsometry(IMat::identity(10))).same_class(E8Class(std::vector<Int>(10, 0))));
    CHECK_THROWS_AS(iota_inverse(reflection(1)), DomainError);
}

TEST_CASE("membership in P*") {
    CHECK(membership_pstar(iota(E8Class(root(2)))));
    CHECK(membership_pstar(lorentz::LatticeIsometry(IMat::identity(10))));
    CHECK_FALSE(membership_pstar(reflection(1)));
    // must fix xi9: the sign flip e1 -> -e1 preserves the form but moves xi9
    IMat flip = IMat::identity(10);
    flip(1, 1) = -1;
    CHECK_THROWS_AS(membership_pstar(lorentz::LatticeIsometry(flip)), DomainError);
}

TEST_CASE("P* is normal under the reflections") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 15; ++t) {
        auto w = testsupport::random_e8_vector(rng, 2);
        std::uniform_int_distribution<int> di(0, 8);
        auto s = reflection(di(rng));
        IMat conj = s.m * iota(E8Class(w)).m * s.m; // s is an involution
        auto sw = s.apply_int(w);
        CHECK(conj == iota(E8Class(sw)).m);
    }
}

TEST_CASE("translation lengths on horospheres") {
    // c = 2 at eps = 3 gives euclidean length sqrt(2)
    // find w with e0.iota(w)(e0) = 2: need w.w = -2/9... use formula c = 1 - (9/2) w.w
    // w = alpha_i has w.w = -2, c = 10; the bound says any nonzero class has c >= 2.
    auto g = iota(E8Class(root(3)));
    auto tl = translation_length(g, Rat(3));
    CHECK(tl.cosh_hyperbolic == 10);
    Real expect("4.242640687119285146405066172629094235709015626130844219530039213972197435386");
    CHECK(abs(tl.euclidean_value - expect) < Real("1e-60"));

    auto tl_half = translation_length(g, Rat(3, 2));
    CHECK(abs(tl_half.euclidean_value * Real(2L) - tl.euclidean_value) < Real("1e-60"));

    CHECK_THROWS_AS(translation_length(lorentz::LatticeIsometry(IMat::identity(10)), Rat(3)),
                    DomainError);
}

TEST_CASE("translation length is at least sqrt(2) on the e0 horosphere") {
    std::mt19937_64 rng(14);
    Real sqrt2 = sqrt(Real(2L));
    for (int t = 0; t < 30; ++t) {
        auto w = testsupport::random_e8_vector(rng);
        bool zero = true;
        for (const auto& c : w) zero = zero && c == 0;
        if (zero) continue;
        auto g = iota(E8Class(w));
        auto tl = translation_length(g, Rat(3));
        CHECK(tl.cosh_hyperbolic >= 2);
        CHECK(tl.euclidean_value >= sqrt2 - Real("1e-30"));
    }
}

TEST_CASE("delta bounds") {
    auto d = delta_bounds(Rat(3), 1);
    CHECK(abs(d.euclidean_value - sqrt(Real(2L))) < Real("1e-60"));
    // 2 arcsinh(1/sqrt 2) = arcosh(2) = 1.3169578969...
    Real expect("1.316957896924816708625046347307968444026981971467516479768472256920460185416444");
    CHECK(abs(d.hyperbolic_value - expect) < Real("1e-60"));

    // homogeneity: (eps, n) vs (n eps, 1)
    auto a = delta_bounds(Rat(2, 7), 5);
    auto b = delta_bounds(Rat(10, 7), 1);
    CHECK(abs(a.hyperbolic_value - b.hyperbolic_value) < Real("1e-70"));
    CHECK(abs(a.euclidean_value - b.euclidean_value) < Real("1e-70"));

    // monotone divergence in n
    auto d1 = delta_bounds(Rat(3), 10);
    auto d2 = delta_bounds(Rat(3), 100);
    auto d3 = delta_bounds(Rat(3), 10000);
    CHECK(d1.hyperbolic_value < d2.hyperbolic_value);
    CHECK(d2.hyperbolic_value < d3.hyperbolic_value);

    CHECK_THROWS_AS(delta_bounds(Rat(0), 1), ParameterError);
}

TEST_CASE("central power identity in the mod-k Heisenberg group") {
    auto r1 = central_power_identity_check(1, 5);
    CHECK(r1.holds);
    CHECK(r1.exponent == 1);

    auto r4 = central_power_identity_check(4, 2);
    CHECK(r4.holds);
    CHECK(r4.exponent == 10);
    CHECK(r4.exponent % 2 == 0);

    auto r2 = central_power_identity_check(2, 5);
    CHECK(r2.holds);
    CHECK(r2.exponent == 3);

    // larger spot checks
    CHECK(central_power_identity_check(7, 12).holds);
    CHECK(central_power_identity_check(10, 9).holds);
}

TEST_CASE("index bound values") {
    CHECK(index_bound(1, 1) == 2);
    CHECK(index_bound(8, 2) == 24576);
    CHECK_THROWS_AS(index_bound(9, 1), ParameterError);
}

TEST_CASE("index bound at K = 8! has the exact digit count") {
    // 8^{2*40320} * 40321!; digit counts verified against an independent
    // big-integer computation: 72826 + 168192 digits of the factors,
    // 241017 for the product.
    Int v = index_bound(8, 40320);
    CHECK(digit_count(pow_int(Int(8), 80640)) == 72826);
    CHECK(digit_count(factorial(40321)) == 168192);
    CHECK(digit_count(v) == 241017);

    // cross-check against log10 summation
    Real lg = Real(80640L) * log10(Real(8L));
    for (unsigned long k = 2; k <= 40321; ++k) lg = lg + log10(Real(static_cast<long>(k)));
    Int floor_lg = to_int_exact(floor(lg));
    CHECK(floor_lg + 1 == Int(241017));
}
