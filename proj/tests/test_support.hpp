#pragma once

// Shared helpers for the test suites: random lattice isometries of Z^{1,9}
// built from reflections and translations, random isotropic families, and an
// exact integer matrix inverse (isometries have determinant +-1, so the
// rational inverse is integral).

#include <random>
#include <vector>

#include "cremona/lorentz.hpp"
#include "cremona/weyl.hpp"

namespace testsupport {

using namespace cremona;
using lorentz::BoundaryClass;
using lorentz::LatticeIsometry;
using lorentz::LorentzVector;

inline IMat inverse_int_impl(const IMat& m) {
    QMat inv = inverse(to_rational(m));
    IMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (inv(i, j).get_den() != 1) throw InternalError("non-integral inverse");
            r(i, j) = inv(i, j).get_num();
        }
    return r;
}

inline std::vector<Int> random_e8_vector(std::mt19937_64& rng, int spread = 3) {
    std::uniform_int_distribution<int> d(-spread, spread);
    std::vector<Int> w(10, 0);
    for (int i = 0; i <= 8; ++i) {
        int c = d(rng);
        if (c == 0) continue;
        auto alpha = weyl::root(i);
        for (std::size_t j = 0; j < 10; ++j) w[j] += c * alpha[j];
    }
    return w;
}

// Random element of W9 extended by iota-translations: a word in the nine
// reflections and one translation.
inline LatticeIsometry random_w9_isometry(std::mt19937_64& rng, int length = 6) {
    std::uniform_int_distribution<int> pick(0, 9);
    IMat m = IMat::identity(10);
    for (int i = 0; i < length; ++i) {
        int r = pick(rng);
        if (r <= 8) {
            m = m * weyl::reflection(r).m;
        } else {
            auto w = random_e8_vector(rng, 1);
            m = m * weyl::iota(weyl::E8Class(w)).m;
        }
    }
    return LatticeIsometry(m);
}

inline LorentzVector random_vector(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    std::vector<Rat> c(10);
    for (auto& x : c) {
        Rat r(num(rng), den(rng));
        r.canonicalize();
        x = r;
    }
    if (c[0] <= 0) c[0] = Rat(std::abs(num(rng)) + 5);
    return LorentzVector{c};
}

// Distinct primitive isotropic vectors obtained by moving xi9 and e0-e1
// around by random isometries.
inline std::vector<BoundaryClass> random_isotropic_family(std::mt19937_64& rng, std::size_t count) {
    std::vector<BoundaryClass> fam;
    std::vector<std::vector<Int>> seen;
    std::vector<Int> xi9(10, -1);
    xi9[0] = 3;
    std::vector<Int> e01(10, 0);
    e01[0] = 1; e01[1] = -1;
    std::uniform_int_distribution<int> which(0, 1);
    while (fam.size() < count) {
        auto g = random_w9_isometry(rng);
        auto v = g.apply_int(which(rng) ? xi9 : e01);
        if (v[0] <= 0) continue;
        bool dup = false;
        for (const auto& s : seen)
            if (s == v) { dup = true; break; }
        if (dup) continue;
        seen.push_back(v);
        fam.emplace_back(v);
    }
    return fam;
}

} // namespace testsupport

// exact inverse of an integer matrix with |det| = 1
inline cremona::IMat inverse_int(const cremona::IMat& m) { return testsupport::inverse_int_impl(m); }
