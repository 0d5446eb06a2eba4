#include "cremona/weierstrass.hpp"

namespace cremona::weierstrass {

Curve<RatFuncField<Fp>> lang_pencil_curve() {
    RatFuncField<Fp> K(Fp(2));
    auto t = K.variable_elem();
    auto t3 = K.mul(t, K.mul(t, t));
    return {K, K.one(), K.zero(), t3, K.zero(), K.one()};
}

TranslationDegrees weierstrass_translation_degrees(unsigned N) {
    if (N < 1) throw ParameterError("need N >= 1");
    auto E = lang_pencil_curve();
    const auto& K = E.K;
    // the section t -> (-1, 0); in characteristic 2 this is (1, 0)
    Curve<RatFuncField<Fp>>::Point P = std::make_pair(K.from_int(-1), K.zero());
    if (!E.on_curve(P)) throw InternalError("translation point is not on the curve");

    TranslationDegrees out;
    Curve<RatFuncField<Fp>>::Point acc = std::nullopt;
    for (unsigned n = 1; n <= N; ++n) {
        acc = E.add(acc, P);
        if (!E.on_curve(acc)) throw InternalError("group law left the curve");
        if (!acc) throw InternalError("translation point has finite order");
        out.x_degrees.push_back(acc->first.deg());
    }
    std::vector<long> d1, d2;
    for (std::size_t i = 0; i + 1 < out.x_degrees.size(); ++i)
        d1.push_back(out.x_degrees[i + 1] - out.x_degrees[i]);
    for (std::size_t i = 0; i + 1 < d1.size(); ++i) d2.push_back(d1[i + 1] - d1[i]);
    out.second_differences = d2;

    auto tail_constant = [&](std::size_t need) {
        if (d2.size() < need) return false;
        for (std::size_t i = d2.size() - need; i < d2.size(); ++i)
            if (d2[i] != d2[d2.size() - need]) return false;
        return true;
    };
    out.second_differences_eventually_constant = tail_constant(3);

    out.period = 0;
    out.second_differences_eventually_periodic = false;
    for (unsigned p = 1; p <= 3 && !out.second_differences_eventually_periodic; ++p) {
        if (d2.size() < 2 * p) continue;
        bool ok = true;
        // compare the tail with itself shifted by p, over the last 2/3 of d2
        std::size_t start = d2.size() / 3;
        for (std::size_t i = start; i + p < d2.size(); ++i)
            if (d2[i] != d2[i + p]) { ok = false; break; }
        if (ok) {
            out.second_differences_eventually_periodic = true;
            out.period = p;
        }
    }
    return out;
}

} // namespace cremona::weierstrass
