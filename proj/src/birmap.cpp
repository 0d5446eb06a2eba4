#include "cremona/birmap.hpp"

namespace cremona::birmap {

Growth classify_growth(const std::vector<Int>& v) {
    const std::size_t n = v.size();
    if (n < 6) throw ParameterError("growth classification needs at least 6 degrees");
    for (const auto& d : v)
        if (d < 1) throw ParameterError("degrees must be positive");

    const std::size_t half = (n + 1) / 2;
    Int head_max = 0, tail_max = 0;
    for (std::size_t i = 0; i < half; ++i)
        if (v[i] > head_max) head_max = v[i];
    for (std::size_t i = half; i < n; ++i)
        if (v[i] > tail_max) tail_max = v[i];
    if (tail_max <= head_max) return Growth::Bounded;

    auto diffs = [](const std::vector<Int>& s) {
        std::vector<Int> d;
        for (std::size_t i = 0; i + 1 < s.size(); ++i) d.push_back(s[i + 1] - s[i]);
        return d;
    };
    auto tail3_constant_positive = [](const std::vector<Int>& d) {
        if (d.size() < 3) return false;
        const Int& a = d[d.size() - 3];
        return a > 0 && d[d.size() - 2] == a && d[d.size() - 1] == a;
    };
    auto d1 = diffs(v);
    if (tail3_constant_positive(d1)) return Growth::Linear;
    auto d2 = diffs(d1);
    if (tail3_constant_positive(d2)) return Growth::Quadratic;

    // ratio at least 101/100 across the last half
    bool expo = true;
    for (std::size_t i = n - 1 - half; i + 1 < n; ++i)
        if (v[i + 1] * 100 < v[i] * 101) { expo = false; break; }
    if (expo) return Growth::Exponential;
    return Growth::Inconclusive;
}

} // namespace cremona::birmap
