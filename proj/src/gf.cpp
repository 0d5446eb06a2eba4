#include "cremona/gf.hpp"

#include <sstream>

namespace cremona {

namespace {

using Poly = std::vector<std::uint64_t>; // low-to-high over F_p

void ptrim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly pmulmod(const Fp& F, const Poly& a, const Poly& b, const Poly& mod) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = F.add(prod[i + j], F.mul(a[i], b[j]));
    }
    const std::size_t m = mod.size() - 1; // degree of the monic modulus
    for (std::size_t d = prod.size(); d-- > m;) {
        std::uint64_t c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (std::size_t i = 0; i < m; ++i)
            prod[d - m + i] = F.sub(prod[d - m + i], F.mul(c, mod[i]));
    }
    ptrim(prod);
    return prod;
}

Poly ppowmod(const Fp& F, Poly base, std::uint64_t e, const Poly& mod) {
    Poly r{1};
    while (e) {
        if (e & 1) r = pmulmod(F, r, base, mod);
        base = pmulmod(F, base, base, mod);
        e >>= 1;
    }
    return r;
}

Poly pgcd(const Fp& F, Poly a, Poly b) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // a mod b
        std::uint64_t ilc = F.inv(b.back());
        while (a.size() >= b.size() && !a.empty()) {
            std::uint64_t c = F.mul(a.back(), ilc);
            std::size_t s = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[s + i] = F.sub(a[s + i], F.mul(c, b[i]));
            ptrim(a);
        }
        std::swap(a, b);
    }
    return a;
}

bool is_irreducible(const Fp& F, const Poly& f) {
    const std::size_t r = f.size() - 1;
    // x^{p^r} == x (mod f) and gcd(x^{p^{r/l}} - x, f) = 1 for primes l | r
    Poly x{0, 1};
    Poly xp = x;
    std::vector<Poly> powers; // x^{p^k} mod f for k = 1..r
    for (std::size_t k = 1; k <= r; ++k) {
        xp = ppowmod(F, xp, F.p, f);
        powers.push_back(xp);
    }
    Poly diff = powers[r - 1];
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = F.sub(diff[1], 1);
    ptrim(diff);
    if (!diff.empty()) return false;
    for (std::size_t l = 2; l <= r; ++l) {
        if (r % l) continue;
        bool lp = true;
        for (std::size_t d = 2; d * d <= l; ++d)
            if (l % d == 0) { lp = false; break; }
        if (!lp) continue;
        Poly g = powers[r / l - 1];
        if (g.size() < 2) g.resize(2, 0);
        g[1] = F.sub(g[1], 1);
        ptrim(g);
        Poly h = pgcd(F, g, f);
        if (h.size() != 1) return false;
    }
    return true;
}

} // namespace

void GFq::init_modulus() {
    if (r_ == 1) {
        mod_ = {0, 1}; // x; unused in degree-1 arithmetic
        return;
    }
    // first irreducible monic polynomial in lexicographic coefficient order
    std::vector<std::uint64_t> f(r_ + 1, 0);
    f[r_] = 1;
    std::uint64_t total = 1;
    for (unsigned i = 0; i < r_; ++i) {
        if (total > (1ull << 40) / base_.p) { total = 1ull << 40; break; }
        total *= base_.p;
    }
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (unsigned i = 0; i < r_; ++i) { f[i] = c % base_.p; c /= base_.p; }
        if (f[0] == 0) continue; // divisible by x
        if (is_irreducible(base_, f)) {
            mod_ = f;
            return;
        }
    }
    throw InternalError("no irreducible modulus found");
}

GFq::Elem GFq::inv(const Elem& a) const {
    if (is_zero(a)) throw DomainError("division by zero in F_q");
    if (r_ == 1) return {base_.inv(a[0])};
    // extended Euclid over F_p[x] against the modulus
    Poly r0 = mod_, r1(a);
    ptrim(r1);
    Poly s0{}, s1{1};
    while (!r1.empty()) {
        // divide r0 by r1
        Poly q;
        Poly rem = r0;
        std::uint64_t ilc = base_.inv(r1.back());
        if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, 0);
        while (rem.size() >= r1.size() && !rem.empty()) {
            std::uint64_t c = base_.mul(rem.back(), ilc);
            std::size_t s = rem.size() - r1.size();
            q[s] = c;
            for (std::size_t i = 0; i < r1.size(); ++i)
                rem[s + i] = base_.sub(rem[s + i], base_.mul(c, r1[i]));
            ptrim(rem);
        }
        // s2 = s0 - q s1
        Poly qs1(q.size() + s1.size() ? q.size() + s1.size() - 1 : 0, 0);
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (!q[i]) continue;
            for (std::size_t j = 0; j < s1.size(); ++j)
                qs1[i + j] = base_.add(qs1[i + j], base_.mul(q[i], s1[j]));
        }
        Poly s2(std::max(s0.size(), qs1.size()), 0);
        for (std::size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (std::size_t i = 0; i < qs1.size(); ++i) s2[i] = base_.sub(s2[i], qs1[i]);
        ptrim(s2);
        r0 = r1; r1 = rem;
        s0 = s1; s1 = s2;
    }
    if (r0.size() != 1) throw InternalError("modulus not irreducible");
    std::uint64_t scale = base_.inv(r0[0]);
    Elem out(r_, 0);
    for (std::size_t i = 0; i < s0.size() && i < r_; ++i) out[i] = base_.mul(s0[i], scale);
    return out;
}

std::string GFq::to_string(const Elem& a) const {
    if (r_ == 1) return std::to_string(a[0]);
    if (is_zero(a)) return "0";
    std::ostringstream os;
    bool first = true;
    for (unsigned i = 0; i < r_; ++i) {
        if (!a[i]) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || a[i] != 1) os << a[i];
        if (i > 0 && a[i] != 1) os << "*";
        if (i == 1) os << "g";
        if (i > 1) os << "g^" << i;
    }
    return os.str();
}

} // namespace cremona
