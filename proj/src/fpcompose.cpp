#include "cremona/fpcompose.hpp"

#include <algorithm>

#include "cremona/errors.hpp"

namespace cremona::fpk {

namespace {

using U = std::uint64_t;

// Barrett-style reducer for word-sized primes; the grids here make the
// multiply-reduce the single hottest operation.
struct Mod {
    U p;
    explicit Mod(U prime) : p(prime) {}
    U add(U a, U b) const { U s = a + b; return s >= p ? s - p : s; }
    U sub(U a, U b) const { return a >= b ? a - b : a + p - b; }
    U mul(U a, U b) const { return static_cast<U>((__uint128_t)a * b % p); }
    U neg(U a) const { return a ? p - a : 0; }
    U pow(U a, U e) const {
        U r = 1 % p;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    U inv(U a) const {
        if (!a) throw DomainError("division by zero in grid kernel");
        return pow(a, p - 2);
    }
};

void row_trim(Row& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

U row_eval(const Mod& K, const Row& a, U x) {
    U r = 0;
    for (std::size_t i = a.size(); i-- > 0;) r = K.add(K.mul(r, x), a[i]);
    return r;
}

Row row_gcd(const Mod& K, Row a, Row b) {
    row_trim(a);
    row_trim(b);
    while (!b.empty()) {
        U ilc = K.inv(b.back());
        while (a.size() >= b.size() && !a.empty()) {
            U c = K.mul(a.back(), ilc);
            std::size_t s = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[s + i] = K.sub(a[s + i], K.mul(c, b[i]));
            row_trim(a);
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        U ilc = K.inv(a.back());
        for (auto& v : a) v = K.mul(v, ilc);
    }
    return a;
}

bool row_div_exact(const Mod& K, Row a, const Row& b, Row& quot) {
    row_trim(a);
    if (b.empty()) return false;
    if (a.empty()) {
        quot.clear();
        return true;
    }
    if (a.size() < b.size()) return false;
    quot.assign(a.size() - b.size() + 1, 0);
    U ilc = K.inv(b.back());
    while (a.size() >= b.size() && !a.empty()) {
        U c = K.mul(a.back(), ilc);
        std::size_t s = a.size() - b.size();
        quot[s] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[s + i] = K.sub(a[s + i], K.mul(c, b[i]));
        row_trim(a);
    }
    return a.empty();
}

// inverse factorials 0!^-1 .. (m-1)!^-1
std::vector<U> inverse_factorials(const Mod& K, std::size_t m) {
    std::vector<U> invfact(std::max<std::size_t>(m, 1), 1);
    U fact = 1;
    for (std::size_t k = 2; k < m; ++k) fact = K.mul(fact, static_cast<U>(k) % K.p);
    U inv = K.inv(fact);
    for (std::size_t k = m; k-- > 2;) {
        invfact[k] = inv;
        inv = K.mul(inv, static_cast<U>(k) % K.p);
    }
    return invfact;
}

// values of a degree-<m polynomial at the nodes -> monomial coefficients,
// nodes are 0..m-1 (finite-difference Newton)
Row newton_uniform(const Mod& K, const Row& values, const std::vector<U>& invfact) {
    const std::size_t m = values.size();
    Row diff = values;
    for (std::size_t k = 1; k < m; ++k)
        for (std::size_t i = m - 1; i >= k; --i) diff[i] = K.sub(diff[i], diff[i - 1]);
    for (std::size_t k = 2; k < m; ++k) diff[k] = K.mul(diff[k], invfact[k]);
    Row out(m, 0), basis{1};
    basis.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
        if (diff[k])
            for (std::size_t i = 0; i < basis.size(); ++i)
                out[i] = K.add(out[i], K.mul(diff[k], basis[i]));
        if (k + 1 < m) {
            basis.push_back(0);
            U node = static_cast<U>(k) % K.p;
            for (std::size_t i = basis.size() - 1; i > 0; --i)
                basis[i] = K.sub(basis[i - 1], K.mul(basis[i], node));
            basis[0] = K.mul(basis[0], K.neg(node));
        }
    }
    row_trim(out);
    return out;
}

// Newton interpolation over arbitrary distinct nodes, with the divided
// difference denominators inverted once up-front (they are shared across the
// many coefficient interpolations of one composite)
struct NodeInterp {
    const Mod& K;
    std::vector<U> nodes;
    std::vector<U> invdiff; // invdiff[(k-1)*m + i] = 1/(nodes[i] - nodes[i-k])

    NodeInterp(const Mod& mod, std::vector<U> pts) : K(mod), nodes(std::move(pts)) {
        const std::size_t m = nodes.size();
        invdiff.assign(m * (m - 1), 0);
        for (std::size_t k = 1; k < m; ++k)
            for (std::size_t i = k; i < m; ++i)
                invdiff[(k - 1) * m + i] = K.inv(K.sub(nodes[i], nodes[i - k]));
    }

    Row interpolate(const Row& values) const {
        const std::size_t m = nodes.size();
        Row dd = values;
        for (std::size_t k = 1; k < m; ++k)
            for (std::size_t i = m - 1; i >= k; --i)
                dd[i] = K.mul(K.sub(dd[i], dd[i - 1]), invdiff[(k - 1) * m + i]);
        Row out(m, 0), basis{1};
        basis.reserve(m);
        for (std::size_t k = 0; k < m; ++k) {
            if (dd[k])
                for (std::size_t i = 0; i < basis.size(); ++i)
                    out[i] = K.add(out[i], K.mul(dd[k], basis[i]));
            if (k + 1 < m) {
                basis.push_back(0);
                for (std::size_t i = basis.size() - 1; i > 0; --i)
                    basis[i] = K.sub(basis[i - 1], K.mul(basis[i], nodes[k]));
                basis[0] = K.mul(basis[0], K.neg(nodes[k]));
            }
        }
        row_trim(out);
        return out;
    }
};

} // namespace

std::vector<Row> evaluate_component(const Fp& F, const Poly3<Fp>& p, std::size_t grid) {
    return evaluate_component_rect(F, p, grid, grid);
}

std::vector<Row> evaluate_component_rect(const Fp& F, const Poly3<Fp>& p, std::size_t xgrid,
                                         std::size_t ygrid) {
    Mod K(F.p);
    std::vector<Row> out(xgrid, Row(ygrid, 0));
    long dy = 0;
    for (const auto& [m, c] : p.t) dy = std::max<long>(dy, m.j);
    Row ycoef(dy + 1, 0);
    // power table for x
    long dx = 0;
    for (const auto& [m, c] : p.t) dx = std::max<long>(dx, m.i);
    Row xpow(dx + 1, 1);
    for (std::size_t a = 0; a < xgrid; ++a) {
        U xa = static_cast<U>(a) % K.p;
        for (long i = 1; i <= dx; ++i) xpow[i] = K.mul(xpow[i - 1], xa);
        std::fill(ycoef.begin(), ycoef.end(), 0);
        for (const auto& [m, c] : p.t) ycoef[m.j] = K.add(ycoef[m.j], K.mul(c, xpow[m.i]));
        auto& line = out[a];
        for (std::size_t b = 0; b < ygrid; ++b) line[b] = row_eval(K, ycoef, static_cast<U>(b) % K.p);
    }
    return out;
}

Row newton_interpolate(const Fp& F, const Row& values) {
    Mod K(F.p);
    return newton_uniform(K, values, inverse_factorials(K, values.size()));
}

NormalizedTriple normalize_from_values(const Fp& F, std::array<std::vector<Row>, 3> values,
                                       std::size_t xgrid, std::size_t ygrid, long degree_bound) {
    Mod K(F.p);
    auto invfact = inverse_factorials(K, ygrid);
    // per-line y-polynomials of the raw composites
    std::array<std::vector<Row>, 3> linepoly;
    for (int t = 0; t < 3; ++t) {
        linepoly[t].resize(xgrid);
        for (std::size_t a = 0; a < xgrid; ++a)
            linepoly[t][a] = newton_uniform(K, values[t][a], invfact);
    }

    std::array<long, 3> dy{-1, -1, -1};
    std::array<bool, 3> zero{true, true, true};
    for (int t = 0; t < 3; ++t)
        for (const auto& l : linepoly[t]) {
            dy[t] = std::max<long>(dy[t], static_cast<long>(l.size()) - 1);
            zero[t] = zero[t] && l.empty();
        }

    // usable line: every nonzero component attains its generic y-degree
    std::vector<char> usable(xgrid, 1);
    for (std::size_t a = 0; a < xgrid; ++a)
        for (int t = 0; t < 3; ++t)
            if (!zero[t] && static_cast<long>(linepoly[t][a].size()) - 1 != dy[t]) {
                usable[a] = 0;
                break;
            }

    long dmin = -1;
    std::vector<Row> linegcd(xgrid);
    for (std::size_t a = 0; a < xgrid; ++a) {
        if (!usable[a]) continue;
        Row g;
        for (int t = 0; t < 3; ++t) {
            if (zero[t]) continue;
            g = g.empty() ? linepoly[t][a] : row_gcd(K, g, linepoly[t][a]);
            if (g.size() == 1) break;
        }
        if (g.empty()) throw InternalError("all components vanished on a usable line");
        linegcd[a] = std::move(g);
        long d = static_cast<long>(linegcd[a].size()) - 1;
        if (dmin < 0 || d < dmin) dmin = d;
    }
    if (dmin < 0) throw DomainError("no usable lines; enlarge the prime field");

    std::vector<std::size_t> good;
    for (std::size_t a = 0; a < xgrid; ++a)
        if (usable[a] && static_cast<long>(linegcd[a].size()) - 1 == dmin) good.push_back(a);

    // x-degree of the quotient-times-leading-coefficient interpolant is at
    // most degree_bound, so degree_bound + 1 nodes pin it exactly; everything
    // beyond that is verification
    const std::size_t need = static_cast<std::size_t>(degree_bound) + 1;
    if (good.size() < need + 4)
        throw DomainError("not enough good lines for certified normalization; enlarge the field");

    std::array<std::vector<Row>, 3> quot;
    for (int t = 0; t < 3; ++t) quot[t].resize(good.size());
    for (std::size_t gi = 0; gi < good.size(); ++gi) {
        std::size_t a = good[gi];
        for (int t = 0; t < 3; ++t) {
            if (zero[t]) continue;
            if (!row_div_exact(K, linepoly[t][a], linegcd[a], quot[t][gi]))
                throw InternalError("line gcd does not divide its component");
        }
    }

    std::vector<U> nodes(need);
    for (std::size_t i = 0; i < need; ++i) nodes[i] = static_cast<U>(good[i]) % K.p;
    NodeInterp interp(K, std::move(nodes));
    std::array<DenseBi, 3> T;
    for (int t = 0; t < 3; ++t) {
        if (zero[t]) continue;
        long dyq = -1;
        for (std::size_t gi = 0; gi < need; ++gi)
            dyq = std::max<long>(dyq, static_cast<long>(quot[t][gi].size()) - 1);
        T[t].c.assign(dyq + 1, {});
        Row vals(need);
        for (long j = 0; j <= dyq; ++j) {
            for (std::size_t i = 0; i < need; ++i)
                vals[i] = (static_cast<long>(quot[t][i].size()) > j) ? quot[t][i][j] : 0;
            T[t].c[j] = interp.interpolate(vals);
        }
    }

    // certification on the good lines that were not interpolation nodes:
    // T_t evaluated there must match the line quotient up to one common
    // per-line scalar (the leading coefficient of the hidden common factor)
    for (std::size_t gi = need; gi < good.size(); ++gi) {
        U xa = static_cast<U>(good[gi]) % K.p;
        U lam_num = 0, lam_den = 0;
        for (int t = 0; t < 3; ++t) {
            if (zero[t]) continue;
            Row got(T[t].c.size(), 0);
            for (std::size_t j = 0; j < T[t].c.size(); ++j) got[j] = row_eval(K, T[t].c[j], xa);
            row_trim(got);
            Row q = quot[t][gi];
            row_trim(q);
            if (q.size() != got.size())
                throw InternalError("normalization certificate failed (degree mismatch)");
            for (std::size_t j = 0; j < q.size(); ++j) {
                if (!lam_den && (q[j] || got[j])) {
                    if (!q[j] || !got[j])
                        throw InternalError("normalization certificate failed (support)");
                    lam_num = q[j];
                    lam_den = got[j];
                }
                if (lam_den && K.mul(lam_den, q[j]) != K.mul(lam_num, got[j]))
                    throw InternalError("normalization certificate failed (value)");
            }
        }
    }

    // strip the common univariate content (the hidden leading coefficient)
    Row cont;
    for (int t = 0; t < 3; ++t) {
        if (zero[t]) continue;
        Row c;
        for (const auto& r : T[t].c) {
            Row rr = r;
            row_trim(rr);
            if (rr.empty()) continue;
            c = c.empty() ? rr : row_gcd(K, c, rr);
            if (c.size() == 1) break;
        }
        if (c.empty()) continue;
        cont = cont.empty() ? c : row_gcd(K, cont, c);
        if (cont.size() == 1) break;
    }
    if (cont.size() > 1) {
        for (int t = 0; t < 3; ++t) {
            if (zero[t]) continue;
            for (auto& r : T[t].c) {
                Row rr = r, q;
                row_trim(rr);
                if (rr.empty()) {
                    r.clear();
                    continue;
                }
                if (!row_div_exact(K, rr, cont, q))
                    throw InternalError("content removal failed");
                r = std::move(q);
            }
        }
    }

    long target = -1;
    for (int t = 0; t < 3; ++t) {
        if (zero[t]) continue;
        for (std::size_t j = 0; j < T[t].c.size(); ++j) {
            Row rr = T[t].c[j];
            row_trim(rr);
            if (!rr.empty())
                target = std::max<long>(target, static_cast<long>(rr.size()) - 1 + j);
        }
    }
    if (target < 0) throw InternalError("normalized composite is zero");

    NormalizedTriple out;
    out.degree = target;
    for (int t = 0; t < 3; ++t) {
        if (zero[t]) continue;
        Poly3<Fp> p;
        for (std::size_t j = 0; j < T[t].c.size(); ++j)
            for (std::size_t i = 0; i < T[t].c[j].size(); ++i) {
                U c = T[t].c[j][i];
                if (!c) continue;
                long k = target - static_cast<long>(i) - static_cast<long>(j);
                if (k < 0) throw InternalError("rehomogenization target too small");
                p.t.emplace(Mono{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                                 static_cast<std::uint32_t>(k)},
                            c);
            }
        out.comps[t] = std::move(p);
    }
    return out;
}

std::optional<NormalizedTriple> compose_eval(const Fp& F, const std::array<Poly3<Fp>, 3>& f,
                                             long deg_f, const std::array<Poly3<Fp>, 3>& g,
                                             long deg_g) {
    Mod K(F.p);
    const long D = deg_f * deg_g;
    const std::size_t ygrid = static_cast<std::size_t>(D) + 1;
    const std::size_t xgrid = std::min<std::size_t>(static_cast<std::size_t>(D) + 41,
                                                     static_cast<std::size_t>(F.p));
    if (ygrid > F.p || xgrid < ygrid + 5) return std::nullopt;

    std::array<std::vector<Row>, 3> gv;
    for (int t = 0; t < 3; ++t) gv[t] = evaluate_component_rect(F, g[t], xgrid, ygrid);

    std::array<std::vector<Row>, 3> cv;
    for (int t = 0; t < 3; ++t) cv[t].assign(xgrid, Row(ygrid, 0));
    std::vector<U> pu(deg_f + 1), pv(deg_f + 1), pw(deg_f + 1);
    bool any_nonzero = false;
    for (std::size_t a = 0; a < xgrid; ++a)
        for (std::size_t b = 0; b < ygrid; ++b) {
            U u = gv[0][a][b], v = gv[1][a][b], w = gv[2][a][b];
            pu[0] = pv[0] = pw[0] = 1;
            for (long i = 1; i <= deg_f; ++i) {
                pu[i] = K.mul(pu[i - 1], u);
                pv[i] = K.mul(pv[i - 1], v);
                pw[i] = K.mul(pw[i - 1], w);
            }
            for (int t = 0; t < 3; ++t) {
                U acc = 0;
                for (const auto& [m, c] : f[t].t)
                    acc = K.add(acc, K.mul(K.mul(c, pu[m.i]), K.mul(pv[m.j], pw[m.k])));
                cv[t][a][b] = acc;
                any_nonzero |= (acc != 0);
            }
        }
    if (!any_nonzero)
        throw DomainError("degenerate composition: image lies in the indeterminacy locus");

    return normalize_from_values(F, std::move(cv), xgrid, ygrid, D);
}

} // namespace cremona::fpk
