#include "cremona/skew.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace cremona::skew {

SkewPoly skew_trim(const GFq& K, SkewPoly s) {
    while (!s.a.empty() && K.is_zero(s.a.back())) s.a.pop_back();
    return s;
}

SkewPoly skew_const(const GFq& K, GFq::Elem c) {
    SkewPoly s;
    if (!K.is_zero(c)) s.a.push_back(std::move(c));
    return s;
}

SkewPoly skew_frobenius_term(const GFq& K, GFq::Elem c, unsigned j) {
    SkewPoly s;
    if (K.is_zero(c)) return s;
    s.a.assign(j + 1, K.zero());
    s.a[j] = std::move(c);
    return s;
}

SkewPoly skew_add(const GFq& K, const SkewPoly& x, const SkewPoly& y) {
    SkewPoly r;
    r.a.resize(std::max(x.a.size(), y.a.size()), K.zero());
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i];
    for (std::size_t i = 0; i < y.a.size(); ++i) r.a[i] = K.add(r.a[i], y.a[i]);
    return skew_trim(K, std::move(r));
}

SkewPoly skew_neg(const GFq& K, const SkewPoly& x) {
    SkewPoly r = x;
    for (auto& c : r.a) c = K.neg(c);
    return r;
}

SkewPoly skew_mul(const GFq& K, const SkewPoly& x, const SkewPoly& y) {
    SkewPoly r;
    if (x.is_zero() || y.is_zero()) return r;
    r.a.assign(x.a.size() + y.a.size() - 1, K.zero());
    for (std::size_t i = 0; i < x.a.size(); ++i) {
        if (K.is_zero(x.a[i])) continue;
        for (std::size_t j = 0; j < y.a.size(); ++j) {
            if (K.is_zero(y.a[j])) continue;
            // (a Fr^i)(b Fr^j) = a b^{p^i} Fr^{i+j}
            r.a[i + j] = K.add(r.a[i + j], K.mul(x.a[i], K.frobenius(y.a[j], i)));
        }
    }
    return skew_trim(K, std::move(r));
}

bool skew_eq(const GFq& K, const SkewPoly& x, const SkewPoly& y) {
    if (x.a.size() != y.a.size()) return false;
    for (std::size_t i = 0; i < x.a.size(); ++i)
        if (!K.eq(x.a[i], y.a[i])) return false;
    return true;
}

GFq::Elem skew_eval(const GFq& K, const SkewPoly& x, const GFq::Elem& v) {
    auto r = K.zero();
    auto fr = v;
    for (std::size_t j = 0; j < x.a.size(); ++j) {
        if (!K.is_zero(x.a[j])) r = K.add(r, K.mul(x.a[j], fr));
        if (j + 1 < x.a.size()) fr = K.frobenius(fr, 1);
    }
    return r;
}

UPoly<GFq> skew_to_upoly(const GFq& K, const SkewPoly& x) {
    UPoly<GFq> u;
    if (x.is_zero()) return u;
    std::size_t top = 1;
    for (std::size_t j = 1; j < x.a.size(); ++j) top *= K.characteristic();
    u.c.assign(top + 1, K.zero());
    std::size_t pj = 1;
    for (std::size_t j = 0; j < x.a.size(); ++j) {
        u.c[pj] = x.a[j];
        pj *= K.characteristic();
    }
    utrim(K, u);
    return u;
}

bool additivity_check(const GFq& K, const UPoly<GFq>& phi, unsigned samples,
                      unsigned long seed) {
    // symbolic: phi(x+y) - phi(x) - phi(y) = 0 as a polynomial identity;
    // expand via binomials in the prime field
    const unsigned long p = K.characteristic();
    long d = phi.deg();
    if (d >= 0) {
        // coefficient of x^i y^{k-i} in phi(x+y) is C(k, i) phi_k
        for (long k = 0; k <= d; ++k) {
            if (K.is_zero(phi.c[k])) continue;
            // binomials mod p via Pascal row
            std::vector<unsigned long> row(k + 1, 0);
            row[0] = 1;
            for (long i = 1; i <= k; ++i)
                for (long j = i; j > 0; --j) row[j] = (row[j] + row[j - 1]) % p;
            for (long i = 1; i < k; ++i)
                if (row[i] % p != 0) return false; // mixed term survives
        }
    }
    std::mt19937_64 rng(seed);
    for (unsigned s = 0; s < samples; ++s) {
        auto x = K.sample(rng), y = K.sample(rng);
        auto lhs = ueval(K, phi, K.add(x, y));
        auto rhs = K.add(ueval(K, phi, x), ueval(K, phi, y));
        if (!K.eq(lhs, rhs)) return false;
    }
    return true;
}

SkewMatrix skew_mat_mul(const GFq& K, const SkewMatrix& m, const SkewMatrix& n) {
    return {skew_add(K, skew_mul(K, m.a, n.a), skew_mul(K, m.b, n.c)),
            skew_add(K, skew_mul(K, m.a, n.b), skew_mul(K, m.b, n.d)),
            skew_add(K, skew_mul(K, m.c, n.a), skew_mul(K, m.d, n.c)),
            skew_add(K, skew_mul(K, m.c, n.b), skew_mul(K, m.d, n.d))};
}

bool skew_mat_eq(const GFq& K, const SkewMatrix& m, const SkewMatrix& n) {
    return skew_eq(K, m.a, n.a) && skew_eq(K, m.b, n.b) && skew_eq(K, m.c, n.c) &&
           skew_eq(K, m.d, n.d);
}

SkewMatrix skew_mat_identity(const GFq& K) {
    return {skew_const(K, K.one()), SkewPoly{}, SkewPoly{}, skew_const(K, K.one())};
}

PAutElement paut_identity(const GFq& K) { return {skew_mat_identity(K), K.zero(), K.zero()}; }

std::pair<GFq::Elem, GFq::Elem> paut_apply(const GFq& K, const PAutElement& f,
                                           const GFq::Elem& x, const GFq::Elem& y) {
    auto u = K.add(K.add(skew_eval(K, f.linear.a, x), skew_eval(K, f.linear.b, y)), f.tu);
    auto v = K.add(K.add(skew_eval(K, f.linear.c, x), skew_eval(K, f.linear.d, y)), f.tv);
    return {u, v};
}

PAutElement paut_compose(const GFq& K, const PAutElement& f, const PAutElement& g) {
    PAutElement r;
    r.linear = skew_mat_mul(K, f.linear, g.linear);
    // translation: f(g(0) ... ) = M_f(t_g) + t_f
    auto tx = K.add(K.add(skew_eval(K, f.linear.a, g.tu), skew_eval(K, f.linear.b, g.tv)), f.tu);
    auto ty = K.add(K.add(skew_eval(K, f.linear.c, g.tu), skew_eval(K, f.linear.d, g.tv)), f.tv);
    r.tu = tx;
    r.tv = ty;
    return r;
}

bool paut_eq(const GFq& K, const PAutElement& f, const PAutElement& g) {
    return skew_mat_eq(K, f.linear, g.linear) && K.eq(f.tu, g.tu) && K.eq(f.tv, g.tv);
}

Int paut_degree(const GFq& K, const PAutElement& f) {
    long d = 0;
    for (const SkewPoly* s : {&f.linear.a, &f.linear.b, &f.linear.c, &f.linear.d})
        d = std::max(d, s->deg());
    Int r = 1;
    for (long i = 0; i < d; ++i) r *= static_cast<unsigned long>(K.characteristic());
    return r;
}

bool in_aff(const GFq& K, const PAutElement& f) {
    (void)K;
    for (const SkewPoly* s : {&f.linear.a, &f.linear.b, &f.linear.c, &f.linear.d})
        if (s->deg() > 0) return false;
    return true;
}

bool in_pel(const GFq& K, const PAutElement& f) {
    // (x, y) -> (u x + q(y) + s, v y + r): c = 0, a and d nonzero constants
    (void)K;
    return f.linear.c.is_zero() && f.linear.a.deg() == 0 && f.linear.d.deg() == 0;
}

bool in_s(const GFq& K, const PAutElement& f) { return in_aff(K, f) && in_pel(K, f); }

bool AmalgamWord::cyclically_reduced() const {
    if (factors.size() < 2) return true;
    return factors.front().tag != factors.back().tag;
}

PAutElement word_product(const GFq& K, const AmalgamWord& w) {
    PAutElement r = paut_identity(K);
    for (const auto& f : w.factors) r = paut_compose(K, r, f.map);
    return r;
}

namespace {

const SkewPoly& entry(const SkewMatrix& m, int r, int c) {
    if (r == 0) return c == 0 ? m.a : m.b;
    return c == 0 ? m.c : m.d;
}

PAutElement swap_J(const GFq& K) {
    PAutElement j;
    j.linear = {SkewPoly{}, skew_const(K, K.one()), skew_const(K, K.one()), SkewPoly{}};
    j.tu = K.zero();
    j.tv = K.zero();
    return j;
}

// g_u(x, y) = (x, y + u Fr^k(x))
PAutElement lower_shear(const GFq& K, const GFq::Elem& u, unsigned k) {
    PAutElement g;
    g.linear = {skew_const(K, K.one()), SkewPoly{}, skew_frobenius_term(K, u, k),
                skew_const(K, K.one())};
    g.tu = K.zero();
    g.tv = K.zero();
    return g;
}

// merge an S factor into its neighbor, collapse equal tags, drop identities
void normalize_word(const GFq& K, std::vector<Factor>& w) {
    bool changed = true;
    auto is_id = [&](const PAutElement& f) { return paut_eq(K, f, paut_identity(K)); };
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (is_id(w[i].map)) {
                w.erase(w.begin() + i);
                changed = true;
                break;
            }
        }
        if (changed) continue;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            bool merge = w[i].tag == w[i + 1].tag || in_s(K, w[i].map) || in_s(K, w[i + 1].map);
            if (!merge) continue;
            PAutElement prod = paut_compose(K, w[i].map, w[i + 1].map);
            FactorTag tag;
            if (in_s(K, prod))
                tag = w[i].tag; // still in the intersection; tag refined later
            else if (in_aff(K, prod))
                tag = FactorTag::Aff;
            else if (in_pel(K, prod))
                tag = FactorTag::PEl;
            else
                continue; // product leaves both factors; keep the word as is
            w[i] = {tag, std::move(prod)};
            w.erase(w.begin() + i + 1);
            changed = true;
            break;
        }
    }
    // canonical tags for leftovers in S
    for (auto& f : w) {
        if (in_s(K, f.map)) f.tag = FactorTag::Aff;
        else if (in_aff(K, f.map)) f.tag = FactorTag::Aff;
        else f.tag = FactorTag::PEl;
    }
}

} // namespace

Decomposition amalgam_decompose(const GFq& K, const PAutElement& f) {
    Decomposition out;
    std::vector<Factor> left; // input = left[0] o ... o left.back() o work
    PAutElement work = f;
    out.complexity_trace.push_back(std::max(0L, work.linear.a.deg()) +
                                   std::max(0L, work.linear.c.deg()));
    for (;;) {
        const SkewPoly& a = work.linear.a;
        const SkewPoly& c = work.linear.c;
        if (c.is_zero()) {
            if (a.deg() != 0 || work.linear.d.deg() != 0)
                throw DomainError("matrix is not invertible over k[Fr]");
            left.push_back({FactorTag::PEl, work});
            break;
        }
        if (a.is_zero()) {
            // J o work is elementary if its own (a, d) are constants
            left.push_back({FactorTag::Aff, swap_J(K)});
            work = paut_compose(K, swap_J(K), work);
            continue;
        }
        long m = a.deg(), n = c.deg();
        if (m > n) {
            left.push_back({FactorTag::Aff, swap_J(K)});
            work = paut_compose(K, swap_J(K), work);
            continue;
        }
        // pivot u = c_n (Fr^{n-m}(a_m))^{-1}; g o work cancels the top of c
        unsigned k = static_cast<unsigned>(n - m);
        auto u = K.mul(c.a[n], K.inv(K.frobenius(a.a[m], k)));
        auto g = lower_shear(K, u, k);
        auto g_inv = lower_shear(K, K.neg(u), k);
        PAutElement next = paut_compose(K, g, work);
        long before = std::max(0L, a.deg()) + std::max(0L, c.deg());
        long after = std::max(0L, next.linear.a.deg()) + std::max(0L, next.linear.c.deg());
        if (next.linear.c.is_zero()) after = std::max(0L, next.linear.a.deg());
        if (after >= before) throw DomainError("reduction stalls: matrix not invertible over k[Fr]");
        out.complexity_trace.push_back(after);
        // g^{-1} = J o (x + u Fr^k(y), y) o J, or a plain affine map when k = 0
        if (k == 0) {
            left.push_back({FactorTag::Aff, g_inv});
        } else {
            PAutElement e_inv;
            e_inv.linear = {skew_const(K, K.one()), skew_frobenius_term(K, K.neg(u), k),
                            SkewPoly{}, skew_const(K, K.one())};
            e_inv.tu = K.zero();
            e_inv.tv = K.zero();
            left.push_back({FactorTag::Aff, swap_J(K)});
            left.push_back({FactorTag::PEl, e_inv});
            left.push_back({FactorTag::Aff, swap_J(K)});
        }
        work = std::move(next);
    }
    normalize_word(K, left);
    out.word.factors = std::move(left);
    if (!paut_eq(K, word_product(K, out.word), f))
        throw InternalError("decomposition does not re-multiply to the input");
    return out;
}

CyclicReduction cyclically_reduce(const GFq& K, AmalgamWord w) {
    CyclicReduction out;
    normalize_word(K, w.factors);
    while (w.factors.size() >= 2 && w.factors.front().tag == w.factors.back().tag) {
        Factor head = w.factors.front();
        w.factors.erase(w.factors.begin());
        // w = head o rest: conjugating by head^{-1} gives rest o head
        PAutElement merged = paut_compose(K, w.factors.back().map, head.map);
        w.factors.back().map = std::move(merged);
        out.conjugator.push_back(head);
        normalize_word(K, w.factors);
    }
    out.word = std::move(w);
    return out;
}

PAutElement paut_inverse(const GFq& K, const PAutElement& f) {
    auto dec = amalgam_decompose(K, f);
    PAutElement inv = paut_identity(K);
    for (const auto& factor : dec.word.factors) {
        const PAutElement& g = factor.map;
        PAutElement gi;
        if (in_aff(K, g)) {
            // constant 2x2 matrix: invert by the adjugate over F_q
            auto a = g.linear.a.is_zero() ? K.zero() : g.linear.a.a[0];
            auto b = g.linear.b.is_zero() ? K.zero() : g.linear.b.a[0];
            auto c = g.linear.c.is_zero() ? K.zero() : g.linear.c.a[0];
            auto d = g.linear.d.is_zero() ? K.zero() : g.linear.d.a[0];
            auto det = K.sub(K.mul(a, d), K.mul(b, c));
            auto idet = K.inv(det);
            auto ia = K.mul(d, idet), ib = K.neg(K.mul(b, idet));
            auto ic = K.neg(K.mul(c, idet)), id = K.mul(a, idet);
            gi.linear = {skew_const(K, ia), skew_const(K, ib), skew_const(K, ic),
                         skew_const(K, id)};
            // translation: M^{-1}(x - t)
            auto mtu = K.neg(K.add(K.mul(ia, g.tu), K.mul(ib, g.tv)));
            auto mtv = K.neg(K.add(K.mul(ic, g.tu), K.mul(id, g.tv)));
            gi.tu = mtu;
            gi.tv = mtv;
        } else {
            // elementary: (x, y) -> (u x + q(y) + s, v y + r)
            auto u = g.linear.a.a[0];
            auto v = g.linear.d.a[0];
            const SkewPoly& q = g.linear.b;
            auto iu = K.inv(u), iv = K.inv(v);
            // y = v^{-1}(y' - r); x = u^{-1}(x' - q(y) - s)
            SkewPoly qv; // q(v^{-1} .) as a skew polynomial
            qv.a.reserve(q.a.size());
            {
                auto scale = iv;
                for (std::size_t j = 0; j < q.a.size(); ++j) {
                    qv.a.push_back(K.mul(q.a[j], scale));
                    scale = K.frobenius(iv, static_cast<unsigned>(j + 1));
                    scale = K.pow(iv, Int(1));
                    // scale for the next index is (v^{-1})^{p^{j+1}}
                    scale = K.frobenius(iv, static_cast<unsigned>(j + 1));
                }
                qv = skew_trim(K, std::move(qv));
            }
            SkewPoly b_inv;
            b_inv.a.reserve(qv.a.size());
            for (const auto& coeff : qv.a) b_inv.a.push_back(K.neg(K.mul(iu, coeff)));
            b_inv = skew_trim(K, std::move(b_inv));
            gi.linear = {skew_const(K, iu), b_inv, SkewPoly{}, skew_const(K, iv)};
            // constants: x gains u^{-1}(q(v^{-1} r) - s), y gains -v^{-1} r
            auto qvr = skew_eval(K, q, K.mul(iv, g.tv));
            gi.tu = K.mul(iu, K.sub(qvr, g.tu));
            gi.tv = K.neg(K.mul(iv, g.tv));
        }
        // inverse of the word multiplies factor inverses in reverse
        inv = paut_compose(K, gi, inv);
    }
    if (!paut_eq(K, paut_compose(K, inv, f), paut_identity(K)))
        throw InternalError("inverse construction failed");
    return inv;
}

Int dynamical_degree(const GFq& K, const PAutElement& f) {
    auto dec = amalgam_decompose(K, f);
    auto cyc = cyclically_reduce(K, dec.word);
    if (cyc.word.factors.size() <= 1) return 1;
    Int prod = 1;
    for (const auto& factor : cyc.word.factors) prod *= paut_degree(K, factor.map);
    // the product equals the degree of the cyclically reduced composite
    Int direct = paut_degree(K, word_product(K, cyc.word));
    if (prod != direct) throw InternalError("factor degree product mismatch");
    return prod;
}

NormalizesReport normalizes_translations(const GFq& K, const PAutElement& f, unsigned samples,
                                         unsigned long seed) {
    NormalizesReport rep{true, true, true};
    auto finv = paut_inverse(K, f);
    std::mt19937_64 rng(seed);
    bool fixes_origin = K.is_zero(f.tu) && K.is_zero(f.tv);
    std::vector<std::pair<std::pair<GFq::Elem, GFq::Elem>, std::pair<GFq::Elem, GFq::Elem>>> пусто;
    (void)пусто;
    std::vector<std::pair<GFq::Elem, GFq::Elem>> ins, outs;
    for (unsigned s = 0; s < samples; ++s) {
        auto a = K.sample(rng), b = K.sample(rng);
        PAutElement t = paut_identity(K);
        t.tu = a;
        t.tv = b;
        auto conj = paut_compose(K, paut_compose(K, f, t), finv);
        if (!skew_mat_eq(K, conj.linear, skew_mat_identity(K))) rep.all_translations = false;
        ins.push_back({a, b});
        outs.push_back({conj.tu, conj.tv});
        if (fixes_origin) {
            auto img = paut_apply(K, f, a, b);
            if (!K.eq(img.first, conj.tu) || !K.eq(img.second, conj.tv))
                rep.induced_matches_f = false;
        }
    }
    // additivity of the induced map on sampled sums
    for (std::size_t i = 0; i + 1 < ins.size(); i += 2) {
        PAutElement t = paut_identity(K);
        t.tu = K.add(ins[i].first, ins[i + 1].first);
        t.tv = K.add(ins[i].second, ins[i + 1].second);
        auto conj = paut_compose(K, paut_compose(K, f, t), paut_inverse(K, f));
        if (!K.eq(conj.tu, K.add(outs[i].first, outs[i + 1].first)) ||
            !K.eq(conj.tv, K.add(outs[i].second, outs[i + 1].second)))
            rep.induced_additive = false;
    }
    return rep;
}

std::string skew_to_string(const GFq& K, const SkewPoly& s) {
    if (s.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < s.a.size(); ++j) {
        if (K.is_zero(s.a[j])) continue;
        if (!first) os << " + ";
        first = false;
        std::string coeff = K.to_string(s.a[j]);
        bool needs_parens = coeff.find('+') != std::string::npos;
        if (j == 0) {
            os << coeff;
        } else {
            if (needs_parens) os << '(' << coeff << ')';
            else os << coeff;
            os << "*F";
            if (j > 1) os << '^' << j;
        }
    }
    return os.str();
}

namespace {

GFq::Elem parse_gfq_elem(const GFq& K, const std::string& text) {
    // sums of <int>, g, <int>*g^<k>
    auto r = K.zero();
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(text[pos])) ++pos; };
    bool first = true;
    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (!first) {
            throw ParseError("expected '+' between field element terms");
        }
        long coeff = 1;
        bool have_coeff = false;
        if (pos < text.size() && std::isdigit(text[pos])) {
            std::size_t used = 0;
            coeff = std::stol(text.substr(pos), &used);
            pos += used;
            have_coeff = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
            }
        }
        unsigned degree = 0;
        if (pos < text.size() && text[pos] == 'g') {
            ++pos;
            degree = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                std::size_t used = 0;
                degree = static_cast<unsigned>(std::stoul(text.substr(pos), &used));
                pos += used;
            }
        } else if (!have_coeff) {
            throw ParseError("bad field element '" + text + "'");
        }
        auto term = K.from_int(sign * coeff);
        if (degree) term = K.mul(term, K.pow(K.generator(), Int(degree)));
        r = K.add(r, term);
        first = false;
    }
    return r;
}

} // namespace

SkewPoly parse_skew(const GFq& K, const std::string& text) {
    // split on '+' at depth 0 (parentheses group F_q coefficients)
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == '+' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    SkewPoly out;
    for (auto part : parts) {
        // strip spaces
        std::string s;
        for (char ch : part)
            if (!std::isspace(ch)) s += ch;
        if (s.empty()) continue;
        unsigned degree = 0;
        std::string coeff = s;
        auto fpos = s.find('F');
        if (fpos != std::string::npos && (fpos == 0 || s[fpos - 1] != '^')) {
            degree = 1;
            if (fpos + 1 < s.size() && s[fpos + 1] == '^')
                degree = static_cast<unsigned>(std::stoul(s.substr(fpos + 2)));
            coeff = s.substr(0, fpos);
            if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
            if (coeff.empty()) coeff = "1";
        }
        if (!coeff.empty() && coeff.front() == '(' && coeff.back() == ')')
            coeff = coeff.substr(1, coeff.size() - 2);
        auto c = parse_gfq_elem(K, coeff);
        out = skew_add(K, out, skew_frobenius_term(K, c, degree));
    }
    return out;
}

} // namespace cremona::skew
