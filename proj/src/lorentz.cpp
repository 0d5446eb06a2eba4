#include "cremona/lorentz.hpp"

#include <algorithm>
#include <sstream>

#include "cremona/charpoly.hpp"
#include "cremona/errors.hpp"

namespace cremona::lorentz {

LorentzVector::LorentzVector(std::vector<Rat> coeffs) : a(std::move(coeffs)) {
    if (a.size() < 2) throw DimensionError("lorentz vector needs rank >= 1");
}

LorentzVector LorentzVector::basis(std::size_t rank, std::size_t i) {
    if (i > rank) throw DimensionError("basis index exceeds rank");
    std::vector<Rat> c(rank + 1, Rat(0));
    c[i] = 1;
    return LorentzVector(std::move(c));
}

Rat inner(const LorentzVector& u, const LorentzVector& v) {
    if (u.a.size() != v.a.size()) throw DimensionError("rank mismatch in inner product");
    Rat s = u.a[0] * v.a[0];
    for (std::size_t j = 1; j < u.a.size(); ++j) s -= u.a[j] * v.a[j];
    return s;
}

static Rat inner_int(const std::vector<Int>& u, const std::vector<Int>& v) {
    Int s = u[0] * v[0];
    for (std::size_t j = 1; j < u.size(); ++j) s -= u[j] * v[j];
    return Rat(s);
}

BoundaryClass::BoundaryClass(std::vector<Int> coeffs) : v(std::move(coeffs)) {
    if (v.size() < 2) throw DimensionError("boundary class needs rank >= 1");
    if (inner_int(v, v) != 0) throw GeometryError("boundary class must be isotropic");
    if (v[0] <= 0) throw GeometryError("boundary class must have positive e0 part");
    Int g = v[0];
    for (std::size_t j = 1; j < v.size(); ++j) g = gcd(g, v[j]);
    if (g != 1) throw GeometryError("boundary class must be primitive");
}

LorentzVector BoundaryClass::vec() const {
    std::vector<Rat> c;
    c.reserve(v.size());
    for (const auto& z : v) c.emplace_back(z);
    return LorentzVector(std::move(c));
}

bool BoundaryClass::same_ray(const BoundaryClass& o) const {
    // both primitive with positive e0 part, so rays agree iff vectors agree
    return v == o.v;
}

Horoball::Horoball(BoundaryClass c, Rat e) : xi(std::move(c)), eps(std::move(e)) {
    if (eps <= 0) throw ParameterError("horoball level must be positive");
}

bool Horoball::contains(const LorentzVector& p) const {
    Rat s = inner(p, xi.vec());
    return s > 0 && s <= eps;
}

CoshDistance cosh_distance(const LorentzVector& u, const LorentzVector& v) {
    Rat uu = inner(u, u), vv = inner(v, v);
    if (uu <= 0 || vv <= 0) throw GeometryError("cosh_distance needs positive-norm vectors");
    if (u.a[0] <= 0 || v.a[0] <= 0) throw GeometryError("cosh_distance needs upper-sheet representatives");
    Rat uv = inner(u, v);
    Rat cosh_sq = uv * uv / (uu * vv);
    Real d = acosh(sqrt(Real(cosh_sq)));
    return {std::move(cosh_sq), std::move(d)};
}

Rat horoball_gap(const BoundaryClass& x1, const BoundaryClass& x2, const Rat& eps) {
    if (eps <= 0) throw ParameterError("horoball level must be positive");
    if (x1.same_ray(x2)) throw GeometryError("horoball_gap needs distinct boundary rays");
    Rat m = inner(x1.vec(), x2.vec());
    if (m < 1) throw GeometryError("distinct integral isotropic rays must satisfy x1.x2 >= 1");
    return m / (4 * eps * eps) + eps * eps / m;
}

SeparationReport separation_check(const std::vector<BoundaryClass>& family, const Rat& eps) {
    SeparationReport rep;
    rep.bound = 1 / (4 * eps * eps);
    rep.pairs = 0;
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            if (family[i].same_ray(family[j]))
                throw GeometryError("separation_check family contains a repeated ray");
            Rat g = horoball_gap(family[i], family[j], eps);
            if (!rep.min_gap || g < *rep.min_gap) rep.min_gap = g;
            ++rep.pairs;
        }
    rep.separated = !rep.min_gap || *rep.min_gap > rep.bound;
    return rep;
}

LatticeIsometry::LatticeIsometry(IMat mat) : m(std::move(mat)) {
    if (m.rows() != m.cols() || m.rows() < 2) throw DimensionError("isometry matrix must be square, rank >= 1");
    const std::size_t n = m.rows();
    // M^T J M = J with J = diag(1, -1, ..., -1)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Int s = m(0, i) * m(0, j);
            for (std::size_t k = 1; k < n; ++k) s -= m(k, i) * m(k, j);
            Int want = (i != j) ? 0 : (i == 0 ? 1 : -1);
            if (s != want) throw GeometryError("matrix does not preserve the (1,n) form");
        }
    if (m(0, 0) <= 0) throw GeometryError("isometry must preserve the upper sheet");
}

LorentzVector LatticeIsometry::apply(const LorentzVector& v) const {
    if (v.a.size() != m.rows()) throw DimensionError("rank mismatch in isometry action");
    std::vector<Rat> r(v.a.size(), Rat(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) r[i] += Rat(m(i, j)) * v.a[j];
    return LorentzVector(std::move(r));
}

std::vector<Int> LatticeIsometry::apply_int(const std::vector<Int>& v) const {
    if (v.size() != m.rows()) throw DimensionError("rank mismatch in isometry action");
    std::vector<Int> r(v.size(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) r[i] += m(i, j) * v[j];
    return r;
}

namespace {

bool tail_constant(const std::vector<Int>& d, std::size_t need = 3) {
    if (d.size() < need) return false;
    for (std::size_t i = d.size() - need + 1; i < d.size(); ++i)
        if (d[i] != d[d.size() - need]) return false;
    return true;
}

std::vector<Int> differences(const std::vector<Int>& v) {
    std::vector<Int> d;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) d.push_back(v[i + 1] - v[i]);
    return d;
}

} // namespace

Classification classify_isometry(const LatticeIsometry& iso, unsigned horizon) {
    Classification out;
    const std::size_t n = iso.m.rows();

    // Spectral radius > 1? Exact: an upper-sheet-preserving isometry is
    // loxodromic iff its characteristic polynomial has a real root > 1.
    auto chi = char_poly(iso.m);
    RootBracket top;
    if (largest_root_above(chi, Rat(1), real_digits() * 4 + 64, top)) {
        out.type = IsometryType::Loxodromic;
        Real rho = top.mid();
        out.translation_length = log(rho);
        out.spectral_radius = std::move(rho);
        return out;
    }

    // Spectral radius is exactly 1; walk the orbit of e0.
    std::vector<Int> e0(n, 0);
    e0[0] = 1;
    IMat id = IMat::identity(n);
    IMat pw = id;
    out.orbit.push_back(1);
    for (unsigned k = 1; k <= horizon; ++k) {
        pw = iso.m * pw;
        if (pw == id) {
            out.type = IsometryType::Elliptic;
            out.order = k;
            return out;
        }
        std::vector<Int> im(n, 0);
        for (std::size_t i = 0; i < n; ++i) im[i] = pw(i, 0); // pw * e0
        Int d = im[0]; // (M^k e0).e0
        out.orbit.push_back(d);
    }

    auto d1 = differences(out.orbit);
    auto d2 = differences(d1);
    if (tail_constant(d2) && d2.back() > 0) {
        out.type = IsometryType::Parabolic;
        out.parabolic = ParabolicKind::Halphen;
        return out;
    }
    if (tail_constant(d1) && d1.back() > 0) {
        out.type = IsometryType::Parabolic;
        out.parabolic = ParabolicKind::Jonquieres;
        return out;
    }
    std::size_t window = std::min<std::size_t>(out.orbit.size(), 8);
    Int wmax = 0;
    for (std::size_t i = 0; i < window; ++i) {
        Int a = abs(out.orbit[i]);
        if (a > wmax) wmax = a;
    }
    bool bounded = true;
    for (const auto& v : out.orbit)
        if (abs(v) > wmax) { bounded = false; break; }
    out.type = bounded ? IsometryType::Elliptic : IsometryType::Inconclusive;
    return out;
}

std::string format_vector(const LorentzVector& v) {
    std::ostringstream os;
    os << "lorentz n=" << v.rank() << " [";
    for (std::size_t i = 0; i < v.a.size(); ++i) {
        if (i) os << ' ';
        os << v.a[i].get_str();
    }
    os << ']';
    return os.str();
}

LorentzVector parse_vector(const std::string& line) {
    std::istringstream is(line);
    std::string word;
    if (!(is >> word) || word != "lorentz") throw ParseError("expected 'lorentz' header");
    if (!(is >> word) || word.rfind("n=", 0) != 0) throw ParseError("expected 'n=<rank>'");
    std::size_t rank = 0;
    try {
        rank = std::stoul(word.substr(2));
    } catch (...) {
        throw ParseError("bad rank '" + word + "'");
    }
    std::vector<Rat> coeffs;
    char bracket = 0;
    is >> bracket;
    if (bracket != '[') throw ParseError("expected '['");
    while (is >> word) {
        if (!word.empty() && word.back() == ']') {
            word.pop_back();
            if (!word.empty()) coeffs.push_back(parse_rat(word));
            break;
        }
        coeffs.push_back(parse_rat(word));
    }
    if (coeffs.size() != rank + 1)
        throw ParseError("expected " + std::to_string(rank + 1) + " coordinates");
    return LorentzVector(std::move(coeffs));
}

IMat parse_matrix_text(const std::string& text) {
    std::istringstream is(text);
    std::vector<Int> vals;
    std::string tok;
    while (is >> tok) {
        Int z;
        if (z.set_str(tok, 10) != 0) throw ParseError("bad integer '" + tok + "' in matrix");
        vals.push_back(std::move(z));
    }
    std::size_t n = 0;
    while (n * n < vals.size()) ++n;
    if (n * n != vals.size() || n == 0) throw ParseError("matrix text is not a square array");
    IMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = vals[i * n + j];
    return m;
}

std::string format_matrix(const IMat& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m(i, j).get_str();
        }
        os << '\n';
    }
    return os.str();
}

} // namespace cremona::lorentz
