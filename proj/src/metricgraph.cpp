#include "cremona/metricgraph.hpp"

#include <sstream>

#include "cremona/errors.hpp"

namespace cremona::coneoff {

void MetricGraph::add_edge(std::size_t u, std::size_t v, Rat w) {
    if (u >= n || v >= n) throw ParameterError("edge endpoint out of range");
    if (w <= 0) throw ParameterError("edge weights must be positive");
    if (u == v) throw ParameterError("loops are not allowed");
    edges.push_back({u, v, std::move(w)});
}

MetricGraph::Table MetricGraph::distances() const {
    Table d(n, std::vector<std::optional<Rat>>(n));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = Rat(0);
    for (const auto& e : edges) {
        if (!d[e.u][e.v] || *d[e.u][e.v] > e.w) {
            d[e.u][e.v] = e.w;
            d[e.v][e.u] = e.w;
        }
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            if (!d[i][k]) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (!d[k][j]) continue;
                Rat via = *d[i][k] + *d[k][j];
                if (!d[i][j] || *d[i][j] > via) d[i][j] = via;
            }
        }
    return d;
}

MetricGraph parse_edge_list(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::vector<std::tuple<std::size_t, std::size_t, Rat>> edges;
    std::size_t maxv = 0, lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string a, b, w;
        if (!(ls >> a)) continue; // blank line
        if (a[0] == '#') continue;
        if (!(ls >> b >> w)) throw ParseError("edge line needs 'u v w'", lineno);
        try {
            std::size_t u = std::stoul(a), v = std::stoul(b);
            edges.emplace_back(u, v, parse_rat(w));
            maxv = std::max({maxv, u, v});
        } catch (const ParseError&) {
            throw;
        } catch (...) {
            throw ParseError("bad edge line", lineno);
        }
    }
    MetricGraph g(edges.empty() ? 0 : maxv + 1);
    for (auto& [u, v, w] : edges) g.add_edge(u, v, std::move(w));
    return g;
}

std::string format_edge_list(const MetricGraph& g) {
    std::ostringstream os;
    for (const auto& e : g.edges) os << e.u << ' ' << e.v << ' ' << e.w.get_str() << '\n';
    return os.str();
}

namespace {

template <class T, class Get>
T four_point_defect(std::size_t n, const Get& get, const T& zero, const T& two,
                    std::size_t exhaustive_limit, std::size_t samples, unsigned long seed) {
    T best = zero;
    auto consider = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
        T s1 = get(a, b) + get(c, d);
        T s2 = get(a, c) + get(b, d);
        T s3 = get(a, d) + get(b, c);
        // defect = (largest - middle) / 2
        T hi = s1, mid = s2;
        if (mid > hi) std::swap(hi, mid);
        if (s3 > hi) { mid = hi; hi = s3; }
        else if (s3 > mid) mid = s3;
        T def = (hi - mid) / two;
        if (def > best) best = def;
    };
    if (n <= exhaustive_limit) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                for (std::size_t c = b + 1; c < n; ++c)
                    for (std::size_t d = c + 1; d < n; ++d) consider(a, b, c, d);
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (std::size_t s = 0; s < samples; ++s) {
            std::size_t a = pick(rng), b = pick(rng), c = pick(rng), d = pick(rng);
            if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
            consider(a, b, c, d);
        }
    }
    return best;
}

} // namespace

Rat four_point_delta(const MetricGraph::Table& dist, std::size_t exhaustive_limit,
                     std::size_t samples, unsigned long seed) {
    const std::size_t n = dist.size();
    for (const auto& row : dist)
        for (const auto& v : row)
            if (!v) throw DomainError("four-point defect needs a connected metric table");
    auto get = [&](std::size_t i, std::size_t j) -> Rat { return *dist[i][j]; };
    return four_point_defect<Rat>(n, get, Rat(0), Rat(2), exhaustive_limit, samples, seed);
}

Real four_point_delta_real(const std::vector<std::vector<Real>>& dist,
                           std::size_t exhaustive_limit, std::size_t samples,
                           unsigned long seed) {
    const std::size_t n = dist.size();
    auto get = [&](std::size_t i, std::size_t j) -> Real { return dist[i][j]; };
    return four_point_defect<Real>(n, get, Real(0L), Real(2L), exhaustive_limit, samples, seed);
}

} // namespace cremona::coneoff
