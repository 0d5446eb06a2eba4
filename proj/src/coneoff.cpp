#include "cremona/coneoff.hpp"

#include <algorithm>
#include <sstream>

#include "cremona/errors.hpp"

namespace cremona::coneoff {

Real cone_distance(const Real& r, const Real& rp, const Real& d_y, const Real& r0) {
    Real zero(0L);
    if (r < zero || rp < zero || r > r0 || rp > r0)
        throw ParameterError("cone radius out of [0, r0]");
    if (r.is_zero()) return rp;  // apex
    if (rp.is_zero()) return r;
    Real theta = d_y / sinh(r0);
    Real p = pi();
    if (!(theta < p)) return r + rp; // antipodal: path through the apex
    Real c;
    mpfr_cos(c.get(), theta.get(), MPFR_RNDN);
    Real arg = cosh(r) * cosh(rp) - sinh(r) * sinh(rp) * c;
    if (arg < Real(1L)) arg = Real(1L); // guard rounding just below 1
    return acosh(arg);
}

namespace {

struct WeightMatrix {
    std::vector<std::vector<Real>> w;
    std::vector<std::vector<char>> fin;
};

WeightMatrix link_weights(const ConedSpace& s, const MetricGraph::Table& base) {
    const std::size_t n = s.graph.n, N = s.node_count();
    Real r0(s.r0);
    WeightMatrix m;
    m.w.assign(N, std::vector<Real>(N, Real(0L)));
    m.fin.assign(N, std::vector<char>(N, 0));
    for (std::size_t i = 0; i < N; ++i) { m.fin[i][i] = 1; }

    std::vector<std::vector<char>> member(s.cones.size(), std::vector<char>(n, 0));
    for (std::size_t c = 0; c < s.cones.size(); ++c)
        for (auto v : s.cones[c]) {
            if (v >= n) throw ParameterError("coned subset contains an unknown vertex");
            member[c][v] = 1;
        }

    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            bool common = false;
            Real best(0L);
            bool best_set = false;
            for (std::size_t c = 0; c < s.cones.size(); ++c) {
                if (!(member[c][u] && member[c][v])) continue;
                common = true;
                Real dy = base[u][v] ? Real(*base[u][v]) : Real(0L);
                Real chord = base[u][v] ? cone_distance(r0, r0, dy, r0) : r0 + r0;
                if (!best_set || chord < best) { best = chord; best_set = true; }
            }
            if (common) {
                m.w[u][v] = m.w[v][u] = best;
                m.fin[u][v] = m.fin[v][u] = 1;
            } else if (base[u][v]) {
                m.w[u][v] = m.w[v][u] = Real(*base[u][v]);
                m.fin[u][v] = m.fin[v][u] = 1;
            }
        }

    for (std::size_t c = 0; c < s.cones.size(); ++c) {
        std::size_t A = s.apex_node(c);
        for (auto v : s.cones[c]) {
            m.w[A][v] = m.w[v][A] = r0;
            m.fin[A][v] = m.fin[v][A] = 1;
        }
    }
    return m;
}

ConeOffMetric closure(WeightMatrix m) {
    const std::size_t N = m.w.size();
    for (std::size_t k = 0; k < N; ++k)
        for (std::size_t i = 0; i < N; ++i) {
            if (!m.fin[i][k]) continue;
            for (std::size_t j = 0; j < N; ++j) {
                if (!m.fin[k][j]) continue;
                Real via = m.w[i][k] + m.w[k][j];
                if (!m.fin[i][j] || via < m.w[i][j]) {
                    m.w[i][j] = via;
                    m.fin[i][j] = 1;
                }
            }
        }
    return {std::move(m.w), std::move(m.fin)};
}

} // namespace

ConeOffMetric coneoff_distances(const ConedSpace& s) {
    if (s.r0 <= 0) throw ParameterError("cone height must be positive");
    auto base = s.graph.distances();
    return closure(link_weights(s, base));
}

Bracket coneoff_distance(const ConedSpace& s, std::size_t a, std::size_t b) {
    if (a >= s.node_count() || b >= s.node_count())
        throw ParameterError("node index out of range");
    auto m = coneoff_distances(s);
    if (!m.connected[a][b]) throw DomainError("nodes lie in different components (infinite distance)");
    return {m.dist[a][b], m.dist[a][b]};
}

Real coneoff_distance_interior(const ConedSpace& s, std::size_t cone,
                               std::size_t base_vertex, const Rat& radius,
                               std::size_t node) {
    if (cone >= s.cones.size()) throw ParameterError("cone index out of range");
    bool in_cone = false;
    for (auto v : s.cones[cone]) in_cone |= (v == base_vertex);
    if (!in_cone) throw ParameterError("base vertex is not in the coned subset");
    Real r0(s.r0), r(radius);
    auto basetab = s.graph.distances();
    auto m = coneoff_distances(s);
    bool have = false;
    Real best(0L);
    auto update = [&](const Real& v) {
        if (!have || v < best) { best = v; have = true; }
    };
    // leave through a boundary vertex of this cone
    for (auto y : s.cones[cone]) {
        Real dy = basetab[base_vertex][y] ? Real(*basetab[base_vertex][y]) : Real(0L);
        Real leg = basetab[base_vertex][y] ? cone_distance(r, r0, dy, r0)
                                           : (r + r0); // disconnected inside Y: via apex
        if (m.connected[y][node]) update(leg + m.dist[y][node]);
    }
    // or through the apex
    std::size_t A = s.apex_node(cone);
    if (m.connected[A][node]) update(r + m.dist[A][node]);
    if (!have) throw DomainError("interior point cannot reach the node (infinite distance)");
    return best;
}

namespace {

std::optional<std::size_t> cone_image(const ConedSpace& s, const Permutation& g, std::size_t c) {
    std::vector<std::size_t> img;
    img.reserve(s.cones[c].size());
    for (auto v : s.cones[c]) img.push_back(g[v]);
    std::sort(img.begin(), img.end());
    for (std::size_t j = 0; j < s.cones.size(); ++j) {
        auto sorted = s.cones[j];
        std::sort(sorted.begin(), sorted.end());
        if (sorted == img) return j;
    }
    return std::nullopt;
}

Permutation compose_perm(const Permutation& a, const Permutation& b) {
    Permutation r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
}

Permutation invert_perm(const Permutation& a) {
    Permutation r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = i;
    return r;
}

bool is_identity(const Permutation& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != i) return false;
    return true;
}

} // namespace

RotatingFamilyReport rotating_family_check(const ConedSpace& s,
                                           const RotationFamily& family,
                                           const Real& delta) {
    RotatingFamilyReport rep;
    rep.checked_triples = 0;
    const std::size_t n = s.graph.n;
    auto base = s.graph.distances();

    auto add = [&](std::string axiom, std::string detail) {
        rep.violations.push_back({std::move(axiom), std::move(detail)});
    };

    // (0) each group element is an isometry of the graph permuting the cones
    for (std::size_t gi = 0; gi < family.group.size(); ++gi) {
        const auto& g = family.group[gi];
        if (g.size() != n) throw ParameterError("permutation size mismatch");
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v) {
                bool fin1 = base[u][v].has_value(), fin2 = base[g[u]][g[v]].has_value();
                if (fin1 != fin2 || (fin1 && *base[u][v] != *base[g[u]][g[v]]))
                    throw DomainError("group element " + std::to_string(gi) +
                                      " is not an isometry of the graph");
            }
        for (std::size_t c = 0; c < s.cones.size(); ++c)
            if (!cone_image(s, g, c))
                add("equivariance", "element " + std::to_string(gi) + " does not permute the coned family (cone " + std::to_string(c) + ")");
    }

    // (1) equivariance of the rotation subgroups: G_{gc} = g G_c g^{-1}
    for (std::size_t gi = 0; gi < family.group.size(); ++gi) {
        const auto& g = family.group[gi];
        auto ginv = invert_perm(g);
        for (std::size_t c = 0; c < s.cones.size(); ++c) {
            auto jc = cone_image(s, g, c);
            if (!jc) continue; // already reported
            std::vector<Permutation> conjugated;
            for (auto ri : family.rotation[c])
                conjugated.push_back(compose_perm(g, compose_perm(family.group[ri], ginv)));
            std::vector<Permutation> target;
            for (auto ri : family.rotation[*jc]) target.push_back(family.group[ri]);
            auto key = [](const Permutation& p) { return p; };
            std::sort(conjugated.begin(), conjugated.end());
            std::sort(target.begin(), target.end());
            (void)key;
            if (conjugated != target)
                add("equivariance",
                    "G_{g c} != g G_c g^{-1} for g=" + std::to_string(gi) +
                        ", c=" + std::to_string(c) + " -> " + std::to_string(*jc));
        }
    }

    // rotation subgroups must stabilize their own cone
    for (std::size_t c = 0; c < s.cones.size(); ++c)
        for (auto ri : family.rotation[c]) {
            auto img = cone_image(s, family.group[ri], c);
            if (!img || *img != c)
                add("equivariance", "rotation element " + std::to_string(ri) +
                                        " does not stabilize cone " + std::to_string(c));
        }

    // (2) geodesics between close-to-apex points related by a rotation pass
    // through the apex
    auto metric = coneoff_distances(s);
    const std::size_t N = s.node_count();
    Real lo = Real(20L) * delta, hi = Real(40L) * delta, near = Real(15L) * delta;
    Real tol = Real("1e-30");

    for (std::size_t c = 0; c < s.cones.size(); ++c) {
        std::size_t A = s.apex_node(c);
        // metric with the apex removed: recompute closure without node A
        ConedSpace cut = s;
        auto base2 = base;
        auto weights = link_weights(s, base2);
        for (std::size_t i = 0; i < N; ++i) {
            if (i == A) continue;
            weights.fin[i][A] = weights.fin[A][i] = 0;
        }
        auto metric_cut = closure(weights);
        (void)cut;

        for (auto ri : family.rotation[c]) {
            const auto& r = family.group[ri];
            if (is_identity(r)) continue;
            // extend r to the node set: apexes follow their cones
            auto node_image = [&](std::size_t x) -> std::size_t {
                if (x < n) return r[x];
                auto j = cone_image(s, r, x - n);
                return j ? s.apex_node(*j) : x;
            };
            for (std::size_t x = 0; x < N; ++x) {
                if (x == A || !metric.connected[x][A]) continue;
                if (metric.dist[x][A] < lo || metric.dist[x][A] > hi) continue;
                for (std::size_t y = 0; y < N; ++y) {
                    if (y == A || !metric.connected[y][A]) continue;
                    if (metric.dist[y][A] < lo || metric.dist[y][A] > hi) continue;
                    std::size_t rx = node_image(x);
                    if (!metric.connected[rx][y] || metric.dist[rx][y] > near) continue;
                    ++rep.checked_triples;
                    Real through = metric.dist[x][A] + metric.dist[A][y];
                    bool on_geodesic = abs(through - metric.dist[x][y]) < tol;
                    bool forced = !metric_cut.connected[x][y] ||
                                  metric_cut.dist[x][y] > metric.dist[x][y] + tol;
                    if (!(on_geodesic && forced)) {
                        std::ostringstream os;
                        os << "triple (x=" << x << ", y=" << y << ", g=" << ri
                           << ", apex=" << A << "): dist(x,y)=" << metric.dist[x][y].str(8)
                           << " through-apex=" << through.str(8);
                        add("geodesic", os.str());
                    }
                }
            }
        }
    }

    rep.ok = rep.violations.empty();
    return rep;
}

} // namespace cremona::coneoff
