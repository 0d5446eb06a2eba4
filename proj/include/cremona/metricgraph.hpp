#pragma once

// Finite weighted graphs with exact rational edge weights and their
// shortest-path closure, plus the four-point hyperbolicity defect.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cremona/rational.hpp"
#include "cremona/real.hpp"

namespace cremona::coneoff {

struct MetricGraph {
    std::size_t n = 0;
    struct Edge { std::size_t u, v; Rat w; };
    std::vector<Edge> edges;

    // all-pairs shortest paths; empty optional = disconnected pair
    using Table = std::vector<std::vector<std::optional<Rat>>>;

    MetricGraph() = default;
    explicit MetricGraph(std::size_t vertices) : n(vertices) {}
    void add_edge(std::size_t u, std::size_t v, Rat w);
    Table distances() const;
};

MetricGraph parse_edge_list(const std::string& text); // lines "u v w"
std::string format_edge_list(const MetricGraph& g);

// Maximum Gromov four-point defect over vertex quadruples; exact on the
// rational table. Exhaustive up to `exhaustive_limit` vertices, sampled above.
Rat four_point_delta(const MetricGraph::Table& dist,
                     std::size_t exhaustive_limit = 60,
                     std::size_t samples = 200000,
                     unsigned long seed = 1);

// Same defect on a real-valued metric table (cone-off distances).
Real four_point_delta_real(const std::vector<std::vector<Real>>& dist,
                           std::size_t exhaustive_limit = 60,
                           std::size_t samples = 200000,
                           unsigned long seed = 1);

} // namespace cremona::coneoff
