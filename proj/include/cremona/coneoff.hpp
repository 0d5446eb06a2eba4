#pragma once

// Hyperbolic cones over subsets of a finite metric graph, the cone-off chain
// metric, and the very-rotating-family axiom checker.

#include <optional>
#include <string>
#include <vector>

#include "cremona/metricgraph.hpp"

namespace cremona::coneoff {

// Distance in the hyperbolic cone of height r0 between points at radii r, rp
// whose base points are at distance d_y in Y:
// arcosh(cosh r cosh r' - sinh r sinh r' cos theta), theta = min(pi, d_y / sinh r0).
Real cone_distance(const Real& r, const Real& rp, const Real& d_y, const Real& r0);

struct ConedSpace {
    MetricGraph graph;
    std::vector<std::vector<std::size_t>> cones; // vertex subsets
    Rat r0;
    unsigned radial_levels = 64; // grid for interior-point queries

    std::size_t apex_node(std::size_t cone) const { return graph.n + cone; }
    std::size_t node_count() const { return graph.n + cones.size(); }
};

// Distances on the cone-off over the node set (graph vertices + one apex per
// cone). On a finite vertex model the chain infimum is attained on this node
// set: inside one cone the triangle inequality collapses multi-step chains,
// and cones meet the rest of the space only along their base vertex sets.
// The returned bracket is therefore tight (lower == upper).
struct ConeOffMetric {
    std::vector<std::vector<Real>> dist;  // node_count x node_count; +inf if disconnected
    std::vector<std::vector<char>> connected;
};
ConeOffMetric coneoff_distances(const ConedSpace& space);

struct Bracket { Real lower, upper; };
Bracket coneoff_distance(const ConedSpace& space, std::size_t a, std::size_t b);

// Distance from an interior cone point (cone, base vertex, radius) to a node.
Real coneoff_distance_interior(const ConedSpace& space, std::size_t cone,
                               std::size_t base_vertex, const Rat& radius,
                               std::size_t node);

// --- very rotating families ----------------------------------------------

// A group element is a permutation of the graph vertices; it must be an
// isometry of the graph and permute the coned subsets.
using Permutation = std::vector<std::size_t>;

struct RotationFamily {
    std::vector<Permutation> group;                 // includes the identity
    std::vector<std::vector<std::size_t>> rotation; // per cone: indices into `group`
};

struct Violation {
    std::string axiom;  // "isometry" | "equivariance" | "geodesic"
    std::string detail; // witness description
};

struct RotatingFamilyReport {
    bool ok;
    std::vector<Violation> violations;
    std::size_t checked_triples;
};

RotatingFamilyReport rotating_family_check(const ConedSpace& space,
                                           const RotationFamily& family,
                                           const Real& delta);

} // namespace cremona::coneoff
