#pragma once

#include <string>
#include <vector>

#include "schedalg/analyses/graph.hpp"
#include "schedalg/kernel/type.hpp"
#include "schedalg/tropical/matrix.hpp"

namespace schedalg {

// phi_N = conjunction of X -> w : O Y over the edges.
Type build_shortest_type(const WeightedGraph& g);

// (N)_XY = least weight of an edge X -> Y, +inf without one. Min-plus.
TropicalMatrix adjacency(const WeightedGraph& g);

// Least d with phi_N <= src -> d : O dst, read off the closure N*.
// Throws std::invalid_argument for unknown nodes.
ExtNat shortest_path(const WeightedGraph& g, const std::string& src, const std::string& dst);

// Transfer matrix of the sub-network formed by the edges leaving `inputs`:
// entry (Y, X) is the shortest distance from X to Y inside it, so blocks
// chain by min-plus multiplication, later block on the left.
TropicalMatrix transfer_block(const WeightedGraph& g, const std::vector<std::string>& inputs,
                              const std::vector<std::string>& outputs);

// Quotient by a node partition. Each class is named by its member that comes
// first in g.nodes; parallel edges keep the least weight and self-loops go.
// Throws std::invalid_argument unless `classes` partitions a subset of the
// nodes (unlisted nodes stay singletons).
WeightedGraph merge_controls(const WeightedGraph& g, const std::vector<std::vector<std::string>>& classes);

// "C=B,U=V=W" into classes.
std::vector<std::vector<std::string>> parse_merge_spec(const std::string& spec);

}  // namespace schedalg
