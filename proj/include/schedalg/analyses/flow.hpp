#pragma once

#include <string>
#include <vector>

#include "schedalg/analyses/graph.hpp"
#include "schedalg/kernel/type.hpp"

namespace schedalg {

// phi_N: true -> (src & +inf : O false), one clause
//   X -> (x)_Y (Y & c_XY : O false)
// per node with exits (X -> false when every exit is cut), and
//   sink -> (true & +inf : O false).
// Edges of capacity 0 or -inf are cut and dropped. Throws
// std::invalid_argument without source and sink.
Type build_flow_type(const WeightedGraph& g);

// Max flow from source to sink by Edmonds-Karp. This decides the least d
// with phi_N <= d : O false. +inf when an uncapped path exists; parallel
// edges add up.
ExtNat max_throughput(const WeightedGraph& g);

// One packet class of the breadth-first unfolding of phi_N.
struct FlowPath {
  std::vector<std::string> nodes;
  ExtNat bound;  // least capacity along the path
};

// Unfolding of the clauses from the source up to paths of `depth` nodes,
// simplified with the O false laws: a conjunct e : O false is kept over a
// tensor of classes only while e is below their summed bounds.
struct FlowExpansion {
  std::vector<FlowPath> paths;
  Type type;
  ExtNat bound;  // upper bound on the throughput
};
FlowExpansion flow_expansion(const WeightedGraph& g, std::size_t depth);

}  // namespace schedalg
