#pragma once

#include <string>

#include "schedalg/analyses/graph.hpp"
#include "schedalg/kernel/type.hpp"

namespace schedalg {

// Control variable of the edge X -> Y: "XY" when every node name is a single
// character, "X.Y" otherwise.
std::string edge_variable(const WeightedGraph& g, const Edge& e);

// Edges become the controls. A node with in-edges e1..ek and out-edges
// carrying delays d_j to targets contributes (e1 & ... & ek) -> /\ d_j : O XY_j,
// with true as antecedent at sources; the final node F contributes
// (/\ in-edges) -> 0 : O F.
Type build_task_type(const WeightedGraph& g);

// The node whose completion is measured: the sink if given, else the unique
// node without successors. Throws std::invalid_argument otherwise.
std::string final_node(const WeightedGraph& g);

// Longest path into the final node: least d with phi_N <= d : O F. Max-plus
// over a topological order; throws std::invalid_argument on a cycle.
ExtNat critical_path(const WeightedGraph& g);

}  // namespace schedalg
