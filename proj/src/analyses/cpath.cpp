#include "schedalg/analyses/cpath.hpp"

#include <stdexcept>

namespace schedalg {

std::string edge_variable(const WeightedGraph& g, const Edge& e) {
  bool single = true;
  for (const auto& n : g.nodes) single = single && n.size() == 1;
  return single ? e.src + e.dst : e.src + "." + e.dst;
}

std::string final_node(const WeightedGraph& g) {
  g.validate();
  if (g.sink) return *g.sink;
  std::vector<std::string> ends;
  for (const auto& n : g.nodes) {
    bool has_out = false;
    for (const auto& e : g.edges) has_out = has_out || e.src == n;
    if (!has_out) ends.push_back(n);
  }
  if (ends.size() != 1) throw std::invalid_argument("task graph needs a sink or a unique final node");
  return ends.front();
}

Type build_task_type(const WeightedGraph& g) {
  const std::string fin = final_node(g);
  std::vector<Type> clauses;
  for (const auto& x : g.nodes) {
    std::vector<Type> ins, outs;
    for (const auto& e : g.edges) {
      if (e.dst == x) ins.push_back(Type::atom(edge_variable(g, e)));
      if (e.src == x) outs.push_back(delayed(e.w, Type::atom(edge_variable(g, e))));
    }
    if (x == fin) outs = {delayed(ExtNat(0), Type::atom(fin))};
    if (outs.empty()) continue;
    clauses.push_back(Type::implies(ins.empty() ? Type::truth() : conj_all(ins), conj_all(outs)));
  }
  return conj_all(clauses);
}

ExtNat critical_path(const WeightedGraph& g) {
  const std::string fin = final_node(g);
  const std::size_t n = g.nodes.size();
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& e : g.edges) ++indeg[g.index(e.dst)];
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i)
    if (indeg[i] == 0) order.push_back(i);
  for (std::size_t k = 0; k < order.size(); ++k)
    for (const auto& e : g.edges)
      if (g.index(e.src) == order[k] && --indeg[g.index(e.dst)] == 0) order.push_back(g.index(e.dst));
  if (order.size() != n) throw std::invalid_argument("task graph has a cycle");

  // Sources start at 0; a node is ready once all its inputs are.
  std::vector<ExtNat> start(n, ExtNat::neg_inf());
  for (auto i : order) {
    bool source = true;
    for (const auto& e : g.edges)
      if (g.index(e.dst) == i) {
        source = false;
        start[i] = max(start[i], start[g.index(e.src)] + e.w);
      }
    if (source) start[i] = ExtNat(0);
  }
  return start[g.index(fin)];
}

}  // namespace schedalg
