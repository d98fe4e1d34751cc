#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schedalg/kernel/extnat.hpp"

namespace schedalg {

struct Edge {
  std::string src;
  std::string dst;
  ExtNat w;
};

// Weighted dependency network. Node order is significant: it fixes the
// rows and columns of every matrix built from the graph.
struct WeightedGraph {
  std::vector<std::string> nodes;
  std::vector<Edge> edges;
  std::optional<std::string> source;
  std::optional<std::string> sink;

  // Throws std::invalid_argument for unknown names.
  std::size_t index(std::string_view name) const;
  bool has_node(std::string_view name) const;
  // Endpoints known, no duplicate nodes, source/sink known if given.
  void validate() const;
};

// {"nodes": [...], "edges": [{"src": "A", "dst": "B", "w": 5}, ...],
//  "source": "A", "sink": "F"}. Weights are numbers or "+inf"/"-inf".
// Throws std::runtime_error on malformed input.
WeightedGraph parse_graph(std::string_view json_text);
WeightedGraph load_graph(const std::string& path);
std::string to_json(const WeightedGraph& g);

}  // namespace schedalg
