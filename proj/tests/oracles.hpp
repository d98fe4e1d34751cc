#pragma once

// Independent reference answers for the graph analyses.

#include <functional>
#include <random>
#include <string>

#include "schedalg/analyses/cpath.hpp"
#include "schedalg/analyses/graph.hpp"

namespace schedalg::oracles {

inline WeightedGraph random_graph(std::mt19937& rng, std::size_t max_nodes, std::uint64_t max_w, bool dag) {
  std::uniform_int_distribution<std::size_t> nn(2, max_nodes);
  std::uniform_int_distribution<std::uint64_t> w(0, max_w);
  WeightedGraph g;
  const std::size_t n = nn(rng);
  for (std::size_t i = 0; i < n; ++i) g.nodes.push_back(std::string(1, static_cast<char>('A' + i)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && (!dag || i < j) && rng() % 2 == 0) g.edges.push_back({g.nodes[i], g.nodes[j], w(rng)});
  g.source = g.nodes.front();
  g.sink = g.nodes.back();
  return g;
}

// Max-flow min-cut: the least capacity over every source/sink cut.
inline ExtNat min_cut(const WeightedGraph& g) {
  const std::size_t n = g.nodes.size(), s = g.index(*g.source), t = g.index(*g.sink);
  ExtNat best = ExtNat::pos_inf();
  for (std::uint32_t side = 0; side < (1u << n); ++side) {
    if (!((side >> s) & 1) || ((side >> t) & 1)) continue;
    ExtNat cut(0);
    for (const auto& e : g.edges)
      if (((side >> g.index(e.src)) & 1) && !((side >> g.index(e.dst)) & 1)) cut = cut + e.w;
    best = min(best, cut);
  }
  return best;
}

inline ExtNat dijkstra(const WeightedGraph& g, const std::string& src, const std::string& dst) {
  const std::size_t n = g.nodes.size();
  std::vector<ExtNat> dist(n, ExtNat::pos_inf());
  std::vector<bool> done(n, false);
  dist[g.index(src)] = 0;
  for (std::size_t round = 0; round < n; ++round) {
    std::size_t u = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && (u == n || dist[i] < dist[u])) u = i;
    if (u == n || dist[u] == ExtNat::pos_inf()) break;
    done[u] = true;
    for (const auto& e : g.edges)
      if (g.index(e.src) == u) dist[g.index(e.dst)] = min(dist[g.index(e.dst)], dist[u] + e.w);
  }
  return dist[g.index(dst)];
}

// Longest path into the final node by enumerating every path.
inline ExtNat longest_by_paths(const WeightedGraph& g) {
  const std::string f = final_node(g);
  ExtNat best(0);
  std::function<void(const std::string&, ExtNat)> go = [&](const std::string& x, ExtNat d) {
    if (x == f) best = max(best, d);
    for (const auto& e : g.edges)
      if (e.src == x) go(e.dst, d + e.w);
  };
  for (const auto& x : g.nodes) go(x, 0);
  return best;
}

}  // namespace schedalg::oracles
