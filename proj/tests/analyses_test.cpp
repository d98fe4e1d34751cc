#include <gtest/gtest.h>

#include <random>

#include "schedalg/analyses/cpath.hpp"
#include "schedalg/analyses/flow.hpp"
#include "schedalg/analyses/graph.hpp"
#include "schedalg/analyses/spath.hpp"
#include "schedalg/kernel/syntax.hpp"
#include "oracles.hpp"

namespace schedalg {
namespace {

using namespace oracles;

const ExtNat kInf = ExtNat::pos_inf();

WeightedGraph network() { return load_graph(SCHEDALG_DATA_DIR "/network.graph"); }

TropicalMatrix minplus(const char* text) { return TropicalMatrix::parse(text, Semiring::MinPlus); }

TEST(Graph, JsonRoundTrip) {
  const auto g = network();
  EXPECT_EQ(g.nodes.size(), 6u);
  EXPECT_EQ(g.edges.size(), 9u);
  const auto h = parse_graph(to_json(g));
  EXPECT_EQ(h.nodes, g.nodes);
  ASSERT_EQ(h.edges.size(), g.edges.size());
  EXPECT_EQ(h.sink, g.sink);
  EXPECT_EQ(parse_graph(R"({"nodes":["A","B"],"edges":[{"src":"A","dst":"B","w":"+inf"}]})").edges[0].w, kInf);
  EXPECT_THROW(parse_graph("{"), std::runtime_error);
  EXPECT_THROW(parse_graph(R"({"nodes":["A"],"edges":[{"src":"A","dst":"Z","w":1}]})"), std::runtime_error);
}

TEST(Flow, NetworkThroughput) {
  const auto g = network();
  EXPECT_EQ(max_throughput(g), ExtNat(6));
  EXPECT_EQ(min_cut(g), ExtNat(6));
  EXPECT_NO_THROW(build_flow_type(g));
}

TEST(Flow, ExpansionAtDepthThree) {
  const auto x = flow_expansion(network(), 3);
  std::vector<std::pair<std::string, ExtNat>> got;
  for (const auto& p : x.paths) {
    std::string s;
    for (const auto& n : p.nodes) s += n;
    got.emplace_back(s, p.bound);
  }
  const std::vector<std::pair<std::string, ExtNat>> want{{"ABE", 2}, {"ABD", 1}, {"ACD", 3}, {"ACF", 3}};
  EXPECT_EQ(got, want);
  EXPECT_EQ(x.bound, ExtNat(6));
}

TEST(Flow, SmallCases) {
  WeightedGraph one{{"S", "T"}, {{"S", "T", 7}}, "S", "T"};
  EXPECT_EQ(max_throughput(one), ExtNat(7));
  WeightedGraph cut{{"S", "T"}, {{"S", "T", 0}}, "S", "T"};
  EXPECT_EQ(max_throughput(cut), ExtNat(0));
  WeightedGraph open{{"S", "M", "T"}, {{"S", "M", kInf}, {"M", "T", kInf}}, "S", "T"};
  EXPECT_EQ(max_throughput(open), kInf);
  WeightedGraph parallel{{"S", "T"}, {{"S", "T", 2}, {"S", "T", 3}}, "S", "T"};
  EXPECT_EQ(max_throughput(parallel), ExtNat(5));
  WeightedGraph nosink{{"S"}, {}, "S", std::nullopt};
  EXPECT_THROW(build_flow_type(nosink), std::invalid_argument);
}

TEST(Flow, AgreesWithMinCut) {
  std::mt19937 rng(5);
  for (int i = 0; i < 300; ++i) {
    const auto g = random_graph(rng, 6, 8, false);
    ASSERT_EQ(max_throughput(g), min_cut(g)) << to_json(g);
  }
}

TEST(ShortestPath, Network) {
  const auto g = network();
  EXPECT_EQ(shortest_path(g, "A", "F"), ExtNat(9));
  EXPECT_EQ(shortest_path(g, "B", "B"), ExtNat(0));
  EXPECT_EQ(shortest_path(g, "F", "A"), kInf);
  EXPECT_THROW(shortest_path(g, "A", "Z"), std::invalid_argument);
  EXPECT_NO_THROW(build_shortest_type(g));
}

TEST(ShortestPath, BlocksChain) {
  const auto g = network();
  const auto d1 = transfer_block(g, {"A"}, {"B", "C"});
  const auto d2 = transfer_block(g, {"B", "C"}, {"D", "E", "F"});
  const auto d3 = transfer_block(g, {"D", "E", "F"}, {"F"});
  EXPECT_EQ(d1, minplus("[5; 3]"));
  EXPECT_EQ(d2, minplus("[1, 4; 2, +inf; +inf, 8]"));
  EXPECT_EQ(d3, minplus("[4, 2, 0]"));
  EXPECT_EQ(mat_mul(d2, d1), minplus("[6; 7; 11]"));
  EXPECT_EQ(mat_mul(d3, mat_mul(d2, d1)), minplus("[9]"));
}

TEST(ShortestPath, Merge) {
  const auto g = network();
  const auto m = merge_controls(g, parse_merge_spec("C=B"));
  EXPECT_FALSE(m.has_node("C"));
  EXPECT_EQ(shortest_path(m, "A", "F"), ExtNat(7));
  EXPECT_EQ(parse_merge_spec("C=B,U=V=W").size(), 2u);
  EXPECT_THROW(merge_controls(g, {{"B", "C"}, {"C", "D"}}), std::invalid_argument);
}

TEST(ShortestPath, AgreesWithDijkstra) {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto g = random_graph(rng, 8, 9, false);
    for (const auto& x : g.nodes)
      for (const auto& y : g.nodes) ASSERT_EQ(shortest_path(g, x, y), dijkstra(g, x, y)) << x << y << to_json(g);
  }
}

TEST(ShortestPath, MergingOnlyShortens) {
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto g = random_graph(rng, 6, 9, false);
    if (g.nodes.size() < 4) continue;
    const auto m = merge_controls(g, {{g.nodes[1], g.nodes[2]}});
    auto rep = [&](const std::string& x) { return x == g.nodes[2] ? g.nodes[1] : x; };
    for (const auto& x : g.nodes)
      for (const auto& y : g.nodes)
        ASSERT_LE(shortest_path(m, rep(x), rep(y)), shortest_path(g, x, y));
  }
}

TEST(CriticalPath, Network) {
  const auto g = network();
  EXPECT_EQ(critical_path(g), ExtNat(14));
  EXPECT_EQ(longest_by_paths(g), ExtNat(14));
  EXPECT_EQ(edge_variable(g, g.edges[1]), "AC");
  EXPECT_NO_THROW(build_task_type(g));
}

TEST(CriticalPath, ChainAndCycle) {
  WeightedGraph chain{{"A", "B", "C"}, {{"A", "B", 3}, {"B", "C", 4}}, std::nullopt, std::nullopt};
  EXPECT_EQ(final_node(chain), "C");
  EXPECT_EQ(critical_path(chain), ExtNat(7));
  WeightedGraph loop{{"A", "B"}, {{"A", "B", 1}, {"B", "A", 1}}, std::nullopt, "B"};
  EXPECT_THROW(critical_path(loop), std::invalid_argument);
}

TEST(CriticalPath, AgreesWithPathEnumeration) {
  std::mt19937 rng(17);
  for (int i = 0; i < 200; ++i) {
    const auto g = random_graph(rng, 7, 9, true);
    ASSERT_EQ(critical_path(g), longest_by_paths(g)) << to_json(g);
  }
}

}  // namespace
}  // namespace schedalg
