#include "schedalg/analyses/flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace schedalg {

namespace {

const ExtNat kPos = ExtNat::pos_inf();

bool cut(ExtNat c) { return c.is_neg_inf() || c == ExtNat(0); }

Type cap_type(ExtNat c) { return delayed(c, Type::falsity()); }

void require_terminals(const WeightedGraph& g) {
  if (!g.source || !g.sink) throw std::invalid_argument("flow needs a source and a sink");
  g.validate();
}

// Live exits of a node in edge order.
std::vector<const Edge*> exits(const WeightedGraph& g, const std::string& x) {
  std::vector<const Edge*> out;
  for (const auto& e : g.edges)
    if (e.src == x && !cut(e.w)) out.push_back(&e);
  return out;
}

}  // namespace

Type build_flow_type(const WeightedGraph& g) {
  require_terminals(g);
  std::vector<Type> clauses;
  clauses.push_back(Type::implies(Type::truth(), Type::conj(Type::atom(*g.source), cap_type(kPos))));
  for (const auto& x : g.nodes) {
    if (x == *g.sink) continue;
    std::vector<Type> outs;
    for (const Edge* e : exits(g, x)) outs.push_back(Type::conj(Type::atom(e->dst), cap_type(e->w)));
    clauses.push_back(Type::implies(Type::atom(x), outs.empty() ? Type::falsity() : otimes_all(outs)));
  }
  clauses.push_back(Type::implies(Type::atom(*g.sink), Type::conj(Type::truth(), cap_type(kPos))));
  return conj_all(clauses);
}

ExtNat max_throughput(const WeightedGraph& g) {
  require_terminals(g);
  const std::size_t n = g.nodes.size(), s = g.index(*g.source), t = g.index(*g.sink);
  if (s == t) return kPos;

  // Uncapped edges get a capacity above any finite cut; a flow reaching it
  // means no finite cut exists.
  std::uint64_t finite = 0;
  for (const auto& e : g.edges)
    if (e.w.is_finite()) finite += e.w.value();
  const std::uint64_t big = finite + 1;

  std::vector<std::vector<std::uint64_t>> cap(n, std::vector<std::uint64_t>(n, 0));
  for (const auto& e : g.edges) {
    if (cut(e.w)) continue;
    const std::size_t a = g.index(e.src), b = g.index(e.dst);
    if (a == b) continue;
    cap[a][b] += e.w.is_pos_inf() ? big : e.w.value();
  }

  std::uint64_t flow = 0;
  std::vector<std::size_t> parent(n);
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  while (true) {
    std::fill(parent.begin(), parent.end(), kNone);
    parent[s] = s;
    std::deque<std::size_t> queue{s};
    while (!queue.empty() && parent[t] == kNone) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < n; ++v)
        if (parent[v] == kNone && cap[u][v] > 0) {
          parent[v] = u;
          queue.push_back(v);
        }
    }
    if (parent[t] == kNone) break;
    std::uint64_t push = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t v = t; v != s; v = parent[v]) push = std::min(push, cap[parent[v]][v]);
    for (std::size_t v = t; v != s; v = parent[v]) {
      cap[parent[v]][v] -= push;
      cap[v][parent[v]] += push;
    }
    flow += push;
    if (flow >= big) return kPos;
  }
  return ExtNat(flow);
}

namespace {

struct Unfolded {
  Type type;
  ExtNat bound;
};

Unfolded unfold(const WeightedGraph& g, std::vector<std::string>& path, ExtNat cap, std::size_t depth,
                std::vector<FlowPath>& leaves) {
  const std::string& x = path.back();
  const auto outs = exits(g, x);
  auto path_type = [&] {
    std::vector<Type> atoms;
    for (const auto& p : path) atoms.push_back(Type::atom(p));
    return conj_all(atoms);
  };
  if (path.size() >= depth || x == *g.sink || outs.empty()) {
    leaves.push_back({path, cap});
    return {Type::conj(path_type(), cap_type(cap)), cap};
  }
  std::vector<Type> parts;
  ExtNat sum = ExtNat::neg_inf();
  for (const Edge* e : outs) {
    path.push_back(e->dst);
    auto u = unfold(g, path, min(cap, e->w), depth, leaves);
    path.pop_back();
    parts.push_back(u.type);
    sum = delay_sum(sum, u.bound);
  }
  Type t = otimes_all(parts);
  if (cap < sum) return {Type::conj(t, cap_type(cap)), cap};
  return {t, sum};
}

}  // namespace

FlowExpansion flow_expansion(const WeightedGraph& g, std::size_t depth) {
  require_terminals(g);
  if (depth == 0) throw std::invalid_argument("expansion depth must be positive");
  FlowExpansion out;
  std::vector<std::string> path{*g.source};
  auto u = unfold(g, path, kPos, depth, out.paths);
  out.type = u.type;
  out.bound = u.bound;
  return out;
}

}  // namespace schedalg
