#include "schedalg/analyses/spath.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace schedalg {

Type build_shortest_type(const WeightedGraph& g) {
  g.validate();
  std::vector<Type> clauses;
  for (const auto& e : g.edges) clauses.push_back(Type::implies(Type::atom(e.src), delayed(e.w, Type::atom(e.dst))));
  return conj_all(clauses);
}

TropicalMatrix adjacency(const WeightedGraph& g) {
  g.validate();
  TropicalMatrix n(g.nodes.size(), g.nodes.size(), Semiring::MinPlus);
  for (const auto& e : g.edges) {
    const std::size_t a = g.index(e.src), b = g.index(e.dst);
    n.set(a, b, min(n.at(a, b), e.w));
  }
  return n;
}

ExtNat shortest_path(const WeightedGraph& g, const std::string& src, const std::string& dst) {
  const std::size_t a = g.index(src), b = g.index(dst);
  return closure(adjacency(g)).at(a, b);
}

TropicalMatrix transfer_block(const WeightedGraph& g, const std::vector<std::string>& inputs,
                              const std::vector<std::string>& outputs) {
  WeightedGraph sub{g.nodes, {}, std::nullopt, std::nullopt};
  const std::set<std::string> from(inputs.begin(), inputs.end());
  for (const auto& e : g.edges)
    if (from.count(e.src)) sub.edges.push_back(e);
  const auto star = closure(adjacency(sub));
  TropicalMatrix m(outputs.size(), inputs.size(), Semiring::MinPlus);
  for (std::size_t r = 0; r < outputs.size(); ++r)
    for (std::size_t c = 0; c < inputs.size(); ++c) m.set(r, c, star.at(g.index(inputs[c]), g.index(outputs[r])));
  return m;
}

WeightedGraph merge_controls(const WeightedGraph& g, const std::vector<std::vector<std::string>>& classes) {
  g.validate();
  std::map<std::string, std::string> rep;
  for (const auto& cls : classes) {
    if (cls.empty()) throw std::invalid_argument("empty merge class");
    std::string first;
    std::size_t best = g.nodes.size();
    for (const auto& x : cls) {
      const std::size_t i = g.index(x);
      if (rep.count(x)) throw std::invalid_argument("node '" + x + "' appears in two merge classes");
      rep[x] = "";
      if (i < best) best = i, first = x;
    }
    for (const auto& x : cls) rep[x] = first;
  }
  auto name = [&](const std::string& x) { return rep.count(x) ? rep[x] : x; };

  WeightedGraph q;
  for (const auto& x : g.nodes)
    if (name(x) == x) q.nodes.push_back(x);
  std::map<std::pair<std::string, std::string>, ExtNat> best;
  std::vector<std::pair<std::string, std::string>> order;
  for (const auto& e : g.edges) {
    const auto key = std::pair{name(e.src), name(e.dst)};
    if (key.first == key.second) continue;
    auto [it, fresh] = best.emplace(key, e.w);
    if (fresh)
      order.push_back(key);
    else
      it->second = min(it->second, e.w);
  }
  for (const auto& k : order) q.edges.push_back({k.first, k.second, best[k]});
  if (g.source) q.source = name(*g.source);
  if (g.sink) q.sink = name(*g.sink);
  return q;
}

std::vector<std::vector<std::string>> parse_merge_spec(const std::string& spec) {
  std::vector<std::vector<std::string>> out;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const std::size_t comma = std::min(spec.find(',', pos), spec.size());
    const std::string item = spec.substr(pos, comma - pos);
    pos = comma + 1;
    if (item.empty()) {
      if (comma == spec.size()) break;
      throw std::invalid_argument("empty item in merge spec '" + spec + "'");
    }
    std::vector<std::string> cls;
    std::size_t p = 0;
    while (p <= item.size()) {
      const std::size_t eq = std::min(item.find('=', p), item.size());
      const std::string name = item.substr(p, eq - p);
      if (name.empty()) throw std::invalid_argument("bad merge item '" + item + "'");
      cls.push_back(name);
      p = eq + 1;
    }
    if (cls.size() < 2) throw std::invalid_argument("merge item '" + item + "' needs X=Y");
    out.push_back(cls);
  }
  return out;
}

}  // namespace schedalg
