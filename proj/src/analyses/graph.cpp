#include "schedalg/analyses/graph.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace schedalg {

using nlohmann::json;

std::size_t WeightedGraph::index(std::string_view name) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i] == name) return i;
  throw std::invalid_argument("unknown node '" + std::string(name) + "'");
}

bool WeightedGraph::has_node(std::string_view name) const {
  for (const auto& n : nodes)
    if (n == name) return true;
  return false;
}

void WeightedGraph::validate() const {
  std::set<std::string> seen;
  for (const auto& n : nodes)
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate node '" + n + "'");
  for (const auto& e : edges) {
    index(e.src);
    index(e.dst);
  }
  if (source) index(*source);
  if (sink) index(*sink);
}

namespace {

ExtNat weight_of(const json& w) {
  if (w.is_number_unsigned()) return ExtNat(w.get<std::uint64_t>());
  if (w.is_number_integer()) {
    if (w.get<std::int64_t>() < 0) throw std::runtime_error("negative edge weight");
    return ExtNat(static_cast<std::uint64_t>(w.get<std::int64_t>()));
  }
  if (w.is_string())
    if (auto x = parse_extnat(w.get<std::string>())) return *x;
  throw std::runtime_error("edge weight must be a natural number or \"+inf\"/\"-inf\", got " + w.dump());
}

json weight_json(ExtNat w) {
  if (w.is_finite()) return w.value();
  return to_string(w);
}

}  // namespace

WeightedGraph parse_graph(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("graph: ") + e.what());
  }
  if (!j.is_object()) throw std::runtime_error("graph: expected one JSON object");
  WeightedGraph g;
  try {
    for (const auto& n : j.at("nodes")) g.nodes.push_back(n.get<std::string>());
    for (const auto& e : j.at("edges"))
      g.edges.push_back({e.at("src").get<std::string>(), e.at("dst").get<std::string>(), weight_of(e.at("w"))});
    if (j.contains("source")) g.source = j["source"].get<std::string>();
    if (j.contains("sink")) g.sink = j["sink"].get<std::string>();
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("graph: ") + e.what());
  }
  try {
    g.validate();
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("graph: ") + e.what());
  }
  return g;
}

WeightedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_graph(ss.str());
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::string to_json(const WeightedGraph& g) {
  json j;
  j["nodes"] = g.nodes;
  j["edges"] = json::array();
  for (const auto& e : g.edges) j["edges"].push_back({{"src", e.src}, {"dst", e.dst}, {"w", weight_json(e.w)}});
  if (g.source) j["source"] = *g.source;
  if (g.sink) j["sink"] = *g.sink;
  return j.dump(2);
}

}  // namespace schedalg
