#include "schedalg/analyses/ckag.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace schedalg {

namespace {

const std::map<std::string, NodeKind, std::less<>> kKinds{
    {"transient", NodeKind::Transient}, {"emit", NodeKind::Emit},       {"present", NodeKind::Present},
    {"goto", NodeKind::Goto},           {"nothing", NodeKind::Nothing}, {"wabort", NodeKind::Wabort},
    {"pause", NodeKind::Pause},         {"halt", NodeKind::Halt},       {"fork", NodeKind::Fork},
    {"join", NodeKind::Join}};

}  // namespace

const char* to_string(NodeKind k) {
  for (const auto& [name, kind] : kKinds)
    if (kind == k) return name.c_str();
  return "?";
}

bool is_state(NodeKind k) { return k == NodeKind::Pause || k == NodeKind::Halt || k == NodeKind::Join; }

const CkagNode& CkagModule::node(std::string_view id) const {
  for (const auto& n : nodes)
    if (n.id == id) return n;
  throw std::invalid_argument("unknown node '" + std::string(id) + "'");
}

const CkagThread* CkagModule::thread_of(std::string_view id) const {
  for (const auto& t : threads)
    for (const auto& n : t.nodes)
      if (n == id) return &t;
  return nullptr;
}

const CkagThread& CkagModule::thread(std::string_view name) const {
  for (const auto& t : threads)
    if (t.name == name) return t;
  throw std::invalid_argument("unknown thread '" + std::string(name) + "'");
}

void CkagModule::validate() const {
  auto fail = [](const std::string& s) { throw std::invalid_argument(s); };
  std::set<std::string> ids, labels{entry_label, exit_label};
  for (const auto& n : nodes)
    if (!ids.insert(n.id).second) fail("duplicate node '" + n.id + "'");
  if (entry_label.empty() || exit_label.empty()) fail("module needs an entry and an exit");
  if (entry_label == exit_label) fail("entry and exit labels coincide");
  node(entry_node);
  node(exit_node);
  for (const auto& e : edges) {
    const auto& s = node(e.src);
    const auto& d = node(e.dst);
    if (!labels.insert(e.label).second) fail("label '" + e.label + "' used twice");
    if (e.label.rfind("in.", 0) == 0 || e.label.rfind("out.", 0) == 0) fail("label '" + e.label + "' is reserved");
    if (e.noninst && s.kind != NodeKind::Pause) fail("non-instantaneous edge " + e.label + " must leave a pause");
    if (s.kind == NodeKind::Halt) fail("halt " + s.id + " has an exit");
    if (d.kind == NodeKind::Fork && thread_of(d.id) != thread_of(s.id)) fail("edge " + e.label + " enters a fork across threads");
  }
  std::set<std::string> owned;
  for (const auto& t : threads) {
    if (t.nodes.empty()) fail("thread " + t.name + " is empty");
    for (const auto& n : t.nodes) {
      node(n);
      if (!owned.insert(n).second) fail("node " + n + " belongs to two threads");
    }
  }
  // Every valuation of a node's guards must leave some way out.
  for (const auto& n : nodes) {
    if (n.kind == NodeKind::Halt) continue;
    // A pause leaves through its resumption edges.
    const bool pause = n.kind == NodeKind::Pause;
    std::vector<const CkagEdge*> outs;
    std::set<std::string> sigs;
    for (const auto& e : edges)
      if (e.src == n.id && e.noninst == pause) {
        outs.push_back(&e);
        if (e.guard) sigs.insert(e.guard->signal);
      }
    if (n.id == exit_node && !pause) continue;
    if (outs.empty()) fail(pause ? "pause " + n.id + " never resumes" : "node " + n.id + " has no exit");
    if (sigs.size() > 8) fail("node " + n.id + " tests too many signals");
    const std::vector<std::string> sv(sigs.begin(), sigs.end());
    for (std::uint32_t v = 0; v < (1u << sv.size()); ++v) {
      bool open = false;
      for (const auto* e : outs) {
        if (!e->guard) open = true;
        else
          for (std::size_t i = 0; i < sv.size(); ++i)
            if (sv[i] == e->guard->signal && (((v >> i) & 1) != 0) == e->guard->present) open = true;
      }
      if (!open) fail("node " + n.id + " can block under some signal valuation");
    }
  }
}

CkagModule parse_ckag(std::string_view text) {
  CkagModule m;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t no = 0;
  auto fail = [&](const std::string& why) { throw std::runtime_error("line " + std::to_string(no) + ": " + why); };
  while (std::getline(in, line)) {
    ++no;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<std::string> w;
    for (std::string t; ls >> t;) w.push_back(t);
    if (w.empty()) continue;
    const std::string& key = w[0];
    if (key == "module") {
      if (w.size() != 2) fail("expected: module NAME");
      m.name = w[1];
    } else if (key == "node") {
      if (w.size() < 3 || w.size() > 4) fail("expected: node ID KIND [COST]");
      auto k = kKinds.find(w[2]);
      if (k == kKinds.end()) fail("unknown node kind '" + w[2] + "'");
      CkagNode n{w[1], k->second, std::nullopt};
      if (w.size() == 4) {
        n.cost = parse_extnat(w[3]);
        if (!n.cost) fail("bad cost '" + w[3] + "'");
      }
      m.nodes.push_back(n);
    } else if (key == "edge") {
      if (w.size() < 4) fail("expected: edge SRC DST LABEL [noninst] [if S | unless S]");
      CkagEdge e{w[1], w[2], w[3], false, std::nullopt};
      for (std::size_t i = 4; i < w.size(); ++i) {
        if (w[i] == "noninst") {
          e.noninst = true;
        } else if ((w[i] == "if" || w[i] == "unless") && i + 1 < w.size()) {
          e.guard = Guard{w[i + 1], w[i] == "if"};
          ++i;
        } else {
          fail("unexpected '" + w[i] + "' in edge");
        }
      }
      m.edges.push_back(e);
    } else if (key == "entry") {
      if (w.size() != 3) fail("expected: entry LABEL NODE");
      m.entry_label = w[1];
      m.entry_node = w[2];
    } else if (key == "exit") {
      if (w.size() != 3) fail("expected: exit NODE LABEL");
      m.exit_node = w[1];
      m.exit_label = w[2];
    } else if (key == "thread") {
      if (w.size() < 3) fail("expected: thread NAME NODE...");
      m.threads.push_back({w[1], {w.begin() + 2, w.end()}});
    } else {
      fail("unknown record '" + key + "'");
    }
  }
  if (m.name.empty()) m.name = "M";
  try {
    m.validate();
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(e.what());
  }
  return m;
}

CkagModule load_ckag(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_ckag(ss.str());
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::string to_text(const CkagModule& m) {
  std::string out = "module " + m.name + "\n";
  for (const auto& n : m.nodes)
    out += "node " + n.id + " " + to_string(n.kind) + (n.cost ? " " + to_string(*n.cost) : "") + "\n";
  for (const auto& e : m.edges) {
    out += "edge " + e.src + " " + e.dst + " " + e.label + (e.noninst ? " noninst" : "");
    if (e.guard) out += (e.guard->present ? " if " : " unless ") + e.guard->signal;
    out += "\n";
  }
  out += "entry " + m.entry_label + " " + m.entry_node + "\n";
  out += "exit " + m.exit_node + " " + m.exit_label + "\n";
  for (const auto& t : m.threads) {
    out += "thread " + t.name;
    for (const auto& n : t.nodes) out += " " + n;
    out += "\n";
  }
  return out;
}

}  // namespace schedalg
