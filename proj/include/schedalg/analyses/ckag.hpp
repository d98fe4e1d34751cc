#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schedalg/kernel/extnat.hpp"

namespace schedalg {

enum class NodeKind { Transient, Emit, Present, Goto, Nothing, Wabort, Pause, Halt, Fork, Join };

const char* to_string(NodeKind k);

struct CkagNode {
  std::string id;
  NodeKind kind = NodeKind::Transient;
  std::optional<ExtNat> cost;  // defaults: 1, fork = threads + 1
};

// Edge taken only when `signal` is present (or absent).
struct Guard {
  std::string signal;
  bool present = true;
};

struct CkagEdge {
  std::string src;
  std::string dst;
  std::string label;
  bool noninst = false;  // leaves a pause on resumption
  std::optional<Guard> guard;
};

struct CkagThread {
  std::string name;
  std::vector<std::string> nodes;
};

// Concurrent KEP assembler graph. Pause, halt and join nodes are the states;
// state s contributes the controls out.s (resumed at instant start) and in.s
// (entered, ending the instant).
struct CkagModule {
  std::string name;
  std::vector<CkagNode> nodes;
  std::vector<CkagEdge> edges;
  std::string entry_label;
  std::string entry_node;
  std::string exit_node;
  std::string exit_label;
  std::vector<CkagThread> threads;

  const CkagNode& node(std::string_view id) const;  // throws std::invalid_argument
  // Thread owning a node, or nullptr for the top level.
  const CkagThread* thread_of(std::string_view id) const;
  const CkagThread& thread(std::string_view name) const;
  // Throws std::invalid_argument describing the first defect.
  void validate() const;
};

bool is_state(NodeKind k);

// Line format, '#' starts a comment:
//   module T
//   node v0 fork 3            id kind [cost]
//   edge v0 v1 G0             src dst label [noninst] [if S | unless S]
//   entry T0 v0               module entry label and node
//   exit v16 L20              module exit node and label
//   thread G v1 v2 ...        nodes of one forked thread
// Throws std::runtime_error with the line number.
CkagModule parse_ckag(std::string_view text);
CkagModule load_ckag(const std::string& path);
std::string to_text(const CkagModule& m);

}  // namespace schedalg
