#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schedalg/algebra/io_interface.hpp"
#include "schedalg/analyses/ckag.hpp"

namespace schedalg {

// The two sides of a pause: entered through its instantaneous in-edges it
// leaves by an instantaneous exit or stays (in.s); resumed (out.s) it leaves
// by its non-instantaneous edges.
struct PauseInterfaces {
  IOInterface enter;
  IOInterface resume;
};
PauseInterfaces pause_interfaces(const CkagModule& m, const std::string& id);

// Interface of one node with guards ignored. Pauses give their enter side,
// fork and join nodes their matrices inside the enclosing fork/join section.
IOInterface node_interface(const CkagModule& m, const std::string& id);

struct RegionOptions {
  // Internal labels made accessible as further inputs, e.g. jump targets.
  std::vector<std::string> extra_inputs;
  // Evaluate per valuation of the signals tested in the region. Assumes
  // those signals are stable within the instant.
  bool use_guards = true;
};

struct RegionResult {
  // Inputs: entry, extra inputs, out.s per state; outputs: exit, in.s.
  IOInterface io;
  // One column per (input & valuation) for every input that can reach a
  // guard test.
  IOInterface refined;
  // The same with columns merged back where every valuation agrees.
  IOInterface split;
  std::vector<std::string> signals;
  std::vector<ProofObligation> obligations;
};

// Sequential composition over the nodes of a thread ("" for the top level).
RegionResult region_wcrt(const CkagModule& m, const std::string& thread, const RegionOptions& opts = {});

struct WcrtStep {
  std::string name;
  IOInterface io;
};

struct WcrtReport {
  std::vector<WcrtStep> steps;  // in computation order
  IOInterface result;
  std::vector<std::string> notes;
  const IOInterface* find(const std::string& name) const;
};

// Module interface over {entry, out.M} x {exit, in.M}: thread interfaces with
// states bundled, instrumented, combined by Kronecker product, projected to
// the surface and depth inputs and wrapped in fork and join.
WcrtReport wcrt_analyze(const CkagModule& m);
IOInterface wcrt_compose(const CkagModule& m);

// Longest instantaneous paths by depth-first enumeration, with a signal
// assignment kept consistent along each path. Modules without fork/join.
// Same control layout as region_wcrt(m, "").io.
IOInterface wcrt_brute_force(const CkagModule& m);

// Random sequential module: forward instantaneous edges, resumption edges
// from pauses anywhere, guarded present nodes.
CkagModule random_sequential_module(std::uint32_t seed, std::size_t nodes);

// out.s1 -> O in.s2 (within an instant) and !in.s1 (+) out.s2 (across the tick).
struct StepTypes {
  Type instantaneous_step;
  Type tick_step;
};
StepTypes sequential_step_types(const std::string& s1, const std::string& s2);

}  // namespace schedalg
