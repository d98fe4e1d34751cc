#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "schedalg/semantics/activation.hpp"

namespace schedalg {

// Finite universe of activations used by every decision procedure here.
struct Universe {
  std::vector<std::string> vars;
  std::size_t max_len = 4;
  std::uint64_t bound_grid = 8;  // delay values 0..bound_grid plus the infinities in tighten

  Vocabulary vocabulary() const { return Vocabulary(vars); }
};

// sum_{n <= max_len} (n+1)^|vars|, saturating.
std::size_t universe_size(const Universe& u);

// Cap on enumerated activations; SCHED_ALGEBRA_BUDGET overrides the default of 2,000,000.
std::size_t enumeration_budget();

// All monotone activations over u.vars of length <= max_len, including the
// empty one, in length-lexicographic order. Throws ResourceError over budget.
std::vector<Activation> enumerate_activations(const Universe& u);
Schedule enumerate_universe(const Universe& u);

// "Universe vars=A,B len=3", used to label bounded-universe verdicts.
std::string describe(const Universe& u);

}  // namespace schedalg
