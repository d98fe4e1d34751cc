#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schedalg/kernel/extnat.hpp"
#include "schedalg/semantics/universe.hpp"

namespace schedalg {

struct LawOptions {
  Universe universe{{"A", "B", "C"}, 4, 2};
  std::vector<ExtNat> grid{ExtNat::neg_inf(), 0, 1, 2, ExtNat::pos_inf()};
  std::size_t instances = 24;  // generated operand tuples per schema
  std::uint32_t seed = 1;
};

struct LawReport {
  std::string id;
  std::string statement;
  bool expected = true;  // false for laws that must fail
  bool holds = true;     // no counterexample found
  std::size_t checked = 0;
  std::optional<std::string> counterexample;

  bool ok() const { return holds == expected; }
};

// Catalog order.
const std::vector<std::string>& law_ids();
// Ids matching a pattern; "name.*" selects a family, "all" everything.
// Throws std::invalid_argument if nothing matches.
std::vector<std::string> select_laws(const std::string& pattern);

// Throws std::invalid_argument for unknown ids.
LawReport law_check(const std::string& id, const LawOptions& opts = {});

}  // namespace schedalg
