#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "schedalg/kernel/type.hpp"

namespace schedalg {

// Deterministic operand generation for the law harness. Draws use the raw
// engine output so sequences are identical across standard libraries.
class TypeGenerator {
 public:
  TypeGenerator(std::uint32_t seed, std::vector<std::string> atoms);

  // true | false | A | !b | b & b | b (x) b | b -> b
  Type boolean(int depth);
  // Boolean types plus &, (+), (x), ->, ! over pure operands. Antecedents are
  // pure or external choices of pure types.
  Type pure(int depth);
  // Antecedent of an implication: a pure type or a choice of two.
  Type antecedent(int depth);
  // Elementary types with delays over pure controls.
  Type elementary(int depth);

  std::size_t below(std::size_t n);
  const std::string& atom_name();

 private:
  std::mt19937 rng_;
  std::vector<std::string> atoms_;
};

// {-inf, 0, 1, 2, +inf}
std::vector<ExtNat> law_grid();

}  // namespace schedalg
