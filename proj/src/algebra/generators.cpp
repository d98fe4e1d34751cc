#include "schedalg/algebra/generators.hpp"

#include <stdexcept>

namespace schedalg {

TypeGenerator::TypeGenerator(std::uint32_t seed, std::vector<std::string> atoms)
    : rng_(seed), atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw std::invalid_argument("type generator needs at least one atom");
}

std::size_t TypeGenerator::below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

const std::string& TypeGenerator::atom_name() { return atoms_[below(atoms_.size())]; }

Type TypeGenerator::boolean(int depth) {
  if (depth <= 0 || below(4) == 0) {
    switch (below(8)) {
      case 0: return Type::truth();
      case 1: return Type::falsity();
      default: return Type::atom(atom_name());
    }
  }
  switch (below(5)) {
    case 0: return Type::negation(boolean(depth - 1));
    case 1: return Type::conj(boolean(depth - 1), boolean(depth - 1));
    case 2: return Type::otimes(boolean(depth - 1), boolean(depth - 1));
    case 3: return Type::implies(boolean(depth - 1), boolean(depth - 1));
    default: return Type::negation(Type::atom(atom_name()));
  }
}

Type TypeGenerator::antecedent(int depth) {
  if (depth > 0 && below(4) == 0) return Type::disj(pure(depth - 1), pure(depth - 1));
  return pure(depth);
}

Type TypeGenerator::pure(int depth) {
  if (depth <= 0 || below(3) == 0) return boolean(depth <= 0 ? 0 : 1);
  switch (below(6)) {
    case 0: return Type::conj(pure(depth - 1), pure(depth - 1));
    case 1:
    case 2: return Type::oplus(pure(depth - 1), pure(depth - 1));
    case 3: return Type::otimes(pure(depth - 1), pure(depth - 1));
    case 4: return Type::implies(antecedent(depth - 1), pure(depth - 1));
    default: return Type::negation(antecedent(depth - 1));
  }
}

Type TypeGenerator::elementary(int depth) {
  if (depth <= 0 || below(3) == 0) return below(2) ? Type::delay(pure(depth - 1)) : pure(depth - 1);
  switch (below(5)) {
    case 0: return Type::conj(elementary(depth - 1), elementary(depth - 1));
    case 1: return Type::oplus(elementary(depth - 1), elementary(depth - 1));
    case 2: return Type::otimes(elementary(depth - 1), elementary(depth - 1));
    case 3: return Type::implies(antecedent(depth - 1), elementary(depth - 1));
    default: return Type::delay(pure(depth - 1));
  }
}

std::vector<ExtNat> law_grid() { return {ExtNat::neg_inf(), 0, 1, 2, ExtNat::pos_inf()}; }

}  // namespace schedalg
