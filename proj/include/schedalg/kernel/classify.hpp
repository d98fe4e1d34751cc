#pragma once

#include <cstddef>
#include <vector>

#include "schedalg/kernel/type.hpp"

namespace schedalg {

// boolean < pure < elementary < general
enum class TypeClass { Boolean, Pure, Elementary, General };

// Implication antecedents must be O-free for any class below general, so that
// every non-general type has a finitely representable bound space.
TypeClass classify(const Type& t);
bool is_boolean(const Type& t);
bool is_pure(const Type& t);
bool is_elementary(const Type& t);
const char* to_string(TypeClass c);

struct BoundShape {
  enum class Kind {
    Singleton,  // pure
    Matrix,     // elementary: rows x cols delay slots
    Finite,     // general but enumerable (e.g. a top-level choice)
    Infinite,   // general with unbounded delay slots outside the matrix layout
  };
  Kind kind = Kind::Singleton;
  std::size_t rows = 0;
  std::size_t cols = 0;
  // For a top-level implication psi -> theta these are the elements of the
  // antecedent bound space, one per column. Empty for column vectors.
  std::vector<Bound> column_keys;
};

BoundShape bound_space_shape(const Type& t);

// Row-major matrix entries of a bound of an elementary type. Rows follow the
// delay slots of the consequent left to right, columns the antecedent bounds.
std::vector<ExtNat> encode_bound(const Bound& b, const Type& t);
Bound decode_bound(const std::vector<ExtNat>& entries, const Type& t);

}  // namespace schedalg
