#pragma once

#include <string>
#include <vector>

#include "schedalg/kernel/type.hpp"

namespace schedalg {

// Sorted names of every atom occurring in t, embedded interfaces included.
std::vector<std::string> atoms_of(const Type& t);

// Event-wise truth table of a Boolean type: rows[m] is the value on the event
// whose members are the atoms[i] with bit i of m set.
struct TruthTable {
  std::vector<std::string> atoms;
  std::vector<bool> rows;
};

// Throws ClassError unless beta is Boolean, ResourceError beyond 16 atoms.
TruthTable truth_table(const Type& beta);

// Minimal sum of products (Quine-McCluskey) as a (x)-sum of &-products of
// literals A and !A. Constant functions come out as true or false.
Type simplify_boolean(const Type& beta);

// Boolean summands b1..bn with zeta equivalent to b1 (+) ... (+) bn.
// Throws ClassError for impure input and UnsupportedType for shapes the
// rewriter does not cover (embedded interfaces, non-pure antecedents other
// than external choices).
std::vector<Type> normalize_pure(const Type& zeta);

}  // namespace schedalg
