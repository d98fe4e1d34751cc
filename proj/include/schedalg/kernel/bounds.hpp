#pragma once

#include <cstddef>
#include <vector>

#include "schedalg/kernel/type.hpp"

namespace schedalg {

// No O outside embedded interfaces.
bool is_delay_free(const Type& t);

// Bound space has exactly one element ([1]).
bool has_singleton_bounds(const Type& t);

// Throws BoundError when b does not fit t, UnsupportedType for a table over an
// antecedent whose bound space is infinite.
void check_bound(const Bound& b, const Type& t);

// All elements of a finite bound space, in the canonical order used for
// matrix columns: inl elements before inr, pairs lexicographic, tables
// lexicographic with the first key most significant.
// Throws UnsupportedType if t is not delay-free.
std::vector<Bound> enumerate_bounds(const Type& t);

// Elements of the bound space where every delay slot ranges over `grid`.
// Exhaustive for delay-free types. Throws ResourceError beyond `limit` elements.
std::vector<Bound> enumerate_bounds_over(const Type& t, const std::vector<ExtNat>& grid,
                                         std::size_t limit = 1u << 20);

// The unique bound of a type with singleton bound space. Throws BoundError otherwise.
Bound canonical_bound(const Type& t);

}  // namespace schedalg
