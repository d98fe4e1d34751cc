#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "schedalg/kernel/type.hpp"

namespace schedalg {

// ASCII syntax. Operators by decreasing binding power:
//   !  O          negation, delay
//   &  (x)        conjunction, tensor
//   |  (+)        external choice, internal choice
//   ->            implication
// All binary operators associate to the right. Embedded interfaces are
// written <bound : phi>. Note that "(x)" always lexes as the tensor, so a
// variable called x cannot be parenthesised on its own.
Type parse_type(std::string_view text);

// "<bound> : <phi>". The bound is elaborated against phi (see parse_bound).
Interface parse_interface(std::string_view text);

// Bound text elaborated against a type:
//   0                    the unique bound of a pure type
//   d                    (d, 0) for O zeta, or a 1x1 matrix
//   (b, b)               pairs, and (d, b) for O phi
//   inl b | inr b        choices
//   {k => v, ...}        tables for ->
//   [r11, r12; r21, r22] row-major matrix of an elementary type
Bound parse_bound(std::string_view text, const Type& ty);

// Row-major "[a, b; c, d]". A single row may omit nothing; "[]" is 0x0.
std::vector<std::vector<ExtNat>> parse_matrix_rows(std::string_view text);

std::string to_string(const Type& t);
std::string to_string(const Bound& b);
std::string to_string(const Interface& i);

}  // namespace schedalg
