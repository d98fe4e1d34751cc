#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "schedalg/kernel/extnat.hpp"

namespace schedalg {

enum class Semiring { MinPlus, MaxPlus };

// Semiring sum (min or max) and product. The min-plus product lets +inf win
// the mixed case so that +inf is its annihilating zero; the max-plus product
// is the kernel addition, where -inf wins.
ExtNat sr_sum(Semiring s, ExtNat a, ExtNat b);
ExtNat sr_mul(Semiring s, ExtNat a, ExtNat b);
ExtNat sr_zero(Semiring s);  // +inf / -inf
inline ExtNat sr_one(Semiring) { return ExtNat(0); }
const char* to_string(Semiring s);

class TropicalMatrix {
 public:
  TropicalMatrix(std::size_t rows, std::size_t cols, Semiring s);  // filled with the zero
  TropicalMatrix(std::size_t rows, std::size_t cols, std::vector<ExtNat> entries, Semiring s);
  static TropicalMatrix from_rows(const std::vector<std::vector<ExtNat>>& rows, Semiring s);
  static TropicalMatrix identity(std::size_t n, Semiring s);
  // Parses the row-major literal "[a, b; c, d]".
  static TropicalMatrix parse(std::string_view text, Semiring s);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Semiring semiring() const { return sr_; }
  const std::vector<ExtNat>& entries() const { return e_; }

  ExtNat at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, ExtNat v) { e_[r * cols_ + c] = v; }

  TropicalMatrix transpose() const;
  TropicalMatrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  bool operator==(const TropicalMatrix& o) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<ExtNat> e_;
  Semiring sr_;
};

// All binary operations throw std::invalid_argument on dimension or semiring mismatch.
TropicalMatrix mat_mul(const TropicalMatrix& a, const TropicalMatrix& b);
TropicalMatrix mat_meet(const TropicalMatrix& a, const TropicalMatrix& b);
TropicalMatrix mat_join(const TropicalMatrix& a, const TropicalMatrix& b);
// Block (i,j) is a(i,j) times b, where times is the semiring product.
TropicalMatrix kron(const TropicalMatrix& a, const TropicalMatrix& b);

// Kleene star N* = Id + N + N^2 + ... in the matrix's own semiring, computed
// by iterating acc := acc + acc N. For min-plus this always converges. For
// max-plus it converges exactly when N has no cycle of positive weight;
// std::domain_error is thrown otherwise.
TropicalMatrix closure(const TropicalMatrix& n);

// "[a, b; c, d]"
std::string to_string(const TropicalMatrix& m);

}  // namespace schedalg
