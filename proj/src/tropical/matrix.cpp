#include "schedalg/tropical/matrix.hpp"

#include <stdexcept>

#include "schedalg/kernel/syntax.hpp"

namespace schedalg {

ExtNat sr_sum(Semiring s, ExtNat a, ExtNat b) { return s == Semiring::MinPlus ? min(a, b) : max(a, b); }

ExtNat sr_mul(Semiring s, ExtNat a, ExtNat b) { return s == Semiring::MinPlus ? add_upper(a, b) : a + b; }

ExtNat sr_zero(Semiring s) { return s == Semiring::MinPlus ? ExtNat::pos_inf() : ExtNat::neg_inf(); }

const char* to_string(Semiring s) { return s == Semiring::MinPlus ? "min-plus" : "max-plus"; }

TropicalMatrix::TropicalMatrix(std::size_t rows, std::size_t cols, Semiring s)
    : rows_(rows), cols_(cols), e_(rows * cols, sr_zero(s)), sr_(s) {}

TropicalMatrix::TropicalMatrix(std::size_t rows, std::size_t cols, std::vector<ExtNat> entries, Semiring s)
    : rows_(rows), cols_(cols), e_(std::move(entries)), sr_(s) {
  if (e_.size() != rows * cols) throw std::invalid_argument("matrix entry count does not match its dimensions");
}

TropicalMatrix TropicalMatrix::from_rows(const std::vector<std::vector<ExtNat>>& rows, Semiring s) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<ExtNat> e;
  e.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ragged matrix rows");
    e.insert(e.end(), row.begin(), row.end());
  }
  return TropicalMatrix(r, c, std::move(e), s);
}

TropicalMatrix TropicalMatrix::identity(std::size_t n, Semiring s) {
  TropicalMatrix m(n, n, s);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, sr_one(s));
  return m;
}

TropicalMatrix TropicalMatrix::parse(std::string_view text, Semiring s) { return from_rows(parse_matrix_rows(text), s); }

TropicalMatrix TropicalMatrix::transpose() const {
  TropicalMatrix t(cols_, rows_, sr_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
  return t;
}

TropicalMatrix TropicalMatrix::select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  TropicalMatrix m(rows.size(), cols.size(), sr_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (rows[i] >= rows_ || cols[j] >= cols_) throw std::out_of_range("matrix selection index out of range");
      m.set(i, j, at(rows[i], cols[j]));
    }
  return m;
}

namespace {

void same_semiring(const TropicalMatrix& a, const TropicalMatrix& b) {
  if (a.semiring() != b.semiring()) throw std::invalid_argument("semiring mismatch");
}

void same_dims(const TropicalMatrix& a, const TropicalMatrix& b) {
  same_semiring(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix dimension mismatch");
}

template <class F>
TropicalMatrix pointwise(const TropicalMatrix& a, const TropicalMatrix& b, F f) {
  same_dims(a, b);
  std::vector<ExtNat> e(a.entries().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = f(a.entries()[i], b.entries()[i]);
  return TropicalMatrix(a.rows(), a.cols(), std::move(e), a.semiring());
}

}  // namespace

TropicalMatrix mat_mul(const TropicalMatrix& a, const TropicalMatrix& b) {
  same_semiring(a, b);
  if (a.cols() != b.rows())
    throw std::invalid_argument("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  const Semiring s = a.semiring();
  TropicalMatrix m(a.rows(), b.cols(), s);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      ExtNat acc = sr_zero(s);
      for (std::size_t k = 0; k < a.cols(); ++k) acc = sr_sum(s, acc, sr_mul(s, a.at(i, k), b.at(k, j)));
      m.set(i, j, acc);
    }
  return m;
}

TropicalMatrix mat_meet(const TropicalMatrix& a, const TropicalMatrix& b) {
  return pointwise(a, b, [](ExtNat x, ExtNat y) { return min(x, y); });
}

TropicalMatrix mat_join(const TropicalMatrix& a, const TropicalMatrix& b) {
  return pointwise(a, b, [](ExtNat x, ExtNat y) { return max(x, y); });
}

TropicalMatrix kron(const TropicalMatrix& a, const TropicalMatrix& b) {
  same_semiring(a, b);
  const Semiring s = a.semiring();
  TropicalMatrix m(a.rows() * b.rows(), a.cols() * b.cols(), s);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          m.set(i * b.rows() + k, j * b.cols() + l, sr_mul(s, a.at(i, j), b.at(k, l)));
  return m;
}

TropicalMatrix closure(const TropicalMatrix& n) {
  if (n.rows() != n.cols()) throw std::invalid_argument("closure of a non-square matrix");
  const Semiring s = n.semiring();
  TropicalMatrix acc = TropicalMatrix::identity(n.rows(), s);
  auto sum = [s](const TropicalMatrix& x, const TropicalMatrix& y) {
    return s == Semiring::MinPlus ? mat_meet(x, y) : mat_join(x, y);
  };
  // Walks through an infinite edge may need up to 2n steps.
  for (std::size_t it = 0; it <= 2 * n.rows() + 1; ++it) {
    TropicalMatrix next = sum(acc, mat_mul(acc, n));
    if (next == acc) return acc;
    acc = std::move(next);
  }
  throw std::domain_error("closure does not converge: the max-plus matrix has a positive cycle");
}

std::string to_string(const TropicalMatrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out += "; ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ", ";
      out += to_string(m.at(r, c));
    }
  }
  return out + "]";
}

}  // namespace schedalg
