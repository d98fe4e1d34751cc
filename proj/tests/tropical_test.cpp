#include <gtest/gtest.h>

#include <random>

#include "schedalg/tropical/matrix.hpp"

namespace schedalg {
namespace {

const ExtNat kNeg = ExtNat::neg_inf();
const ExtNat kPos = ExtNat::pos_inf();

TropicalMatrix minp(const char* text) { return TropicalMatrix::parse(text, Semiring::MinPlus); }
TropicalMatrix maxp(const char* text) { return TropicalMatrix::parse(text, Semiring::MaxPlus); }

TEST(Scalar, Conventions) {
  EXPECT_EQ(kNeg + ExtNat(5), kNeg);
  EXPECT_EQ(min(ExtNat(3), kPos), ExtNat(3));
  EXPECT_EQ(max(ExtNat(3), kNeg), ExtNat(3));
  // min does not distribute over +.
  const ExtNat e = 3, d = 2;
  EXPECT_EQ(min(e, d + d), ExtNat(3));
  EXPECT_EQ(min(e, d) + min(e, d), ExtNat(4));
}

TEST(Matrix, ProductsFromTheExamples) {
  EXPECT_EQ(mat_mul(minp("[1, 4]"), minp("[5; 3]")), minp("[6]"));
  EXPECT_EQ(mat_mul(minp("[4, 2, 0]"), minp("[6; 7; 11]")), minp("[9]"));
  const auto join = maxp("[1, -inf; -inf, 1]");
  const auto gh = maxp("[10, 7; 9, 6]");
  const auto fork = maxp("[3, -inf; -inf, 0]");
  EXPECT_EQ(mat_mul(mat_mul(join, gh), fork), maxp("[14, 8; 13, 7]"));
  EXPECT_THROW(mat_mul(minp("[1, 2]"), minp("[1, 2]")), std::invalid_argument);
  EXPECT_THROW(mat_mul(minp("[1]"), maxp("[1]")), std::invalid_argument);
}

TEST(Matrix, MeetJoin) {
  const auto m = minp("[1, +inf; -inf, 4]");
  EXPECT_EQ(mat_meet(m, TropicalMatrix(2, 2, Semiring::MinPlus)), m);
  EXPECT_EQ(mat_meet(minp("[5]"), minp("[3]")), minp("[3]"));
  EXPECT_EQ(mat_join(minp("[5]"), minp("[3]")), minp("[5]"));
  EXPECT_THROW(mat_join(minp("[5]"), minp("[3, 4]")), std::invalid_argument);
}

TEST(Matrix, Kronecker) {
  const auto k = kron(maxp("[5, 0]"), maxp("[5, 7; 4, 6]"));
  EXPECT_EQ(k, maxp("[10, 12, 5, 7; 9, 11, 4, 6]"));
  EXPECT_EQ(k.rows(), 2u);
  EXPECT_EQ(k.cols(), 4u);
  const auto m = maxp("[1, 2; 3, -inf]");
  EXPECT_EQ(kron(maxp("[0]"), m), m);
}

TEST(Matrix, Closure) {
  const auto id = TropicalMatrix::identity(3, Semiring::MinPlus);
  EXPECT_EQ(closure(id), id);
  // Nodes A..F, the weighted dependency graph of the shortest-path example.
  TropicalMatrix n(6, 6, Semiring::MinPlus);
  const int A = 0, B = 1, C = 2, D = 3, E = 4, F = 5;
  for (auto [s, t, w] : std::vector<std::tuple<int, int, int>>{
           {A, B, 5}, {A, C, 3}, {B, E, 2}, {B, D, 1}, {C, D, 4}, {C, F, 8}, {D, E, 5}, {D, F, 4}, {E, F, 2}})
    n.set(s, t, std::uint64_t(w));
  const auto star = closure(n);
  EXPECT_EQ(star.at(A, F), ExtNat(9));
  EXPECT_EQ(star.at(A, D), ExtNat(6));
  EXPECT_EQ(star.at(A, E), ExtNat(7));
  EXPECT_EQ(star.at(A, A), ExtNat(0));
  EXPECT_EQ(star.at(F, A), kPos);
  EXPECT_THROW(closure(maxp("[1]")), std::domain_error);
  EXPECT_EQ(closure(maxp("[-inf, 2; -inf, -inf]")), maxp("[0, 2; -inf, 0]"));
}

TEST(Matrix, TextRoundTrip) {
  const auto m = minp("[1, +inf; -inf, 4]");
  EXPECT_EQ(to_string(m), "[1, +inf; -inf, 4]");
  EXPECT_EQ(minp(to_string(m).c_str()), m);
}

class Rand {
 public:
  explicit Rand(unsigned seed) : rng_(seed) {}
  ExtNat scalar() {
    switch (std::uniform_int_distribution<int>(0, 9)(rng_)) {
      case 0: return kNeg;
      case 1: return kPos;
      default: return ExtNat(std::uniform_int_distribution<std::uint64_t>(0, 20)(rng_));
    }
  }
  std::size_t dim() { return std::uniform_int_distribution<std::size_t>(1, 4)(rng_); }
  TropicalMatrix matrix(std::size_t r, std::size_t c, Semiring s) {
    TropicalMatrix m(r, c, s);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, scalar());
    return m;
  }
  Semiring semiring() { return std::uniform_int_distribution<int>(0, 1)(rng_) ? Semiring::MaxPlus : Semiring::MinPlus; }

 private:
  std::mt19937 rng_;
};

constexpr int kInstances = 2000;

TEST(Properties, SemiringAxioms) {
  Rand r(17);
  for (int n = 0; n < kInstances; ++n) {
    for (Semiring s : {Semiring::MinPlus, Semiring::MaxPlus}) {
      const ExtNat a = r.scalar(), b = r.scalar(), c = r.scalar();
      auto add = [s](ExtNat x, ExtNat y) { return sr_sum(s, x, y); };
      auto mul = [s](ExtNat x, ExtNat y) { return sr_mul(s, x, y); };
      ASSERT_EQ(add(add(a, b), c), add(a, add(b, c)));
      ASSERT_EQ(add(a, b), add(b, a));
      ASSERT_EQ(add(a, sr_zero(s)), a);
      ASSERT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
      ASSERT_EQ(mul(a, b), mul(b, a));
      ASSERT_EQ(mul(a, sr_one(s)), a);
      ASSERT_EQ(mul(a, sr_zero(s)), sr_zero(s));
      ASSERT_EQ(mul(a, add(b, c)), add(mul(a, b), mul(a, c)))
          << to_string(s) << " " << to_string(a) << " " << to_string(b) << " " << to_string(c);
    }
  }
}

TEST(Properties, ProductAssociativeWithUnit) {
  Rand r(23);
  for (int n = 0; n < kInstances; ++n) {
    const Semiring s = r.semiring();
    const std::size_t p = r.dim(), q = r.dim(), t = r.dim(), u = r.dim();
    const auto a = r.matrix(p, q, s), b = r.matrix(q, t, s), c = r.matrix(t, u, s);
    ASSERT_EQ(mat_mul(mat_mul(a, b), c), mat_mul(a, mat_mul(b, c)));
    ASSERT_EQ(mat_mul(TropicalMatrix::identity(p, s), a), a);
    ASSERT_EQ(mat_mul(a, TropicalMatrix::identity(q, s)), a);
  }
}

TEST(Properties, ClosureFixpoint) {
  Rand r(29);
  for (int n = 0; n < kInstances; ++n) {
    const std::size_t k = r.dim() + 1;
    const auto m = r.matrix(k, k, Semiring::MinPlus);
    const auto star = closure(m);
    ASSERT_EQ(star, mat_meet(TropicalMatrix::identity(k, Semiring::MinPlus), mat_mul(m, star))) << to_string(m);
    ASSERT_EQ(closure(star), star);
  }
}

TEST(Properties, KroneckerInterchange) {
  Rand r(31);
  for (int n = 0; n < kInstances; ++n) {
    const Semiring s = r.semiring();
    const std::size_t p = r.dim(), q = r.dim(), t = r.dim();
    const std::size_t p2 = r.dim(), q2 = r.dim(), t2 = r.dim();
    const auto a = r.matrix(p, q, s), c = r.matrix(q, t, s);
    const auto b = r.matrix(p2, q2, s), d = r.matrix(q2, t2, s);
    ASSERT_EQ(mat_mul(kron(a, b), kron(c, d)), kron(mat_mul(a, c), mat_mul(b, d)));
  }
}

}  // namespace
}  // namespace schedalg
