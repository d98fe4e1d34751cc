#include <gtest/gtest.h>

#include <random>

#include "schedalg/kernel/bounds.hpp"
#include "schedalg/kernel/classify.hpp"
#include "schedalg/kernel/errors.hpp"
#include "schedalg/kernel/syntax.hpp"
#include "test_support.hpp"

namespace schedalg {
namespace {

const ExtNat kNeg = ExtNat::neg_inf();
const ExtNat kPos = ExtNat::pos_inf();

TEST(ExtNat, OrderAndArithmetic) {
  EXPECT_LT(kNeg, ExtNat(0));
  EXPECT_LT(ExtNat(7), kPos);
  EXPECT_EQ(kNeg + ExtNat(5), kNeg);
  EXPECT_EQ(kNeg + kPos, kNeg);
  EXPECT_EQ(kPos + ExtNat(5), kPos);
  EXPECT_EQ(ExtNat(2) + ExtNat(3), ExtNat(5));
  EXPECT_EQ(add_upper(kNeg, kPos), kPos);
  EXPECT_EQ(delay_sum(kNeg, ExtNat(4)), ExtNat(4));
  EXPECT_EQ(delay_sum(ExtNat(4), kNeg), ExtNat(4));
  EXPECT_EQ(min(ExtNat(3), kPos), ExtNat(3));
  EXPECT_EQ(max(ExtNat(3), kNeg), ExtNat(3));
}

TEST(ExtNat, TextRoundTrip) {
  for (ExtNat x : {kNeg, ExtNat(0), ExtNat(42), kPos}) EXPECT_EQ(parse_extnat(to_string(x)), x);
  EXPECT_FALSE(parse_extnat("4x").has_value());
  EXPECT_FALSE(parse_extnat("").has_value());
}

TEST(Parser, Precedence) {
  const Type a = Type::atom("A"), b = Type::atom("B"), c = Type::atom("C");
  EXPECT_EQ(parse_type("A & B -> O C"), Type::implies(Type::conj(a, b), Type::delay(c)));
  EXPECT_EQ(parse_type("!A"), Type::negation(a));
  EXPECT_EQ(parse_type("A (+) !A"), Type::oplus(a, Type::negation(a)));
  EXPECT_EQ(parse_type("A | B & C"), Type::disj(a, Type::conj(b, c)));
  EXPECT_EQ(parse_type("A (x) B (+) C"), Type::oplus(Type::otimes(a, b), c));
  EXPECT_EQ(parse_type("!O A"), Type::negation(Type::delay(a)));
}

TEST(Parser, RightAssociative) {
  const Type a = Type::atom("A"), b = Type::atom("B"), c = Type::atom("C");
  EXPECT_EQ(parse_type("A -> B -> C"), Type::implies(a, Type::implies(b, c)));
  EXPECT_EQ(parse_type("A & B (x) C"), Type::conj(a, Type::otimes(b, c)));
  EXPECT_EQ(parse_type("A | B (+) C"), Type::disj(a, Type::oplus(b, c)));
  EXPECT_EQ(parse_type("(A | B) (+) C"), Type::oplus(Type::disj(a, b), c));
}

TEST(Parser, StateNamesAndEmbeds) {
  const Type t = parse_type("out.v9 -> O in.v16");
  EXPECT_EQ(t.lhs().name(), "out.v9");
  const Type e = parse_type("<5 : O A> & B");
  ASSERT_EQ(e.lhs().op(), Op::Embed);
  EXPECT_EQ(e.lhs().embedded().bound().delay_value(), ExtNat(5));
  EXPECT_EQ(classify(e), TypeClass::Pure);
}

TEST(Parser, Errors) {
  EXPECT_THROW(parse_type("A &"), ParseError);
  EXPECT_THROW(parse_type("A B"), ParseError);
  EXPECT_THROW(parse_type("(A"), ParseError);
  EXPECT_THROW(parse_type("A $ B"), ParseError);
  try {
    parse_type("A & & B");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_interface("inl 0 : A & B"), ParseError);
  EXPECT_THROW(parse_interface("[1, 2] : A -> O B"), ParseError);
}

TEST(Bounds, Elaboration) {
  const Interface i = parse_interface("[1, 2] : A | B -> O C");
  EXPECT_EQ(encode_bound(i.bound(), i.type()), (std::vector<ExtNat>{1, 2}));
  const Interface j = parse_interface("[1; 2] : A -> O B (+) O C");
  EXPECT_EQ(encode_bound(j.bound(), j.type()), (std::vector<ExtNat>{1, 2}));
  const Interface k = parse_interface("(3, 0) : O A");
  EXPECT_EQ(k.bound(), Bound::delay(3, Bound::unit()));
  EXPECT_EQ(parse_interface("3 : O A").bound(), k.bound());
  const Interface t = parse_interface("{inl 0 => (1, 0), inr 0 => (-inf, 0)} : A | B -> O C");
  EXPECT_EQ(encode_bound(t.bound(), t.type()), (std::vector<ExtNat>{1, kNeg}));
  EXPECT_EQ(parse_interface("0 : A -> B").bound().kind(), Bound::Kind::Table);
}

TEST(Bounds, ShapeErrors) {
  EXPECT_THROW(Interface(Bound::pair(Bound::unit(), Bound::unit()), parse_type("A")), BoundError);
  EXPECT_THROW(Interface(Bound::inl(Bound::unit()), parse_type("A & B")), BoundError);
  EXPECT_THROW(canonical_bound(parse_type("O A -> B")), UnsupportedType);
  EXPECT_THROW(enumerate_bounds(parse_type("O A")), UnsupportedType);
  // A table must list every antecedent bound exactly once.
  const Type t = parse_type("A | B -> O C");
  EXPECT_THROW(Interface(Bound::table({{Bound::inl(Bound::unit()), Bound::delay(1, Bound::unit())}}), t), BoundError);
}

TEST(Bounds, Enumeration) {
  const Type t = parse_type("(A | B) & (C | true)");
  const auto bs = enumerate_bounds(t);
  ASSERT_EQ(bs.size(), 4u);
  EXPECT_EQ(bs[0], Bound::pair(Bound::inl(Bound::unit()), Bound::inl(Bound::unit())));
  EXPECT_EQ(bs[3], Bound::pair(Bound::inr(Bound::unit()), Bound::inr(Bound::unit())));
  // Functions from a 2-element space into a 2-element space.
  EXPECT_EQ(enumerate_bounds(parse_type("(A | B) -> (C | D)")).size(), 4u);
  EXPECT_EQ(enumerate_bounds_over(parse_type("O A (+) O B"), {0, 1, 2}).size(), 9u);
}

TEST(Classify, PaperExamples) {
  EXPECT_EQ(classify(parse_type("!(A (x) B)")), TypeClass::Boolean);
  EXPECT_EQ(classify(parse_type("A (+) !A")), TypeClass::Pure);
  EXPECT_EQ(classify(parse_type("(A | B) -> O C")), TypeClass::Elementary);
  EXPECT_EQ(classify(parse_type("A | B")), TypeClass::General);
  EXPECT_EQ(classify(parse_type("O O A")), TypeClass::General);
  EXPECT_EQ(classify(parse_type("O A -> O B")), TypeClass::General);
  EXPECT_EQ(classify(parse_type("(A (+) B) -> C")), TypeClass::Boolean);
  EXPECT_EQ(classify(parse_type("!O A")), TypeClass::Pure);
  EXPECT_EQ(classify(parse_type("O A & (B -> O C)")), TypeClass::Elementary);
}

TEST(Shape, Vectors) {
  BoundShape row = bound_space_shape(parse_type("Z1 | Z2 -> O Z"));
  EXPECT_EQ(row.kind, BoundShape::Kind::Matrix);
  EXPECT_EQ(row.rows, 1u);
  EXPECT_EQ(row.cols, 2u);
  BoundShape col = bound_space_shape(parse_type("Z -> O Z1 (+) O Z2"));
  EXPECT_EQ(col.rows, 2u);
  EXPECT_EQ(col.cols, 1u);
  EXPECT_EQ(bound_space_shape(parse_type("A (+) B")).kind, BoundShape::Kind::Singleton);
  EXPECT_EQ(bound_space_shape(parse_type("A | B")).kind, BoundShape::Kind::Finite);
  EXPECT_EQ(bound_space_shape(parse_type("O O A")).kind, BoundShape::Kind::Infinite);
  BoundShape m = bound_space_shape(parse_type("H0 | out.H -> O L19 (+) O in.H"));
  EXPECT_EQ(m.rows, 2u);
  EXPECT_EQ(m.cols, 2u);
}

TEST(Shape, RowMajorMatrix) {
  const Interface h = parse_interface("[5, 7; 4, 6] : H0 | out.H -> O L19 (+) O in.H");
  // Column H0 maps to (5, 4), column out.H to (7, 6).
  const Bound* h0 = h.bound().lookup(Bound::inl(Bound::unit()));
  ASSERT_NE(h0, nullptr);
  EXPECT_EQ(h0->first().delay_value(), ExtNat(5));
  EXPECT_EQ(h0->second().delay_value(), ExtNat(4));
  EXPECT_EQ(encode_bound(h.bound(), h.type()), (std::vector<ExtNat>{5, 7, 4, 6}));
}

TEST(Properties, PrintParseRoundTrip) {
  std::mt19937 rng(7);
  for (int n = 0; n < 2000; ++n) {
    const Type t = testing_support::random_type(rng, 4);
    const std::string text = to_string(t);
    EXPECT_EQ(parse_type(text), t) << text;
  }
}

TEST(Properties, InterfaceRoundTrip) {
  std::mt19937 rng(11);
  for (int n = 0; n < 1000; ++n) {
    const Type t = testing_support::random_type(rng, 3);
    std::vector<Bound> bs;
    try {
      bs = enumerate_bounds_over(t, {ExtNat::neg_inf(), 0, 2, ExtNat::pos_inf()}, 64);
    } catch (const std::exception&) {
      continue;
    }
    for (const Bound& b : bs) {
      const Interface i(b, t);
      EXPECT_EQ(parse_interface(to_string(i)), i) << to_string(i);
    }
  }
}

TEST(Properties, ClassChainAndShape) {
  std::mt19937 rng(3);
  for (int n = 0; n < 3000; ++n) {
    const Type t = testing_support::random_type(rng, 4);
    const TypeClass c = classify(t);
    if (is_boolean(t)) { EXPECT_TRUE(is_pure(t)); }
    if (is_pure(t)) { EXPECT_TRUE(is_elementary(t)); }
    const BoundShape s = bound_space_shape(t);
    const bool finite_dim = s.kind == BoundShape::Kind::Singleton || s.kind == BoundShape::Kind::Matrix;
    EXPECT_EQ(finite_dim, c != TypeClass::General) << to_string(t);
  }
}

TEST(Properties, MatrixEncodingRoundTrip) {
  std::mt19937 rng(5);
  const std::vector<ExtNat> grid{ExtNat::neg_inf(), 0, 1, 3, ExtNat::pos_inf()};
  int checked = 0;
  for (int n = 0; n < 3000 && checked < 500; ++n) {
    const Type t = testing_support::random_type(rng, 3);
    if (!is_elementary(t)) continue;
    std::vector<Bound> bs;
    try {
      bs = enumerate_bounds_over(t, grid, 200);
    } catch (const ResourceError&) {
      continue;
    }
    for (const Bound& b : bs) {
      const auto m = encode_bound(b, t);
      const BoundShape s = bound_space_shape(t);
      EXPECT_EQ(m.size(), s.rows * s.cols);
      EXPECT_EQ(decode_bound(m, t), b) << to_string(t);
    }
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

}  // namespace
}  // namespace schedalg
