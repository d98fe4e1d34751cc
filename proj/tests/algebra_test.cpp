#include <gtest/gtest.h>

#include <random>

#include "schedalg/algebra/boolean.hpp"
#include "schedalg/algebra/combinators.hpp"
#include "schedalg/algebra/generators.hpp"
#include "schedalg/algebra/io_interface.hpp"
#include "schedalg/kernel/bounds.hpp"
#include "schedalg/kernel/classify.hpp"
#include "schedalg/kernel/errors.hpp"
#include "schedalg/kernel/syntax.hpp"
#include "schedalg/semantics/analysis.hpp"

namespace schedalg {
namespace {

const ExtNat kNeg = ExtNat::neg_inf();
const ExtNat kPos = ExtNat::pos_inf();

Type T(const char* s) { return parse_type(s); }
Interface pure(const Type& t) { return Interface(canonical_bound(t), t); }
TropicalMatrix maxp(const char* s) { return TropicalMatrix::parse(s, Semiring::MaxPlus); }

const Universe kSmall{{"A", "B", "C"}, 3, 2};

TEST(Combinators, SeqCompose) {
  const DelayImplication a{T("A"), T("B"), 2}, b{T("B"), T("C"), 3};
  const auto r = seq_compose(a, b);
  EXPECT_EQ(r.ante, T("A"));
  EXPECT_EQ(r.cons, T("C"));
  EXPECT_EQ(r.d, ExtNat(5));
  EXPECT_EQ(seq_compose({T("A"), T("B"), kNeg}, b).d, kNeg);
  EXPECT_EQ(seq_compose(a, {T("B"), T("C"), kNeg}).d, ExtNat(2));
  EXPECT_EQ(seq_compose(a, {T("B"), T("C"), kPos}).d, kPos);
  EXPECT_THROW(seq_compose(a, {T("C"), T("A"), 1}), ControlMismatch);
}

TEST(Combinators, ForkJoin) {
  const DelayImplication a{T("A"), T("B"), 2}, b{T("A"), T("C"), 4};
  EXPECT_EQ(fork_and(a, b).d, ExtNat(4));
  EXPECT_EQ(fork_and(a, b).cons, T("B & C"));
  EXPECT_EQ(fork_sum(a, b).d, ExtNat(2));
  EXPECT_EQ(fork_sum(a, b).cons, T("B (+) C"));
  const DelayImplication c{T("A"), T("C"), 2}, e{T("B"), T("C"), 4};
  EXPECT_EQ(join_sum(c, e).d, ExtNat(4));
  EXPECT_EQ(join_sum(c, e).ante, T("A (+) B"));
  EXPECT_EQ(join_and(c, e).d, ExtNat(2));
  EXPECT_THROW(fork_and(a, e), ControlMismatch);
  EXPECT_THROW(join_sum(a, b), ControlMismatch);
}

TEST(Combinators, Tensor) {
  const DelayedControl a{T("A"), 2}, b{T("B"), 3};
  EXPECT_EQ(tensor_interleave(a, b).d, ExtNat(5));
  EXPECT_EQ(tensor_interleave(a, {T("B"), kNeg}).d, ExtNat(2));
  EXPECT_EQ(tensor_sync(a, b).ctl, T("A & B"));
  EXPECT_EQ(to_string(sync_operand(a, T("B")).type()), to_string(T("O A & (A -> B)")));
}

TEST(Combinators, ImplicationInterfaceIsSound) {
  Oracle o(kSmall);
  const DelayImplication a{T("A"), T("B"), 1};
  EXPECT_TRUE(o.equivalent(a.to_interface(), parse_interface("{0 => (1, 0)} : A -> O B")));
}

TEST(Boolean, TruthTable) {
  const auto tt = truth_table(T("A & !B"));
  EXPECT_EQ(tt.atoms, (std::vector<std::string>{"A", "B"}));
  EXPECT_EQ(tt.rows, (std::vector<bool>{false, true, false, false}));
  EXPECT_THROW(truth_table(T("O A")), ClassError);
}

TEST(Boolean, Simplify) {
  EXPECT_EQ(simplify_boolean(T("A (x) !A")), T("true"));
  EXPECT_EQ(simplify_boolean(T("A & !A")), T("false"));
  EXPECT_EQ(simplify_boolean(T("(A & B) (x) (A & !B)")), T("A"));
  EXPECT_EQ(simplify_boolean(T("!(A & B)")), T("!A (x) !B"));
  EXPECT_EQ(simplify_boolean(T("A -> B")), T("!A (x) B"));
}

TEST(Boolean, SimplifyAgreesOnRandomInstances) {
  TypeGenerator g(7, {"A", "B", "C"});
  for (int n = 0; n < 200; ++n) {
    const Type b = g.boolean(4);
    const auto lhs = truth_table(Type::conj(b, T("A (x) !A & B (x) !B & C (x) !C")));
    const auto rhs = truth_table(Type::conj(simplify_boolean(b), T("A (x) !A & B (x) !B & C (x) !C")));
    ASSERT_EQ(lhs.rows, rhs.rows) << to_string(b);
  }
}

TEST(Normalize, PureToSum) {
  EXPECT_EQ(normalize_pure(T("A (+) B & C")).size(), 2u);
  EXPECT_EQ(normalize_pure(T("(A (+) B) & (C (+) !C)")).size(), 4u);
  EXPECT_THROW(normalize_pure(T("O A")), ClassError);
  Oracle o(kSmall);
  for (const char* s : {"!(A (+) B)", "(A (+) B) -> C", "(A | B) -> C (+) A", "A (x) (B (+) C)"}) {
    const Type z = T(s);
    EXPECT_TRUE(o.equivalent(pure(z), pure(oplus_all(normalize_pure(z))))) << s;
  }
}

TEST(IO, ShapeAndPurity) {
  EXPECT_THROW(IOInterface({T("A")}, {T("B")}, maxp("[1, 2]")), std::invalid_argument);
  EXPECT_THROW(IOInterface({T("O A")}, {T("B")}, maxp("[1]")), ClassError);
  EXPECT_THROW(IOInterface({T("A")}, {T("B")}, TropicalMatrix::parse("[1]", Semiring::MinPlus)),
               std::invalid_argument);
}

TEST(IO, TextRoundTrip) {
  const auto io = parse_io_interface("inputs: A; B & C\noutputs: D\nmatrix: [1, -inf]\n");
  EXPECT_EQ(io.inputs().size(), 2u);
  EXPECT_EQ(parse_io_interface(to_string(io)), io);
  const auto empty = parse_io_interface("inputs:\noutputs: A\nmatrix: []");
  EXPECT_TRUE(empty.inputs().empty());
  EXPECT_EQ(empty.matrix().rows(), 1u);
  EXPECT_THROW(parse_io_interface("inputs: A\nmatrix: [1]"), std::runtime_error);
}

TEST(IO, InterfaceTypeAndBound) {
  const IOInterface io({T("A"), T("B")}, {T("C")}, maxp("[2, 3]"));
  const auto i = io.to_interface();
  EXPECT_EQ(i.type(), T("A | B -> O C"));
  EXPECT_EQ(encode_bound(i.bound(), i.type()), (std::vector<ExtNat>{2, 3}));
}

TEST(IO, ComposeKronProject) {
  const IOInterface a({T("A")}, {T("B"), T("C")}, maxp("[1; 2]"));
  const IOInterface b({T("B"), T("C")}, {T("D")}, maxp("[3, 1]"));
  EXPECT_EQ(io_compose(a, b).matrix(), maxp("[4]"));
  EXPECT_THROW(io_compose(b, a), ControlMismatch);
  // C never holds downstream, so A is only met by the activation ending within 2.
  const IOInterface dead({T("B"), T("C")}, {T("D")}, maxp("[3, -inf]"));
  EXPECT_EQ(io_compose(a, dead).matrix(), maxp("[4]"));
  const IOInterface dead2({T("B"), T("C")}, {T("D")}, maxp("[0, -inf]"));
  EXPECT_EQ(io_compose(a, dead2).matrix(), maxp("[2]"));
  // Inputs that are equal after simplification still match.
  const IOInterface b2({T("B & B"), T("C (x) C")}, {T("D")}, maxp("[3, 1]"));
  EXPECT_EQ(io_compose(a, b2).matrix(), maxp("[4]"));

  const IOInterface g({T("G0"), T("L11")}, {T("L11")}, maxp("[5, 0]"));
  const IOInterface h({T("H0"), T("out.H")}, {T("L19"), T("in.H")}, maxp("[5, 7; 4, 6]"));
  const auto k = io_kron(g, h);
  EXPECT_EQ(k.matrix(), maxp("[10, 12, 5, 7; 9, 11, 4, 6]"));
  EXPECT_EQ(k.inputs()[1], T("G0 & out.H"));
  EXPECT_EQ(k.inputs()[2], T("L11 & H0"));
  const auto p = io_project(k, {0, 1}, {0, 1});
  EXPECT_EQ(p.matrix(), maxp("[10, 12; 9, 11]"));
  EXPECT_THROW(io_project(k, {4}, {0}), std::out_of_range);
}

TEST(IO, BundleAndSplit) {
  const IOInterface a({T("A"), T("B"), T("C")}, {T("D"), T("E")}, maxp("[1, 5, 2; 3, -inf, 4]"));
  const auto b = io_bundle(a, {0, 2}, T("F"));
  EXPECT_EQ(b.io.inputs(), (std::vector<Type>{T("F"), T("B")}));
  EXPECT_EQ(b.io.matrix(), maxp("[2, 5; 4, -inf]"));
  EXPECT_EQ(to_string(b.obligation), "A (+) C == F");
  EXPECT_FALSE(discharge(b.obligation, kSmall));
  EXPECT_TRUE(discharge({T("A (+) B"), T("B (+) A")}, kSmall));
  // F is a fresh name: conjoining F <-> (A (+) C) as an assumption settles it.
  const Universe u4{{"A", "C", "F"}, 2, 2};
  EXPECT_TRUE(discharge(b.obligation, u4, Type::conj(T("F -> A (+) C"), T("A (+) C -> F"))));

  const auto r = io_bundle_outputs(a, {1, 0}, T("G"));
  EXPECT_EQ(r.io.outputs(), (std::vector<Type>{T("G")}));
  EXPECT_EQ(r.io.matrix(), maxp("[3, 5, 4]"));

  const auto s = io_split(a, 1, {T("I"), T("!I")}, maxp("[5, 4; -inf, -inf]"));
  EXPECT_EQ(s.inputs()[1], T("B & I"));
  EXPECT_EQ(s.inputs()[2], T("B & !I"));
  EXPECT_EQ(s.matrix(), maxp("[1, 5, 4, 2; 3, -inf, -inf, 4]"));
  EXPECT_THROW(io_split(a, 1, {T("I")}, maxp("[1, 2]")), std::invalid_argument);
  EXPECT_THROW(io_bundle(a, {0, 0}, T("F")), std::invalid_argument);
}

// Composition is sound: [[a]] and [[b]] together entail [[a ; b]].
TEST(IO, ComposeSoundOnRandomInstances) {
  Oracle o(kSmall);
  std::mt19937 rng(3);
  const std::vector<ExtNat> grid{kNeg, 0, 1, 2, kPos};
  auto draw = [&] { return grid[rng() % grid.size()]; };
  auto mat = [&](std::size_t r, std::size_t c) {
    TropicalMatrix m(r, c, Semiring::MaxPlus);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, draw());
    return m;
  };
  for (int n = 0; n < 400; ++n) {
    const IOInterface a({T("A"), T("B & C")}, {T("B"), T("C")}, mat(2, 2));
    const IOInterface b({T("B"), T("C")}, {T("C"), T("A")}, mat(2, 2));
    ActSet lhs = o.denote(a.to_interface());
    lhs &= o.denote(b.to_interface());
    const auto c = io_compose(a, b);
    ASSERT_TRUE(lhs.subset_of(o.denote(c.to_interface()))) << to_string(a) << "\n" << to_string(b);
  }
}

TEST(Generators, DeterministicAndClassed) {
  TypeGenerator g1(11, {"A", "B"}), g2(11, {"A", "B"});
  for (int n = 0; n < 100; ++n) {
    const Type b = g1.boolean(3), p = g1.pure(3), e = g1.elementary(3);
    EXPECT_EQ(b, g2.boolean(3));
    EXPECT_EQ(p, g2.pure(3));
    EXPECT_EQ(e, g2.elementary(3));
    EXPECT_TRUE(is_boolean(b));
    EXPECT_TRUE(is_pure(p));
    EXPECT_TRUE(is_elementary(e));
  }
  EXPECT_EQ(law_grid().size(), 5u);
}

}  // namespace
}  // namespace schedalg
