#include <gtest/gtest.h>

#include <random>

#include "schedalg/kernel/bounds.hpp"
#include "schedalg/kernel/errors.hpp"
#include "schedalg/kernel/syntax.hpp"
#include "schedalg/semantics/analysis.hpp"
#include "schedalg/semantics/satisfaction.hpp"
#include "test_support.hpp"

namespace schedalg {
namespace {

const Vocabulary kAB({"A", "B"});

Activation act(std::vector<std::vector<std::string>> evs, const Vocabulary& v = kAB) { return make_activation(evs, v); }

bool sat(const Activation& a, const std::string& iface, const Vocabulary& v = kAB) {
  return satisfies(a, parse_interface(iface), v);
}

TEST(Activation, Shift) {
  EXPECT_EQ(shift(act({{}, {"A"}}), 1), act({{"A"}}));
  const Activation s = act({{}, {"A"}, {"A", "B"}});
  EXPECT_EQ(shift(s, 0), s);
  EXPECT_EQ(shift(Activation{}, 3), Activation{});
  EXPECT_EQ(shift(s, 7), Activation{});
}

TEST(Activation, MonotoneOnly) {
  EXPECT_THROW(act({{"A"}, {}}), std::invalid_argument);
  EXPECT_THROW(act({{"Z"}}), std::invalid_argument);
}

TEST(Activation, SubActivations) {
  const auto subs = subactivations(act({{"A"}}));
  ASSERT_EQ(subs.size(), 2u);
  EXPECT_EQ(subs[0], Activation{});
  EXPECT_EQ(subs[1], act({{"A"}}));
  const Vocabulary v({"A", "B", "C", "D", "E"});
  Activation a;
  for (std::size_t n = 0; n <= 5; ++n) {
    EXPECT_EQ(subactivations(a).size(), std::size_t{1} << n);
    for (std::size_t i = 0; i <= n + 1; ++i) {
      const auto s = subactivations(a);
      EXPECT_NE(std::find(s.begin(), s.end(), shift(a, i)), s.end());
    }
    a.events.push_back(a.empty() ? Event{1} : (a.events.back() << 1) | a.events.back());
  }
}

TEST(Activation, Covers) {
  const auto c = covers2(act({{"A"}}));
  ASSERT_EQ(c.size(), 3u);
  EXPECT_NE(std::find(c.begin(), c.end(), std::make_pair(Activation{}, act({{"A"}}))), c.end());
  EXPECT_NE(std::find(c.begin(), c.end(), std::make_pair(act({{"A"}}), Activation{})), c.end());
  EXPECT_NE(std::find(c.begin(), c.end(), std::make_pair(act({{"A"}}), act({{"A"}}))), c.end());
  const Universe u{{"A", "B"}, 5, 0};
  std::size_t n3 = 1;
  for (const Activation& a : enumerate_activations(u)) {
    const auto subs = subactivations(a);
    const auto cs = covers2(a);
    n3 = 1;
    for (std::size_t k = 0; k < a.size(); ++k) n3 *= 3;
    EXPECT_LE(cs.size(), n3);
    for (const auto& [l, r] : cs) {
      EXPECT_NE(std::find(subs.begin(), subs.end(), l), subs.end());
      EXPECT_NE(std::find(subs.begin(), subs.end(), r), subs.end());
    }
  }
}

TEST(Satisfies, Clauses) {
  EXPECT_TRUE(sat(Activation{}, "0 : false"));
  EXPECT_FALSE(sat(act({{}}), "0 : false"));
  EXPECT_TRUE(sat(act({{"A"}, {"A", "B"}}), "0 : A"));
  EXPECT_FALSE(sat(act({{"A"}, {"A", "B"}}), "0 : B"));
  EXPECT_TRUE(sat(act({{}, {"A"}}), "(1, 0) : O A"));
  EXPECT_FALSE(sat(act({{}, {"A"}}), "(0, 0) : O A"));
  EXPECT_FALSE(sat(act({{}}), "-inf : O true"));
  EXPECT_TRUE(sat(Activation{}, "-inf : O false"));
  EXPECT_TRUE(sat(act({{}, {}}), "+inf : O false"));
  EXPECT_TRUE(sat(act({{"A"}, {"A", "B"}}), "0 : A (x) B"));
  EXPECT_FALSE(sat(act({{}}), "0 : A (x) B"));
}

TEST(Satisfies, TensorAndImplication) {
  // Index 0 goes left, index 1 right.
  EXPECT_TRUE(sat(act({{"A"}, {"A", "B"}}), "0 : A (x) A & B"));
  EXPECT_TRUE(sat(act({{}, {"A"}}), "0 : !A (x) A"));
  EXPECT_FALSE(sat(act({{}, {"A"}}), "0 : !A"));
  EXPECT_TRUE(sat(act({{}, {"B"}}), "0 : !A"));
  EXPECT_TRUE(sat(act({{"A", "B"}}), "0 : A -> B"));
  EXPECT_FALSE(sat(act({{"A"}, {"A", "B"}}), "0 : A -> B"));
  EXPECT_TRUE(sat(act({{}, {"A"}}), "{0 => (1, 0)} : true -> O A"));
  EXPECT_FALSE(sat(act({{}, {"A"}}), "{0 => (0, 0)} : true -> O A"));
}

TEST(Satisfies, InfiniteAntecedentRejected) {
  EXPECT_THROW(sat(act({{"A"}}), "0 : !O A"), UnsupportedType);
}

TEST(Schedule, Satisfaction) {
  const Interface any = parse_interface("0 : false");
  EXPECT_TRUE(schedule_satisfies(Schedule{}, any, kAB));
  EXPECT_TRUE(schedule_satisfies(Schedule{Activation{}}, any, kAB));
  // The sum clause is decided per activation under the single bound (0, 0):
  // each member satisfies one side.
  const Schedule ab{act({{"A"}}), act({{"B"}})};
  EXPECT_TRUE(schedule_satisfies(ab, parse_interface("(0, 0) : A (+) B"), kAB));
  // External choice fixes the side for the whole schedule.
  EXPECT_FALSE(schedule_satisfies(ab, parse_interface("inl 0 : A | B"), kAB));
  EXPECT_FALSE(schedule_satisfies(ab, parse_interface("inr 0 : A | B"), kAB));
}

TEST(Schedule, ParseFile) {
  Vocabulary v;
  const Schedule s = parse_schedule("# comment\n{A,B} {A,B,C}\n-\n\n{} {A}\n", v);
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(v.size(), 3u);
  EXPECT_TRUE(s.count(Activation{}));
  EXPECT_THROW(parse_schedule("{A} {}\n", v), std::runtime_error);
  EXPECT_THROW(parse_schedule("{A\n", v), std::runtime_error);
}

// Independent count: all length-n sequences of subsets, filtered for monotonicity.
std::size_t brute_count(std::size_t vars, std::size_t len) {
  std::size_t total = 0;
  const std::size_t subsets = std::size_t{1} << vars;
  for (std::size_t n = 0; n <= len; ++n) {
    std::size_t codes = 1;
    for (std::size_t i = 0; i < n; ++i) codes *= subsets;
    for (std::size_t c = 0; c < codes; ++c) {
      Activation a;
      std::size_t x = c;
      for (std::size_t i = 0; i < n; ++i, x /= subsets) a.events.push_back(x % subsets);
      if (is_monotone(a)) ++total;
    }
  }
  return total;
}

TEST(Universe, Enumeration) {
  const Vocabulary va({"A"});
  const auto one = enumerate_activations(Universe{{"A"}, 1, 0});
  ASSERT_EQ(one.size(), 3u);
  EXPECT_EQ(one[0], Activation{});
  EXPECT_EQ(one[1], act({{}}, va));
  EXPECT_EQ(one[2], act({{"A"}}, va));
  const auto two = enumerate_universe(Universe{{"A"}, 2, 0});
  EXPECT_EQ(two.size(), 6u);
  EXPECT_TRUE(two.count(act({{}, {}}, va)));
  EXPECT_TRUE(two.count(act({{}, {"A"}}, va)));
  EXPECT_TRUE(two.count(act({{"A"}, {"A"}}, va)));
  // 1 + 4 + 9: a length-2 monotone chain puts each variable in one of three states.
  EXPECT_EQ(enumerate_activations(Universe{{"A", "B"}, 2, 0}).size(), 14u);
  EXPECT_EQ(brute_count(2, 2), 14u);
  const std::vector<std::string> names{"A", "B", "C"};
  for (std::size_t k = 0; k <= 3; ++k)
    for (std::size_t len = 0; len <= 3; ++len) {
      const Universe u{std::vector<std::string>(names.begin(), names.begin() + k), len, 0};
      EXPECT_EQ(enumerate_activations(u).size(), brute_count(k, len));
      EXPECT_EQ(universe_size(u), brute_count(k, len));
    }
  EXPECT_EQ(universe_size(Universe{{"A", "B", "C"}, 4, 0}), 225u);
  EXPECT_EQ(enumerate_activations(Universe{{"A", "B", "C"}, 4, 0}).size(), brute_count(3, 4));
}

TEST(Universe, DeterministicOrder) {
  const auto a = enumerate_activations(Universe{{"A", "B"}, 3, 0});
  EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
  EXPECT_EQ(a, enumerate_activations(Universe{{"A", "B"}, 3, 0}));
}

TEST(Universe, Budget) {
  setenv("SCHED_ALGEBRA_BUDGET", "10", 1);
  EXPECT_THROW(enumerate_activations(Universe{{"A", "B"}, 3, 0}), ResourceError);
  unsetenv("SCHED_ALGEBRA_BUDGET");
}

TEST(Denotation, Basics) {
  const Universe u{{"A", "B"}, 3, 4};
  const Schedule all = enumerate_universe(u);
  EXPECT_EQ(denotation(parse_interface("0 : true"), u), all);
  EXPECT_EQ(denotation(parse_interface("0 : false"), u), Schedule{Activation{}});
  EXPECT_EQ(denotation(parse_interface("-inf : O A"), u), Schedule{Activation{}});
}

TEST(Refinement, Basics) {
  const Universe u{{"A", "B", "C"}, 3, 4};
  const Interface i = parse_interface("[2] : A -> O B");
  EXPECT_TRUE(refines(i, i, u));
  EXPECT_TRUE(refines(parse_interface("0 : false"), i, u));
  // d1 : O Z1 & d2 : O Z2 refines min(d1, d2) : O (Z1 (+) Z2).
  EXPECT_TRUE(refines(parse_interface("0 : <1 : O A> & <3 : O B>"), parse_interface("1 : O (A (+) B)"), u));
  EXPECT_FALSE(refines(parse_interface("0 : <1 : O A> & <3 : O B>"), parse_interface("0 : O (A (+) B)"), u));
}

TEST(Tighten, Examples) {
  const Vocabulary v({"A", "B"});
  const Universe u{{"A", "B"}, 4, 4};
  auto r = tighten(Schedule{act({{}, {"A"}}, v)}, parse_type("O A"), u);
  ASSERT_TRUE(r.worst_case());
  EXPECT_EQ(r.minimal[0], Bound::delay(1, Bound::unit()));

  r = tighten(Schedule{Activation{}}, parse_type("A -> O B (+) O C"), u);
  ASSERT_TRUE(r.worst_case());
  EXPECT_EQ(encode_bound(r.minimal[0], parse_type("A -> O B (+) O C")),
            (std::vector<ExtNat>{ExtNat::neg_inf(), ExtNat::neg_inf()}));

  const Type sum = parse_type("O A (+) O B");
  r = tighten(Schedule{act({{"B"}, {"A", "B"}}, v)}, sum, u);
  ASSERT_EQ(r.minimal.size(), 2u);
  std::vector<std::vector<ExtNat>> got;
  for (const Bound& b : r.minimal) got.push_back(encode_bound(b, sum));
  EXPECT_NE(std::find(got.begin(), got.end(), std::vector<ExtNat>{1, ExtNat::neg_inf()}), got.end());
  EXPECT_NE(std::find(got.begin(), got.end(), std::vector<ExtNat>{ExtNat::neg_inf(), 0}), got.end());

  r = tighten(Schedule{act({{"A"}}, v)}, parse_type("B"), u);
  EXPECT_FALSE(r.boundable());
  r = tighten(Schedule{act({{}, {}, {}, {}, {}, {}}, v)}, parse_type("O A"), u);
  ASSERT_TRUE(r.worst_case());
  EXPECT_EQ(r.minimal[0].delay_value(), ExtNat::pos_inf());
  EXPECT_THROW(tighten(Schedule{}, parse_type("O O A"), u), ClassError);
}

TEST(Persistence, Examples) {
  const Universe u{{"A", "B"}, 3, 0};
  EXPECT_TRUE(is_persistent(parse_type("A"), u));
  EXPECT_FALSE(is_persistent(parse_type("!A"), u));
  EXPECT_TRUE(is_persistent(parse_type("true"), u));
  EXPECT_TRUE(is_persistent(parse_type("A (+) B"), u));
  EXPECT_THROW(is_persistent(parse_type("O A"), u), ClassError);
}

TEST(Causality, Examples) {
  const Vocabulary v({"A"});
  EXPECT_TRUE(is_causal(Schedule{act({{}, {"A"}}, v)}, "A", 1, v));
  EXPECT_TRUE(is_causal(Schedule{act({{}}, v)}, "A", 0, v));
  EXPECT_FALSE(is_causal(Schedule{act({{}, {"A"}}, v)}, "A", 0, v));
}

// Types with quantifiable antecedents and one bound drawn from a grid.
std::optional<Interface> random_interface(std::mt19937& rng, int depth) {
  const Type t = testing_support::random_type(rng, depth);
  std::vector<Bound> bs;
  try {
    bs = enumerate_bounds_over(t, {ExtNat::neg_inf(), 0, 1, 2, ExtNat::pos_inf()}, 4096);
    Interface probe(bs.front(), t);
    satisfies(Activation{{1}}, probe, kAB);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return Interface(bs[testing_support::pick(rng, bs.size())], t);
}

TEST(Properties, IndexedEvaluatorAgreesWithDirectClauses) {
  const Universe u{{"A", "B", "C"}, 3, 0};
  const auto acts = enumerate_activations(u);
  const Vocabulary v = u.vocabulary();
  Oracle o(u);
  std::mt19937 rng(1);
  int checked = 0;
  while (checked < 300) {
    auto i = random_interface(rng, 3);
    if (!i) continue;
    ++checked;
    const ActSet& s = o.denote(*i);
    for (std::size_t k = 0; k < o.space().size(); ++k)
      ASSERT_EQ(s.test(k), satisfies(o.space().at(k), *i, v)) << to_string(*i) << " at " << to_string(o.space().at(k), v);
  }
}

TEST(Properties, DownwardClosure) {
  const Universe u{{"A", "B", "C"}, 4, 0};
  Oracle o(u);
  std::mt19937 rng(2);
  int checked = 0;
  while (checked < 300) {
    auto i = random_interface(rng, 3);
    if (!i) continue;
    ++checked;
    const ActSet& s = o.denote(*i);
    ASSERT_TRUE(s.test(o.space().empty_index()));
    for (std::size_t k = 0; k < o.space().size(); ++k) {
      if (!s.test(k)) continue;
      for (auto j : o.space().subs(k)) ASSERT_TRUE(s.test(j)) << to_string(*i);
    }
  }
}

TEST(Properties, ShiftAntitone) {
  const Universe u{{"A", "B"}, 4, 0};
  for (const Activation& a : enumerate_activations(u))
    for (const Activation& sub : subactivations(a))
      for (std::size_t i = 0; i <= a.size(); ++i)
        for (std::size_t j = i; j <= a.size() + 1; ++j) {
          const auto subs = subactivations(shift(a, i));
          ASSERT_NE(std::find(subs.begin(), subs.end(), shift(sub, j)), subs.end());
        }
}

}  // namespace
}  // namespace schedalg
