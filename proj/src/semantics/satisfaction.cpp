#include "schedalg/semantics/satisfaction.hpp"

#include "schedalg/kernel/bounds.hpp"
#include "schedalg/kernel/errors.hpp"
#include "schedalg/kernel/syntax.hpp"

namespace schedalg {

namespace {

std::vector<Bound> quantified_bounds(const Type& ante) {
  if (!is_delay_free(ante))
    throw UnsupportedType("cannot quantify over the infinite bound space of " + to_string(ante));
  return enumerate_bounds(ante);
}

bool sat(const Activation& a, const Bound& f, const Type& t, const Vocabulary& v) {
  switch (t.op()) {
    case Op::False: return a.empty();
    case Op::True: return true;
    case Op::Atom: {
      auto i = v.find(t.name());
      if (!i) return a.empty();
      const Event bit = Event{1} << *i;
      for (Event e : a.events)
        if (!(e & bit)) return false;
      return true;
    }
    case Op::And: return sat(a, f.first(), t.lhs(), v) && sat(a, f.second(), t.rhs(), v);
    case Op::OPlus: return sat(a, f.first(), t.lhs(), v) || sat(a, f.second(), t.rhs(), v);
    case Op::Or:
      return f.kind() == Bound::Kind::InL ? sat(a, f.inner(), t.lhs(), v) : sat(a, f.inner(), t.rhs(), v);
    case Op::Embed: return sat(a, t.embedded().bound(), t.embedded().type(), v);
    case Op::Delay: {
      const ExtNat d = f.delay_value();
      if (a.empty()) return true;
      if (d.is_neg_inf()) return false;
      const std::size_t last = d.is_pos_inf() ? a.size() : static_cast<std::size_t>(std::min<std::uint64_t>(d.value(), a.size()));
      for (std::size_t i = 0; i <= last; ++i)
        if (sat(shift(a, i), f.inner(), t.operand(), v)) return true;
      return false;
    }
    case Op::OTimes:
      for (const auto& [l, r] : covers2(a))
        if (sat(l, f.first(), t.lhs(), v) && sat(r, f.second(), t.rhs(), v)) return true;
      return false;
    case Op::Implies: {
      const auto gs = quantified_bounds(t.lhs());
      for (const Activation& sub : subactivations(a))
        for (const Bound& g : gs)
          if (sat(sub, g, t.lhs(), v) && !sat(sub, *f.lookup(g), t.rhs(), v)) return false;
      return true;
    }
    case Op::Not: {
      const auto gs = quantified_bounds(t.operand());
      for (const Activation& sub : subactivations(a))
        for (const Bound& g : gs)
          if (sat(sub, g, t.operand(), v) && !sub.empty()) return false;
      return true;
    }
  }
  return false;
}

}  // namespace

bool satisfies(const Activation& a, const Bound& f, const Type& phi, const Vocabulary& v) {
  check_bound(f, phi);
  return sat(a, f, phi, v);
}

bool satisfies(const Activation& a, const Interface& i, const Vocabulary& v) {
  return sat(a, i.bound(), i.type(), v);
}

bool schedule_satisfies(const Schedule& s, const Interface& i, const Vocabulary& v) {
  for (const Activation& a : s)
    if (!satisfies(a, i, v)) return false;
  return true;
}

}  // namespace schedalg
