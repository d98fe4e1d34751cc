#include "schedalg/algebra/combinators.hpp"

#include "schedalg/kernel/bounds.hpp"
#include "schedalg/kernel/classify.hpp"
#include "schedalg/kernel/errors.hpp"
#include "schedalg/kernel/syntax.hpp"

namespace schedalg {

namespace {

void require_pure(const Type& t) {
  if (!is_pure(t)) throw ClassError("control is not pure: " + to_string(t));
}

void require_same(const Type& a, const Type& b, const char* what) {
  if (a != b) throw ControlMismatch(std::string(what) + ": " + to_string(a) + " vs " + to_string(b));
}

}  // namespace

Type DelayImplication::type() const { return Type::implies(ante, Type::delay(cons)); }

Interface DelayImplication::to_interface() const {
  require_pure(ante);
  require_pure(cons);
  return Interface(Bound::table({{canonical_bound(ante), Bound::delay(d, canonical_bound(cons))}}), type());
}

Type DelayedControl::type() const { return Type::delay(ctl); }

Interface DelayedControl::to_interface() const {
  require_pure(ctl);
  return Interface(Bound::delay(d, canonical_bound(ctl)), type());
}

DelayImplication seq_compose(const DelayImplication& a, const DelayImplication& b) {
  require_same(a.cons, b.ante, "sequential composition");
  const ExtNat d = a.d.is_neg_inf() ? ExtNat::neg_inf() : delay_sum(a.d, b.d);
  return {a.ante, b.cons, d};
}

DelayImplication fork_and(const DelayImplication& a, const DelayImplication& b) {
  require_same(a.ante, b.ante, "fork");
  return {a.ante, Type::conj(a.cons, b.cons), max(a.d, b.d)};
}

DelayImplication fork_sum(const DelayImplication& a, const DelayImplication& b) {
  require_same(a.ante, b.ante, "fork");
  return {a.ante, Type::oplus(a.cons, b.cons), min(a.d, b.d)};
}

DelayImplication join_sum(const DelayImplication& a, const DelayImplication& b) {
  require_same(a.cons, b.cons, "join");
  return {Type::oplus(a.ante, b.ante), a.cons, max(a.d, b.d)};
}

DelayImplication join_and(const DelayImplication& a, const DelayImplication& b) {
  require_same(a.cons, b.cons, "join");
  return {Type::conj(a.ante, b.ante), a.cons, min(a.d, b.d)};
}

DelayedControl tensor_interleave(const DelayedControl& a, const DelayedControl& b) {
  return {Type::oplus(a.ctl, b.ctl), delay_sum(a.d, b.d)};
}

Interface sync_operand(const DelayedControl& a, const Type& partner) {
  const Type t = Type::conj(a.type(), Type::implies(a.ctl, partner));
  return Interface(Bound::pair(a.to_interface().bound(), canonical_bound(Type::implies(a.ctl, partner))), t);
}

DelayedControl tensor_sync(const DelayedControl& a, const DelayedControl& b) {
  return {Type::conj(a.ctl, b.ctl), delay_sum(a.d, b.d)};
}

}  // namespace schedalg
