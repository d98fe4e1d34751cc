#pragma once

#include "schedalg/kernel/type.hpp"

namespace schedalg {

// [d] : ante -> O cons with pure controls ante and cons.
struct DelayImplication {
  Type ante;
  Type cons;
  ExtNat d;

  Type type() const;
  Interface to_interface() const;
};

// d : O ctl with a pure control ctl.
struct DelayedControl {
  Type ctl;
  ExtNat d;

  Type type() const;
  Interface to_interface() const;
};

// Offsets compose by addition. A -inf first step means the antecedent never
// holds, so the result is -inf; a -inf second step means the intermediate
// control is never reached, which leaves the first offset as the tight bound.
// Throws ControlMismatch unless a.cons == b.ante.
DelayImplication seq_compose(const DelayImplication& a, const DelayImplication& b);

// Shared antecedent: max for the conjunction of consequents, min for their sum.
DelayImplication fork_and(const DelayImplication& a, const DelayImplication& b);
DelayImplication fork_sum(const DelayImplication& a, const DelayImplication& b);
// Shared consequent: max for a sum of antecedents, min for their conjunction.
DelayImplication join_sum(const DelayImplication& a, const DelayImplication& b);
DelayImplication join_and(const DelayImplication& a, const DelayImplication& b);

// Interleaving of two persistent controls. The caller asserts persistence.
DelayedControl tensor_interleave(const DelayedControl& a, const DelayedControl& b);
// d : O z1 & (z1 -> z2): the operand shape expected by tensor_sync.
Interface sync_operand(const DelayedControl& a, const Type& partner);
DelayedControl tensor_sync(const DelayedControl& a, const DelayedControl& b);

}  // namespace schedalg
