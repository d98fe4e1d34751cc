#pragma once

#include "schedalg/kernel/type.hpp"
#include "schedalg/semantics/activation.hpp"

namespace schedalg {

// sigma |= f : phi, by direct recursion over the satisfaction clauses. Atoms
// outside the vocabulary are never active. Throws UnsupportedType when a
// quantified antecedent has an infinite bound space.
//
// This is the reference evaluator. It enumerates all 2^n sub-activations for
// implications and all 3^n index assignments for tensors, so it is only meant
// for short activations and as an oracle for the indexed evaluator.
bool satisfies(const Activation& a, const Interface& i, const Vocabulary& v);
bool satisfies(const Activation& a, const Bound& f, const Type& phi, const Vocabulary& v);

bool schedule_satisfies(const Schedule& s, const Interface& i, const Vocabulary& v);

}  // namespace schedalg
