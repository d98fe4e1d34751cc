#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "schedalg/kernel/type.hpp"
#include "schedalg/semantics/evaluator.hpp"
#include "schedalg/semantics/universe.hpp"

namespace schedalg {

// Decision procedures relative to a finite universe. Every verdict is only
// as strong as the universe: "bounded-universe" refinement.
class Oracle {
 public:
  explicit Oracle(Universe u);

  const Universe& universe() const { return u_; }
  const ActivationSpace& space() const { return *space_; }
  Evaluator& evaluator() { return *eval_; }

  const ActSet& denote(const Interface& i) { return eval_->eval(i); }
  Schedule denotation(const Interface& i);

  // Some activation in [[i1]] but not in [[i2]], if any.
  std::optional<Activation> refinement_witness(const Interface& i1, const Interface& i2);
  std::optional<Activation> equivalence_witness(const Interface& i1, const Interface& i2);
  bool refines(const Interface& i1, const Interface& i2) { return !refinement_witness(i1, i2); }
  bool equivalent(const Interface& i1, const Interface& i2) { return !equivalence_witness(i1, i2); }

  // Type preorder: every bound of `a` is refined by some bound of `b`, with
  // delay slots drawn from `grid`. Returns an unmatched bound of `a`.
  std::optional<Bound> type_refinement_witness(const Type& a, const Type& b, const std::vector<ExtNat>& grid);
  bool type_refines(const Type& a, const Type& b, const std::vector<ExtNat>& grid) {
    return !type_refinement_witness(a, b, grid);
  }
  bool types_equivalent(const Type& a, const Type& b, const std::vector<ExtNat>& grid) {
    return type_refines(a, b, grid) && type_refines(b, a, grid);
  }

 private:
  Universe u_;
  std::unique_ptr<ActivationSpace> space_;
  std::unique_ptr<Evaluator> eval_;
};

Schedule denotation(const Interface& i, const Universe& u);
bool refines(const Interface& i1, const Interface& i2, const Universe& u);
bool equivalent(const Interface& i1, const Interface& i2, const Universe& u);

struct TightenResult {
  std::vector<Bound> minimal;  // antichain, in grid order
  bool boundable() const { return !minimal.empty(); }
  bool worst_case() const { return minimal.size() == 1; }
};

// Minimal bounds f with s |= f : ty, delay slots ranging over
// {-inf, 0..u.bound_grid, +inf}. Activations are read over u.vocabulary().
// Throws ClassError unless ty is elementary.
TightenResult tighten(const Schedule& s, const Type& ty, const Universe& u);

// zeta persists if <sigma(k)> |= zeta implies sigma[k,:] |= zeta throughout u.
// Throws ClassError unless ty is pure.
bool is_persistent(const Type& ty, const Universe& u);

// s |= ((d, 0), 0) : O A (+) !A
bool is_causal(const Schedule& s, const std::string& var, ExtNat d, const Vocabulary& v);

// The delay grid {-inf, 0, ..., cap, +inf}.
std::vector<ExtNat> delay_grid(std::uint64_t cap);

}  // namespace schedalg
