#include "schedalg/semantics/analysis.hpp"

#include "schedalg/kernel/bounds.hpp"
#include "schedalg/kernel/classify.hpp"
#include "schedalg/kernel/errors.hpp"
#include "schedalg/kernel/syntax.hpp"
#include "schedalg/semantics/satisfaction.hpp"

namespace schedalg {

Oracle::Oracle(Universe u)
    : u_(std::move(u)),
      space_(std::make_unique<ActivationSpace>(ActivationSpace::of_universe(u_))),
      eval_(std::make_unique<Evaluator>(*space_, u_.vocabulary())) {}

Schedule Oracle::denotation(const Interface& i) {
  const ActSet& s = denote(i);
  Schedule out;
  for (std::size_t k = 0; k < space_->size(); ++k)
    if (s.test(k)) out.insert(space_->at(k));
  return out;
}

std::optional<Activation> Oracle::refinement_witness(const Interface& i1, const Interface& i2) {
  const ActSet a = denote(i1);
  const ActSet& b = denote(i2);
  if (auto k = a.first_outside(b)) return space_->at(*k);
  return std::nullopt;
}

std::optional<Activation> Oracle::equivalence_witness(const Interface& i1, const Interface& i2) {
  if (auto w = refinement_witness(i1, i2)) return w;
  return refinement_witness(i2, i1);
}

std::optional<Bound> Oracle::type_refinement_witness(const Type& a, const Type& b, const std::vector<ExtNat>& grid) {
  const auto fs = enumerate_bounds_over(a, grid);
  const auto gs = enumerate_bounds_over(b, grid);
  std::vector<ActSet> gsets;
  gsets.reserve(gs.size());
  for (const Bound& g : gs) gsets.push_back(eval_->eval(g, b));
  for (const Bound& f : fs) {
    const ActSet fs_set = eval_->eval(f, a);
    bool matched = false;
    for (const ActSet& g : gsets)
      if (fs_set.subset_of(g)) {
        matched = true;
        break;
      }
    if (!matched) return f;
  }
  return std::nullopt;
}

Schedule denotation(const Interface& i, const Universe& u) { return Oracle(u).denotation(i); }
bool refines(const Interface& i1, const Interface& i2, const Universe& u) { return Oracle(u).refines(i1, i2); }
bool equivalent(const Interface& i1, const Interface& i2, const Universe& u) { return Oracle(u).equivalent(i1, i2); }

std::vector<ExtNat> delay_grid(std::uint64_t cap) {
  std::vector<ExtNat> g{ExtNat::neg_inf()};
  for (std::uint64_t d = 0; d <= cap; ++d) g.emplace_back(d);
  g.push_back(ExtNat::pos_inf());
  return g;
}

TightenResult tighten(const Schedule& s, const Type& ty, const Universe& u) {
  if (!is_elementary(ty)) throw ClassError("tighten needs an elementary type, got " + to_string(ty));
  const BoundShape shape = bound_space_shape(ty);
  const std::size_t slots = shape.rows * shape.cols;
  const auto grid = delay_grid(u.bound_grid);
  const std::size_t g = grid.size();
  std::size_t total = 1;
  for (std::size_t j = 0; j < slots; ++j) {
    if (total > enumeration_budget() / g) throw ResourceError("tighten grid exceeds the enumeration budget");
    total *= g;
  }

  const ActivationSpace space = ActivationSpace::closure_of(s);
  Evaluator eval(space, u.vocabulary());
  const ActSet members = space.members(s);

  // Mixed-radix code, slot 0 most significant.
  auto decode_code = [&](std::size_t code) {
    std::vector<ExtNat> v(slots);
    for (std::size_t j = slots; j-- > 0; code /= g) v[j] = grid[code % g];
    return v;
  };
  std::vector<char> ok(total, 0);
  std::vector<Bound> bounds(total);
  for (std::size_t code = 0; code < total; ++code) {
    bounds[code] = decode_bound(decode_code(code), ty);
    ok[code] = members.subset_of(eval.eval(bounds[code], ty)) ? 1 : 0;
  }

  // Satisfaction is monotone in every slot, so a satisfying point is minimal
  // exactly when lowering any single slot by one grid step breaks it.
  TightenResult r;
  for (std::size_t code = 0; code < total; ++code) {
    if (!ok[code]) continue;
    bool minimal = true;
    std::size_t weight = 1;
    for (std::size_t j = slots; j-- > 0; weight *= g) {
      const std::size_t digit = (code / weight) % g;
      if (digit > 0 && ok[code - weight]) {
        minimal = false;
        break;
      }
    }
    if (minimal) r.minimal.push_back(bounds[code]);
  }
  return r;
}

bool is_persistent(const Type& ty, const Universe& u) {
  if (!is_pure(ty)) throw ClassError("persistence needs a pure type, got " + to_string(ty));
  Oracle o(u);
  const ActSet& s = o.evaluator().eval(canonical_bound(ty), ty);
  const ActivationSpace& space = o.space();
  for (std::size_t i = 0; i < space.size(); ++i) {
    const Activation& a = space.at(i);
    for (std::size_t k = 0; k < a.size(); ++k) {
      const auto single = space.index_of(Activation{{a.events[k]}});
      if (s.test(*single) && !s.test(space.shifts(i)[k])) return false;
    }
  }
  return true;
}

bool is_causal(const Schedule& s, const std::string& var, ExtNat d, const Vocabulary& v) {
  const Type a = Type::atom(var);
  const Interface causal(Bound::pair(Bound::delay(d, Bound::unit()), Bound::unit()),
                         Type::oplus(Type::delay(a), Type::negation(a)));
  return schedule_satisfies(s, causal, v);
}

}  // namespace schedalg
