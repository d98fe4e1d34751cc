#include "schedalg/semantics/evaluator.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "schedalg/kernel/bounds.hpp"
#include "schedalg/kernel/errors.hpp"
#include "schedalg/kernel/syntax.hpp"

namespace schedalg {

ActSet::ActSet(std::size_t n, bool value) : n_(n), w_((n + 63) / 64, value ? ~std::uint64_t{0} : 0) { trim(); }

void ActSet::trim() {
  if (n_ % 64 != 0 && !w_.empty()) w_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
}

std::size_t ActSet::count() const {
  std::size_t c = 0;
  for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ActSet::subset_of(const ActSet& o) const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~o.w_[i]) return false;
  return true;
}

std::optional<std::size_t> ActSet::first_outside(const ActSet& o) const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (auto d = w_[i] & ~o.w_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(d));
  return std::nullopt;
}

ActSet& ActSet::operator&=(const ActSet& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}

ActSet& ActSet::operator|=(const ActSet& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

ActSet ActSet::operator~() const {
  ActSet r = *this;
  for (auto& w : r.w_) w = ~w;
  r.trim();
  return r;
}

// ---------------------------------------------------------------------------

ActivationSpace::ActivationSpace(std::vector<Activation> acts) : acts_(std::move(acts)) {
  std::sort(acts_.begin(), acts_.end());
  acts_.erase(std::unique(acts_.begin(), acts_.end()), acts_.end());
  for (std::size_t i = 0; i < acts_.size(); ++i) index_.emplace(acts_[i], static_cast<std::uint32_t>(i));
  empty_ = index_.at(Activation{});
  const std::size_t n = acts_.size();
  subs_.resize(n);
  shifts_.resize(n);
  covers_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Activation& a = acts_[i];
    for (const Activation& s : subactivations(a)) subs_[i].push_back(index_.at(s));
    std::sort(subs_[i].begin(), subs_[i].end());
    subs_[i].erase(std::unique(subs_[i].begin(), subs_[i].end()), subs_[i].end());
    for (std::size_t k = 0; k <= a.size(); ++k) shifts_[i].push_back(index_.at(shift(a, k)));
    for (const auto& [l, r] : covers2(a)) covers_[i].emplace_back(index_.at(l), index_.at(r));
  }
}

ActivationSpace ActivationSpace::of_universe(const Universe& u) { return ActivationSpace(enumerate_activations(u)); }

ActivationSpace ActivationSpace::closure_of(const Schedule& s) {
  std::set<Activation> all{Activation{}};
  for (const Activation& a : s) {
    if (a.size() > 20) throw ResourceError("activation too long for the indexed evaluator");
    for (Activation& sub : subactivations(a)) all.insert(std::move(sub));
  }
  return ActivationSpace(std::vector<Activation>(all.begin(), all.end()));
}

std::optional<std::size_t> ActivationSpace::index_of(const Activation& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ActSet ActivationSpace::members(const Schedule& s) const {
  ActSet out(size());
  for (const Activation& a : s) {
    auto i = index_of(a);
    if (!i) throw std::invalid_argument("activation outside the space");
    out.set(*i);
  }
  return out;
}

// ---------------------------------------------------------------------------

Evaluator::Evaluator(const ActivationSpace& space, Vocabulary vocab) : space_(space), vocab_(std::move(vocab)) {}

std::size_t Evaluator::KeyHash::operator()(const Key& k) const {
  const auto a = std::hash<const void*>{}(k.type);
  const auto b = std::hash<const void*>{}(k.bound);
  return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

const ActSet& Evaluator::eval(const Interface& i) { return eval(i.bound(), i.type()); }

const ActSet& Evaluator::eval(const Bound& f, const Type& phi) {
  const Key key{phi.identity(), f.identity()};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second.set;
  ActSet s = compute(f, phi);
  auto [it, _] = memo_.emplace(key, Entry{phi, f, std::move(s)});
  return it->second.set;
}

const std::vector<Bound>& Evaluator::quantified(const Type& ante) {
  if (auto it = bounds_.find(ante.identity()); it != bounds_.end()) return it->second.second;
  if (!is_delay_free(ante))
    throw UnsupportedType("cannot quantify over the infinite bound space of " + to_string(ante));
  auto [it, _] = bounds_.emplace(ante.identity(), std::make_pair(ante, enumerate_bounds(ante)));
  return it->second.second;
}

// Activations all of whose sub-activations lie in `good`.
ActSet Evaluator::downward_closed_within(const ActSet& good) const {
  ActSet out(space_.size());
  for (std::size_t i = 0; i < space_.size(); ++i) {
    bool ok = true;
    for (auto j : space_.subs(i))
      if (!good.test(j)) {
        ok = false;
        break;
      }
    if (ok) out.set(i);
  }
  return out;
}

ActSet Evaluator::compute(const Bound& f, const Type& t) {
  const std::size_t n = space_.size();
  switch (t.op()) {
    case Op::True: return ActSet(n, true);
    case Op::False: {
      ActSet s(n);
      s.set(space_.empty_index());
      return s;
    }
    case Op::Atom: {
      ActSet s(n);
      auto v = vocab_.find(t.name());
      for (std::size_t i = 0; i < n; ++i) {
        const auto& ev = space_.at(i).events;
        const bool all = v ? std::all_of(ev.begin(), ev.end(), [&](Event e) { return (e >> *v) & 1; }) : ev.empty();
        if (all) s.set(i);
      }
      return s;
    }
    case Op::And: {
      ActSet s = eval(f.first(), t.lhs());
      s &= eval(f.second(), t.rhs());
      return s;
    }
    case Op::OPlus: {
      ActSet s = eval(f.first(), t.lhs());
      s |= eval(f.second(), t.rhs());
      return s;
    }
    case Op::Or:
      return f.kind() == Bound::Kind::InL ? eval(f.inner(), t.lhs()) : eval(f.inner(), t.rhs());
    case Op::Embed: return eval(t.embedded().bound(), t.embedded().type());
    case Op::Delay: {
      const ActSet& inner = eval(f.inner(), t.operand());
      const ExtNat d = f.delay_value();
      ActSet s(n);
      for (std::size_t i = 0; i < n; ++i) {
        const auto& sh = space_.shifts(i);
        const std::size_t len = sh.size() - 1;
        if (len == 0) {
          s.set(i);
          continue;
        }
        if (d.is_neg_inf()) continue;
        const std::size_t last = d.is_pos_inf() ? len : static_cast<std::size_t>(std::min<std::uint64_t>(d.value(), len));
        for (std::size_t k = 0; k <= last; ++k)
          if (inner.test(sh[k])) {
            s.set(i);
            break;
          }
      }
      return s;
    }
    case Op::OTimes: {
      const ActSet l = eval(f.first(), t.lhs());
      const ActSet& r = eval(f.second(), t.rhs());
      ActSet s(n);
      for (std::size_t i = 0; i < n; ++i)
        for (const auto& [a, b] : space_.covers(i))
          if (l.test(a) && r.test(b)) {
            s.set(i);
            break;
          }
      return s;
    }
    case Op::Implies: {
      ActSet good(n, true);
      for (const Bound& g : quantified(t.lhs())) {
        ActSet clause = ~eval(g, t.lhs());
        clause |= eval(*f.lookup(g), t.rhs());
        good &= clause;
      }
      return downward_closed_within(good);
    }
    case Op::Not: {
      ActSet good(n, true);
      for (const Bound& g : quantified(t.operand())) {
        ActSet clause = ~eval(g, t.operand());
        clause.set(space_.empty_index());
        good &= clause;
      }
      return downward_closed_within(good);
    }
  }
  return ActSet(n);
}

}  // namespace schedalg
