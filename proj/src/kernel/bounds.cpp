#include "schedalg/kernel/bounds.hpp"

#include "schedalg/kernel/errors.hpp"
#include "schedalg/kernel/syntax.hpp"

namespace schedalg {

bool is_delay_free(const Type& t) {
  switch (t.op()) {
    case Op::Delay: return false;
    case Op::Not: return is_delay_free(t.operand());
    case Op::Atom: case Op::True: case Op::False: case Op::Embed: return true;
    default: return is_delay_free(t.lhs()) && is_delay_free(t.rhs());
  }
}

bool has_singleton_bounds(const Type& t) {
  switch (t.op()) {
    case Op::Atom: case Op::True: case Op::False: case Op::Not: case Op::Embed: return true;
    case Op::Delay: case Op::Or: return false;
    case Op::Implies: return is_delay_free(t.lhs()) && has_singleton_bounds(t.rhs());
    default: return has_singleton_bounds(t.lhs()) && has_singleton_bounds(t.rhs());
  }
}

namespace {

[[noreturn]] void mismatch(const Bound& b, const Type& t) {
  throw BoundError("bound " + to_string(b) + " does not fit type " + to_string(t));
}

void require_table_antecedent(const Type& ante) {
  if (!is_delay_free(ante))
    throw UnsupportedType("implication antecedent has an infinite bound space: " + to_string(ante));
}

// Product of per-key choices, first key most significant.
std::vector<Bound> all_tables(const std::vector<Bound>& keys, const std::vector<Bound>& vals,
                              std::size_t limit) {
  std::vector<Bound> out;
  if (vals.empty()) return out;
  double total = 1;
  for (std::size_t i = 0; i < keys.size(); ++i) total *= static_cast<double>(vals.size());
  if (total > static_cast<double>(limit)) throw ResourceError("table bound space too large");
  std::vector<std::size_t> idx(keys.size(), 0);
  while (true) {
    std::vector<Bound::Entry> entries;
    entries.reserve(keys.size());
    for (std::size_t k = 0; k < keys.size(); ++k) entries.emplace_back(keys[k], vals[idx[k]]);
    out.push_back(Bound::table(std::move(entries)));
    std::size_t k = keys.size();
    while (k > 0) {
      --k;
      if (++idx[k] < vals.size()) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
    if (keys.empty()) return out;
  }
}

std::vector<Bound> enumerate_impl(const Type& t, const std::vector<ExtNat>* grid, std::size_t limit) {
  switch (t.op()) {
    case Op::Atom: case Op::True: case Op::False: case Op::Not: case Op::Embed:
      return {Bound::unit()};
    case Op::Delay: {
      if (grid == nullptr) throw UnsupportedType("bound space of " + to_string(t) + " is infinite");
      std::vector<Bound> out;
      for (const Bound& inner : enumerate_impl(t.operand(), grid, limit))
        for (ExtNat d : *grid) out.push_back(Bound::delay(d, inner));
      if (out.size() > limit) throw ResourceError("bound space too large");
      return out;
    }
    case Op::Or: {
      std::vector<Bound> out;
      for (const Bound& b : enumerate_impl(t.lhs(), grid, limit)) out.push_back(Bound::inl(b));
      for (const Bound& b : enumerate_impl(t.rhs(), grid, limit)) out.push_back(Bound::inr(b));
      if (out.size() > limit) throw ResourceError("bound space too large");
      return out;
    }
    case Op::Implies: {
      require_table_antecedent(t.lhs());
      return all_tables(enumerate_impl(t.lhs(), nullptr, limit), enumerate_impl(t.rhs(), grid, limit), limit);
    }
    default: {
      auto ls = enumerate_impl(t.lhs(), grid, limit);
      auto rs = enumerate_impl(t.rhs(), grid, limit);
      if (static_cast<double>(ls.size()) * static_cast<double>(rs.size()) > static_cast<double>(limit))
        throw ResourceError("bound space too large");
      std::vector<Bound> out;
      for (const Bound& l : ls)
        for (const Bound& r : rs) out.push_back(Bound::pair(l, r));
      return out;
    }
  }
}

}  // namespace

void check_bound(const Bound& b, const Type& t) {
  switch (t.op()) {
    case Op::Atom: case Op::True: case Op::False: case Op::Not: case Op::Embed:
      if (b.kind() != Bound::Kind::Unit) mismatch(b, t);
      return;
    case Op::Delay:
      if (b.kind() != Bound::Kind::Delay) mismatch(b, t);
      check_bound(b.inner(), t.operand());
      return;
    case Op::Or:
      if (b.kind() == Bound::Kind::InL) return check_bound(b.inner(), t.lhs());
      if (b.kind() == Bound::Kind::InR) return check_bound(b.inner(), t.rhs());
      mismatch(b, t);
    case Op::Implies: {
      if (b.kind() != Bound::Kind::Table) mismatch(b, t);
      require_table_antecedent(t.lhs());
      const auto keys = enumerate_bounds(t.lhs());
      if (b.entries().size() != keys.size()) mismatch(b, t);
      for (const Bound& k : keys) {
        const Bound* v = b.lookup(k);
        if (v == nullptr) mismatch(b, t);
        check_bound(*v, t.rhs());
      }
      return;
    }
    default:
      if (b.kind() != Bound::Kind::Pair) mismatch(b, t);
      check_bound(b.first(), t.lhs());
      check_bound(b.second(), t.rhs());
      return;
  }
}

std::vector<Bound> enumerate_bounds(const Type& t) { return enumerate_impl(t, nullptr, 1u << 20); }

std::vector<Bound> enumerate_bounds_over(const Type& t, const std::vector<ExtNat>& grid, std::size_t limit) {
  return enumerate_impl(t, &grid, limit);
}

Bound canonical_bound(const Type& t) {
  switch (t.op()) {
    case Op::Atom: case Op::True: case Op::False: case Op::Not: case Op::Embed:
      return Bound::unit();
    case Op::Delay: case Op::Or:
      throw BoundError("type has no canonical bound: " + to_string(t));
    case Op::Implies: {
      require_table_antecedent(t.lhs());
      Bound v = canonical_bound(t.rhs());
      std::vector<Bound::Entry> entries;
      for (const Bound& k : enumerate_bounds(t.lhs())) entries.emplace_back(k, v);
      return Bound::table(std::move(entries));
    }
    default:
      return Bound::pair(canonical_bound(t.lhs()), canonical_bound(t.rhs()));
  }
}

}  // namespace schedalg
