#include "schedalg/algebra/boolean.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <tuple>

#include "schedalg/kernel/bounds.hpp"
#include "schedalg/kernel/classify.hpp"
#include "schedalg/kernel/errors.hpp"
#include "schedalg/kernel/syntax.hpp"
#include "schedalg/semantics/satisfaction.hpp"

namespace schedalg {

namespace {

void collect_atoms(const Type& t, std::set<std::string>& out) {
  switch (t.op()) {
    case Op::Atom: out.insert(t.name()); return;
    case Op::True:
    case Op::False: return;
    case Op::Not:
    case Op::Delay: collect_atoms(t.operand(), out); return;
    case Op::Embed: collect_atoms(t.embedded().type(), out); return;
    default:
      collect_atoms(t.lhs(), out);
      collect_atoms(t.rhs(), out);
  }
}

// An implicant fixes the atoms outside `free`; `value` holds their bits.
struct Implicant {
  std::uint32_t value;
  std::uint32_t free;
  bool operator<(const Implicant& o) const { return std::tie(free, value) < std::tie(o.free, o.value); }
  bool operator==(const Implicant& o) const = default;
  bool covers(std::uint32_t m) const { return (m & ~free) == value; }
};

std::vector<Implicant> prime_implicants(const std::vector<std::uint32_t>& minterms) {
  std::set<Implicant> current;
  for (auto m : minterms) current.insert({m, 0});
  std::vector<Implicant> primes;
  while (!current.empty()) {
    std::set<Implicant> next;
    std::set<Implicant> merged;
    for (auto a = current.begin(); a != current.end(); ++a)
      for (auto b = std::next(a); b != current.end(); ++b) {
        if (a->free != b->free) continue;
        const std::uint32_t diff = a->value ^ b->value;
        if (std::popcount(diff) != 1) continue;
        next.insert({a->value & ~diff, a->free | diff});
        merged.insert(*a);
        merged.insert(*b);
      }
    for (const auto& i : current)
      if (!merged.count(i)) primes.push_back(i);
    current = std::move(next);
  }
  return primes;
}

// Essential primes first, then greedily the prime covering most remaining minterms.
std::vector<Implicant> select_cover(const std::vector<Implicant>& primes, std::vector<std::uint32_t> todo) {
  std::vector<Implicant> chosen;
  auto take = [&](const Implicant& p) {
    chosen.push_back(p);
    std::erase_if(todo, [&](std::uint32_t m) { return p.covers(m); });
  };
  for (std::uint32_t m : std::vector<std::uint32_t>(todo)) {
    const Implicant* only = nullptr;
    int n = 0;
    for (const auto& p : primes)
      if (p.covers(m)) {
        only = &p;
        ++n;
      }
    if (n == 1 && std::find(chosen.begin(), chosen.end(), *only) == chosen.end() &&
        std::find(todo.begin(), todo.end(), m) != todo.end())
      take(*only);
  }
  while (!todo.empty()) {
    const Implicant* best = nullptr;
    std::size_t best_n = 0;
    for (const auto& p : primes) {
      const auto n = static_cast<std::size_t>(std::count_if(todo.begin(), todo.end(), [&](auto m) { return p.covers(m); }));
      if (n > best_n) {
        best = &p;
        best_n = n;
      }
    }
    take(*best);
  }
  return chosen;
}

// Literal order per atom: positive, negative, absent.
std::vector<int> literal_key(const Implicant& p, std::size_t n) {
  std::vector<int> k(n);
  for (std::size_t i = 0; i < n; ++i) k[i] = (p.free >> i & 1) ? 2 : (p.value >> i & 1) ? 0 : 1;
  return k;
}

Type product(const Implicant& p, const std::vector<std::string>& atoms) {
  std::vector<Type> lits;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (p.free >> i & 1) continue;
    const Type a = Type::atom(atoms[i]);
    lits.push_back((p.value >> i & 1) ? a : Type::negation(a));
  }
  return conj_all(lits);
}

std::vector<Type> cross(const std::vector<Type>& xs, const std::vector<Type>& ys, Type (*op)(Type, Type)) {
  std::vector<Type> out;
  for (const Type& x : xs)
    for (const Type& y : ys) out.push_back(op(x, y));
  return out;
}

// Boolean alternatives of an antecedent: phi is equivalent to the sum or
// external choice of the returned types for the purpose of phi -> zeta.
std::vector<Type> antecedent_cases(const Type& phi) {
  if (phi.op() == Op::Or) {
    auto l = antecedent_cases(phi.lhs());
    auto r = antecedent_cases(phi.rhs());
    l.insert(l.end(), r.begin(), r.end());
    return l;
  }
  if (is_pure(phi)) return normalize_pure(phi);
  throw UnsupportedType("cannot normalise an implication with antecedent " + to_string(phi));
}

}  // namespace

std::vector<std::string> atoms_of(const Type& t) {
  std::set<std::string> s;
  collect_atoms(t, s);
  return {s.begin(), s.end()};
}

TruthTable truth_table(const Type& beta) {
  if (!is_boolean(beta)) throw ClassError("not a Boolean type: " + to_string(beta));
  TruthTable tt{atoms_of(beta), {}};
  if (tt.atoms.size() > 16) throw ResourceError("truth table over more than 16 atoms");
  const Vocabulary v(tt.atoms);
  const Interface i(canonical_bound(beta), beta);
  const std::size_t n = std::size_t{1} << tt.atoms.size();
  tt.rows.resize(n);
  // Events are read as length-1 activations.
  for (std::size_t m = 0; m < n; ++m) tt.rows[m] = satisfies(Activation{{Event(m)}}, i, v);
  return tt;
}

Type simplify_boolean(const Type& beta) {
  const TruthTable tt = truth_table(beta);
  std::vector<std::uint32_t> minterms;
  for (std::uint32_t m = 0; m < tt.rows.size(); ++m)
    if (tt.rows[m]) minterms.push_back(m);
  if (minterms.empty()) return Type::falsity();
  if (minterms.size() == tt.rows.size()) return Type::truth();
  auto cover = select_cover(prime_implicants(minterms), minterms);
  const std::size_t n = tt.atoms.size();
  std::sort(cover.begin(), cover.end(),
            [n](const Implicant& a, const Implicant& b) { return literal_key(a, n) < literal_key(b, n); });
  std::vector<Type> terms;
  for (const auto& p : cover) terms.push_back(product(p, tt.atoms));
  return otimes_all(terms);
}

std::vector<Type> normalize_pure(const Type& zeta) {
  if (!is_pure(zeta)) throw ClassError("not a pure type: " + to_string(zeta));
  if (is_boolean(zeta)) return {zeta};
  switch (zeta.op()) {
    case Op::OPlus: {
      auto l = normalize_pure(zeta.lhs());
      auto r = normalize_pure(zeta.rhs());
      l.insert(l.end(), r.begin(), r.end());
      return l;
    }
    case Op::And: return cross(normalize_pure(zeta.lhs()), normalize_pure(zeta.rhs()), &Type::conj);
    case Op::OTimes: return cross(normalize_pure(zeta.lhs()), normalize_pure(zeta.rhs()), &Type::otimes);
    case Op::Not: {
      // !phi = phi -> false; every Boolean case of phi must be refuted.
      std::vector<Type> negs;
      for (const Type& a : antecedent_cases(zeta.operand())) negs.push_back(Type::negation(a));
      return {conj_all(negs)};
    }
    case Op::Implies: {
      // The sub-activations satisfying a Boolean case form one maximal run,
      // so a -> (b1 (+) b2) is (a -> b1) (+) (a -> b2); several cases conjoin.
      const auto cons = normalize_pure(zeta.rhs());
      std::vector<Type> acc;
      for (const Type& a : antecedent_cases(zeta.lhs())) {
        std::vector<Type> sums;
        for (const Type& b : cons) sums.push_back(Type::implies(a, b));
        acc = acc.empty() ? sums : cross(acc, sums, &Type::conj);
      }
      return acc;
    }
    default:
      throw UnsupportedType("cannot normalise " + to_string(zeta));
  }
}

}  // namespace schedalg
