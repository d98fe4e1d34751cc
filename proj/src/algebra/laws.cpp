#include "schedalg/algebra/laws.hpp"

#include <functional>
#include <optional>
#include <stdexcept>

#include "schedalg/algebra/boolean.hpp"
#include "schedalg/algebra/combinators.hpp"
#include "schedalg/algebra/generators.hpp"
#include "schedalg/kernel/bounds.hpp"
#include "schedalg/kernel/classify.hpp"
#include "schedalg/kernel/errors.hpp"
#include "schedalg/kernel/syntax.hpp"
#include "schedalg/semantics/analysis.hpp"

namespace schedalg {

namespace {

const ExtNat kNeg = ExtNat::neg_inf();
const ExtNat kPos = ExtNat::pos_inf();

Interface pure_iface(const Type& t) { return Interface(canonical_bound(t), t); }

Type atom(const char* n) { return Type::atom(n); }

// One law run: shared oracle, operand generator and the report being filled.
class Harness {
 public:
  Harness(const LawOptions& o, LawReport& r)
      : opts(o), oracle(o.universe), gen(o.seed, o.universe.vars), report(r), vocab_(o.universe.vocabulary()) {}

  const LawOptions& opts;
  Oracle oracle;
  TypeGenerator gen;
  LawReport& report;

  bool failed() const { return !report.holds; }

  void fail(std::string what) {
    if (failed()) return;
    report.holds = false;
    report.counterexample = std::move(what);
  }

  std::string show(const Activation& a) const { return to_string(a, vocab_); }

  // lhs ⊆ [[rhs]]
  bool refine(const ActSet& lhs, const Interface& rhs, const std::string& instance) {
    ++report.checked;
    if (auto k = lhs.first_outside(oracle.denote(rhs))) {
      fail(instance + " at " + show(oracle.space().at(*k)));
      return false;
    }
    return true;
  }

  bool refine(const Interface& lhs, const Interface& rhs, const std::string& instance) {
    return refine(ActSet(oracle.denote(lhs)), rhs, instance);
  }

  bool equiv(const Interface& a, const Interface& b, const std::string& instance) {
    return refine(a, b, instance) && refine(b, a, instance);
  }

  bool equiv_pure(const Type& a, const Type& b) {
    return equiv(pure_iface(a), pure_iface(b), to_string(a) + " == " + to_string(b));
  }

  // Mutual type refinement over the delay grid.
  bool types_equiv(const Type& a, const Type& b) {
    ++report.checked;
    const std::string instance = to_string(a) + " == " + to_string(b);
    for (const auto& [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
      if (auto f = oracle.type_refinement_witness(x, y, opts.grid)) {
        std::string why = instance + ": " + to_string(Interface(*f, x)) + " has no counterpart";
        const auto gs = enumerate_bounds_over(y, opts.grid);
        for (std::size_t i = 0; i < gs.size() && i < 4; ++i)
          if (auto w = oracle.refinement_witness(Interface(*f, x), Interface(gs[i], y)))
            why += "; not below " + to_string(gs[i]) + " at " + show(*w);
        fail(why);
        return false;
      }
    }
    return true;
  }

  // A bound of t drawn from the grid, or nothing if the space is too large.
  std::optional<Interface> random_interface(const Type& t) {
    std::vector<Bound> bs;
    try {
      bs = enumerate_bounds_over(t, opts.grid, 1 << 12);
    } catch (const ResourceError&) {
      return std::nullopt;
    }
    return Interface(bs[gen.below(bs.size())], t);
  }

  Type persistent_pure(int depth) {
    for (int tries = 0; tries < 200; ++tries) {
      Type t = gen.pure(depth);
      if (is_persistent(t, opts.universe)) return t;
    }
    return Type::atom(gen.atom_name());
  }

  template <class F>
  void for_grid_pairs(F f) {
    for (ExtNat d1 : opts.grid)
      for (ExtNat d2 : opts.grid) {
        if (failed()) return;
        f(d1, d2);
      }
  }

  template <class F>
  void repeat(F f) {
    for (std::size_t n = 0; n < opts.instances && !failed(); ++n) f();
  }

 private:
  Vocabulary vocab_;
};

std::string d2s(ExtNat d) { return to_string(d); }

// ---- semantics ----

void downward_closed(Harness& h) {
  h.repeat([&] {
    auto i = h.random_interface(h.gen.elementary(3));
    if (!i) return;
    ++h.report.checked;
    const ActSet& s = h.oracle.denote(*i);
    const auto& sp = h.oracle.space();
    if (!s.test(sp.empty_index())) return h.fail(to_string(*i) + " rejects the empty activation");
    for (std::size_t k = 0; k < sp.size(); ++k) {
      if (!s.test(k)) continue;
      for (auto j : sp.subs(k))
        if (!s.test(j))
          return h.fail(to_string(*i) + " holds at " + h.show(sp.at(k)) + " but not at its sub-activation " +
                        h.show(sp.at(j)));
    }
  });
}

void delay_extremes(Harness& h) {
  const Interface f = pure_iface(Type::falsity());
  const Interface t = pure_iface(Type::truth());
  h.repeat([&] {
    const Type phi = h.gen.below(2) ? h.gen.pure(2) : h.gen.elementary(2);
    auto g = h.random_interface(phi);
    if (!g) return;
    const Type d = Type::delay(phi);
    h.equiv(Interface(Bound::delay(kNeg, g->bound()), d), f, "-inf : O(" + to_string(*g) + ") == false") &&
        h.equiv(Interface(Bound::delay(kPos, g->bound()), d), t, "+inf : O(" + to_string(*g) + ") == true");
  });
}

// Classical reading of a Boolean type with Boolean antecedents, written
// independently of the satisfaction clauses.
bool classical(const Type& b, Event e, const Vocabulary& v) {
  switch (b.op()) {
    case Op::True: return true;
    case Op::False: return false;
    case Op::Atom: {
      auto i = v.find(b.name());
      return i && (e >> *i & 1);
    }
    case Op::Not: return !classical(b.operand(), e, v);
    case Op::And: return classical(b.lhs(), e, v) && classical(b.rhs(), e, v);
    case Op::OTimes: return classical(b.lhs(), e, v) || classical(b.rhs(), e, v);
    case Op::Implies: return !classical(b.lhs(), e, v) || classical(b.rhs(), e, v);
    default: throw std::logic_error("not a Boolean type with Boolean antecedents");
  }
}

void boolean_eventwise(Harness& h) {
  const Vocabulary v = h.opts.universe.vocabulary();
  h.repeat([&] {
    const Type b = h.gen.boolean(3);
    ++h.report.checked;
    const ActSet& s = h.oracle.denote(pure_iface(b));
    const auto& sp = h.oracle.space();
    for (std::size_t k = 0; k < sp.size(); ++k) {
      bool all = true;
      for (Event e : sp.at(k).events) all = all && classical(b, e, v);
      if (all != s.test(k)) return h.fail(to_string(b) + " disagrees with its classical reading at " + h.show(sp.at(k)));
    }
  });
}

// ---- Heyting fragment over pure instantiations ----

void heyting(Harness& h, const std::function<std::pair<Type, Type>(Type, Type, Type)>& law) {
  h.repeat([&] {
    const Type p1 = h.gen.pure(2), p2 = h.gen.pure(2), psi = h.gen.pure(2);
    const auto [l, r] = law(p1, p2, psi);
    h.types_equiv(l, r);
  });
}

// ---- Boolean algebra ----

void boolean_law(Harness& h, const std::function<std::pair<Type, Type>(Type, Type)>& law) {
  h.repeat([&] {
    const auto [l, r] = law(h.gen.boolean(3), h.gen.boolean(3));
    h.equiv_pure(l, r);
  });
}

void boolean_simplify(Harness& h) {
  h.repeat([&] {
    const Type b = h.gen.boolean(4);
    const Type s = simplify_boolean(b);
    if (!is_boolean(s)) return h.fail(to_string(s) + " is not Boolean");
    h.equiv_pure(b, s);
  });
}

void pure_normalize(Harness& h) {
  h.repeat([&] {
    const Type z = h.gen.pure(3);
    const auto parts = normalize_pure(z);
    for (const Type& p : parts)
      if (!is_boolean(p)) return h.fail("summand " + to_string(p) + " of " + to_string(z) + " is not Boolean");
    h.equiv_pure(z, oplus_all(parts));
  });
}

// ---- neutral and dominant elements ----

void unit_law(Harness& h, const std::function<std::pair<Type, Type>(Type)>& law) {
  h.repeat([&] {
    const Type phi = h.gen.below(2) ? h.gen.pure(2) : h.gen.elementary(1);
    const auto [l, r] = law(phi);
    h.types_equiv(l, r);
  });
}

// ---- inequations ----

DelayImplication di(Type a, Type c, ExtNat d) { return {std::move(a), std::move(c), d}; }

void ineq(Harness& h, int which) {
  h.repeat([&] {
    const Type z1 = h.gen.pure(1), z2 = h.gen.pure(1), z3 = h.gen.pure(1);
    h.for_grid_pairs([&](ExtNat d1, ExtNat d2) {
      DelayImplication a, b, r;
      switch (which) {
        case 1: a = di(z1, z2, d1), b = di(z2, z3, d2), r = seq_compose(a, b); break;
        case 2: a = di(z3, z1, d1), b = di(z3, z2, d2), r = fork_and(a, b); break;
        case 3: a = di(z3, z1, d1), b = di(z3, z2, d2), r = fork_sum(a, b); break;
        case 4: a = di(z1, z3, d1), b = di(z2, z3, d2), r = join_sum(a, b); break;
        default: a = di(z1, z3, d1), b = di(z2, z3, d2), r = join_and(a, b); break;
      }
      ActSet lhs = h.oracle.denote(a.to_interface());
      lhs &= h.oracle.denote(b.to_interface());
      h.refine(lhs, r.to_interface(),
               to_string(a.to_interface()) + " & " + to_string(b.to_interface()) + " <= " + to_string(r.to_interface()));
    });
  });
}

// ---- tensor laws ----

void tensor_persistent(Harness& h) {
  h.repeat([&] {
    const Type z1 = h.persistent_pure(1), z2 = h.persistent_pure(1);
    h.for_grid_pairs([&](ExtNat d1, ExtNat d2) {
      const DelayedControl a{z1, d1}, b{z2, d2};
      const Interface lhs(Bound::pair(a.to_interface().bound(), b.to_interface().bound()),
                          Type::otimes(a.type(), b.type()));
      const Interface rhs = tensor_interleave(a, b).to_interface();
      h.refine(lhs, rhs, to_string(lhs) + " <= " + to_string(rhs));
    });
  });
}

void tensor_mutual(Harness& h) {
  h.repeat([&] {
    const Type z1 = h.persistent_pure(1), z2 = h.persistent_pure(1);
    h.for_grid_pairs([&](ExtNat d1, ExtNat d2) {
      const DelayedControl a{z1, d1}, b{z2, d2};
      const Interface l1 = sync_operand(a, z2), l2 = sync_operand(b, z1);
      const Interface lhs(Bound::pair(l1.bound(), l2.bound()), Type::otimes(l1.type(), l2.type()));
      const Interface rhs = tensor_sync(a, b).to_interface();
      h.refine(lhs, rhs, to_string(lhs) + " <= " + to_string(rhs));
    });
  });
}

// ---- distribution ----

void distrib(Harness& h, const std::function<std::pair<Type, Type>(Type, Type, Type)>& law) {
  h.repeat([&] {
    const auto [l, r] = law(h.gen.pure(2), h.gen.pure(2), h.gen.pure(2));
    h.types_equiv(l, r);
  });
}

void atom_and_otimes(Harness& h) {
  h.repeat([&] {
    const Type x = Type::atom(h.gen.atom_name());
    auto operand = [&] {
      return h.gen.below(2) ? h.gen.pure(2) : Type::conj(h.gen.pure(1), delayed(h.opts.grid[h.gen.below(h.opts.grid.size())], Type::falsity()));
    };
    const Type p1 = operand(), p2 = operand();
    h.types_equiv(Type::conj(x, Type::otimes(p1, p2)), Type::otimes(Type::conj(x, p1), Type::conj(x, p2)));
  });
}

// ---- O false laws of the flow example ----

Type cap(ExtNat d) { return delayed(d, Type::falsity()); }

void flow_meet(Harness& h) {
  h.for_grid_pairs([&](ExtNat d, ExtNat e) { h.equiv_pure(Type::conj(cap(d), cap(e)), cap(min(d, e))); });
}

void flow_tensor(Harness& h) {
  h.for_grid_pairs([&](ExtNat d, ExtNat e) { h.equiv_pure(Type::otimes(cap(d), cap(e)), cap(delay_sum(d, e))); });
}

void flow_absorb(Harness& h, bool clip) {
  h.repeat([&] {
    const Type p1 = h.gen.pure(1), p2 = h.gen.pure(1);
    h.for_grid_pairs([&](ExtNat d1, ExtNat d2) {
      for (ExtNat e : h.opts.grid) {
        const Type inner = Type::otimes(Type::conj(p1, cap(d1)), Type::conj(p2, cap(d2)));
        if (!clip && e >= delay_sum(d1, d2)) h.equiv_pure(Type::conj(inner, cap(e)), inner);
        if (clip && e <= min(d1, d2))
          h.equiv_pure(Type::conj(inner, cap(e)),
                       Type::conj(Type::otimes(Type::conj(p1, cap(e)), Type::conj(p2, cap(e))), cap(e)));
      }
    });
  });
}

// ---- laws that must fail ----

void neg_stable(Harness& h) {
  const Type a = atom(h.opts.universe.vars.front().c_str());
  h.equiv_pure(Type::oplus(a, Type::negation(a)), Type::truth());
}

void neg_static(Harness& h) {
  const Type a = atom(h.opts.universe.vars.front().c_str());
  h.types_equiv(Type::disj(a, Type::negation(a)), Type::truth());
}

void neg_and_otimes(Harness& h) {
  // X & (p1 (x) p2) == (X & p1) (x) (X & p2) with X = 3 : O false.
  const Type x = cap(3), p = cap(2);
  h.equiv_pure(Type::conj(x, Type::otimes(p, p)), Type::otimes(Type::conj(x, p), Type::conj(x, p)));
}

void neg_min_plus(Harness& h) {
  const ExtNat e = 3, d1 = 2, d2 = 2;
  const ExtNat l = min(e, d1 + d2), r = min(e, d1) + min(e, d2);
  ++h.report.checked;
  if (l < r)
    return h.fail("min(" + d2s(e) + ", " + d2s(d1) + " + " + d2s(d2) + ") = " + d2s(l) + " < " + d2s(r) + " = min(" +
                  d2s(e) + ", " + d2s(d1) + ") + min(" + d2s(e) + ", " + d2s(d2) + ")");
  h.equiv_pure(Type::conj(cap(e), Type::otimes(cap(d1), cap(d2))),
               Type::otimes(Type::conj(cap(e), cap(d1)), Type::conj(cap(e), cap(d2))));
}

void neg_fork_and_min(Harness& h) {
  const Type z = Type::truth(), a = atom(h.opts.universe.vars.front().c_str());
  const Type b = atom(h.opts.universe.vars.back().c_str());
  h.for_grid_pairs([&](ExtNat d1, ExtNat d2) {
    const DelayImplication x = di(z, a, d1), y = di(z, b, d2);
    DelayImplication r = fork_and(x, y);
    r.d = min(d1, d2);
    ActSet lhs = h.oracle.denote(x.to_interface());
    lhs &= h.oracle.denote(y.to_interface());
    h.refine(lhs, r.to_interface(),
             to_string(x.to_interface()) + " & " + to_string(y.to_interface()) + " <= " + to_string(r.to_interface()));
  });
}

void neg_seq_annihilator(Harness& h) {
  // Reading a -inf second step as annihilating the composite.
  const auto& v = h.opts.universe.vars;
  const Type z1 = atom(v[0].c_str()), z2 = atom(v[1 % v.size()].c_str()), z3 = atom(v[2 % v.size()].c_str());
  for (ExtNat d1 : h.opts.grid) {
    const DelayImplication a = di(z1, z2, d1), b = di(z2, z3, kNeg);
    ActSet lhs = h.oracle.denote(a.to_interface());
    lhs &= h.oracle.denote(b.to_interface());
    const Interface r = di(z1, z3, kNeg).to_interface();
    if (!h.refine(lhs, r, to_string(a.to_interface()) + " & " + to_string(b.to_interface()) + " <= " + to_string(r)))
      return;
  }
}

struct LawDef {
  const char* id;
  const char* statement;
  bool expected;
  std::function<void(Harness&)> run;
};

using P3 = std::pair<Type, Type>;

const std::vector<LawDef>& catalog() {
  const Type T = Type::truth(), F = Type::falsity();
  static const std::vector<LawDef> defs = {
      {"core.downward_closed", "satisfaction is inherited by sub-activations and holds on the empty activation", true, downward_closed},
      {"core.delay_extremes", "-inf : O phi == false and +inf : O phi == true", true, delay_extremes},
      {"boolean.eventwise", "a Boolean type holds iff every event satisfies it classically", true, boolean_eventwise},
      {"heyting.refl", "psi -> psi == true", true,
       [T](Harness& h) { heyting(h, [T](Type, Type, Type s) { return P3{Type::implies(s, s), T}; }); }},
      {"heyting.k", "phi1 -> (phi2 -> phi1) == true", true,
       [T](Harness& h) {
         heyting(h, [T](Type a, Type b, Type) { return P3{Type::implies(a, Type::implies(b, a)), T}; });
       }},
      {"heyting.curry", "(phi1 & phi2) -> psi == phi1 -> (phi2 -> psi)", true,
       [](Harness& h) {
         heyting(h, [](Type a, Type b, Type s) {
           return P3{Type::implies(Type::conj(a, b), s), Type::implies(a, Type::implies(b, s))};
         });
       }},
      {"heyting.mp", "(phi1 -> phi2) & phi1 == phi1 & phi2", true,
       [](Harness& h) {
         heyting(h, [](Type a, Type b, Type) { return P3{Type::conj(Type::implies(a, b), a), Type::conj(a, b)}; });
       }},
      {"heyting.or_ante", "(phi1 | phi2) -> psi == (phi1 -> psi) & (phi2 -> psi)", true,
       [](Harness& h) {
         heyting(h, [](Type a, Type b, Type s) {
           return P3{Type::implies(Type::disj(a, b), s), Type::conj(Type::implies(a, s), Type::implies(b, s))};
         });
       }},
      {"heyting.and_cons", "psi -> (phi1 & phi2) == (psi -> phi1) & (psi -> phi2)", true,
       [](Harness& h) {
         heyting(h, [](Type a, Type b, Type s) {
           return P3{Type::implies(s, Type::conj(a, b)), Type::conj(Type::implies(s, a), Type::implies(s, b))};
         });
       }},
      {"heyting.false_ante", "false -> psi == true", true,
       [T, F](Harness& h) { heyting(h, [T, F](Type, Type, Type s) { return P3{Type::implies(F, s), T}; }); }},
      {"heyting.true_cons", "psi -> true == true", true,
       [T](Harness& h) { heyting(h, [T](Type, Type, Type s) { return P3{Type::implies(s, T), T}; }); }},
      {"heyting.neg", "psi -> false == !psi", true,
       [F](Harness& h) {
         heyting(h, [F](Type, Type, Type s) { return P3{Type::implies(s, F), Type::negation(s)}; });
       }},
      {"heyting.true_ante", "true -> psi == psi", true,
       [T](Harness& h) { heyting(h, [T](Type, Type, Type s) { return P3{Type::implies(T, s), s}; }); }},
      {"boolean.double_neg", "!!b == b", true,
       [](Harness& h) {
         boolean_law(h, [](Type b, Type) { return P3{Type::negation(Type::negation(b)), b}; });
       }},
      {"boolean.excluded_middle", "!b (x) b == true", true,
       [T](Harness& h) {
         boolean_law(h, [T](Type b, Type) { return P3{Type::otimes(Type::negation(b), b), T}; });
       }},
      {"boolean.demorgan_and", "!(b1 & b2) == !b1 (x) !b2", true,
       [](Harness& h) {
         boolean_law(h, [](Type a, Type b) {
           return P3{Type::negation(Type::conj(a, b)), Type::otimes(Type::negation(a), Type::negation(b))};
         });
       }},
      {"boolean.demorgan_otimes", "!(b1 (x) b2) == !b1 & !b2", true,
       [](Harness& h) {
         boolean_law(h, [](Type a, Type b) {
           return P3{Type::negation(Type::otimes(a, b)), Type::conj(Type::negation(a), Type::negation(b))};
         });
       }},
      {"boolean.simplify", "the minimal sum of products of b is equivalent to b", true, boolean_simplify},
      {"pure.normalize", "a pure type is equivalent to the sum of its Boolean summands", true, pure_normalize},
      {"neutral.otimes_false", "false (x) phi == phi", true,
       [F](Harness& h) { unit_law(h, [F](Type p) { return P3{Type::otimes(F, p), p}; }); }},
      {"neutral.oplus_false", "false (+) phi == phi", true,
       [F](Harness& h) { unit_law(h, [F](Type p) { return P3{Type::oplus(F, p), p}; }); }},
      {"neutral.and_true", "true & phi == phi", true,
       [T](Harness& h) { unit_law(h, [T](Type p) { return P3{Type::conj(T, p), p}; }); }},
      {"neutral.and_false", "false & phi == false", true,
       [F](Harness& h) { unit_law(h, [F](Type p) { return P3{Type::conj(F, p), F}; }); }},
      {"neutral.oplus_true", "true (+) phi == true", true,
       [T](Harness& h) { unit_law(h, [T](Type p) { return P3{Type::oplus(T, p), T}; }); }},
      {"neutral.or_true", "true | phi == true", true,
       [T](Harness& h) { unit_law(h, [T](Type p) { return P3{Type::disj(T, p), T}; }); }},
      {"neutral.otimes_true", "true (x) phi == true", true,
       [T](Harness& h) { unit_law(h, [T](Type p) { return P3{Type::otimes(T, p), T}; }); }},
      {"neutral.not_true", "!true == false", true,
       [T, F](Harness& h) { h.equiv_pure(Type::negation(T), F); }},
      {"neutral.not_false", "!false == true", true,
       [T, F](Harness& h) { h.equiv_pure(Type::negation(F), T); }},
      {"ineq.seq", "[d1] : z1 -> O z2 & [d2] : z2 -> O z3 <= [d1 + d2] : z1 -> O z3", true,
       [](Harness& h) { ineq(h, 1); }},
      {"ineq.fork_and", "[d1] : z -> O z1 & [d2] : z -> O z2 <= [max(d1, d2)] : z -> O (z1 & z2)", true,
       [](Harness& h) { ineq(h, 2); }},
      {"ineq.fork_oplus", "[d1] : z -> O z1 & [d2] : z -> O z2 <= [min(d1, d2)] : z -> O (z1 (+) z2)", true,
       [](Harness& h) { ineq(h, 3); }},
      {"ineq.join_oplus", "[d1] : z1 -> O z & [d2] : z2 -> O z <= [max(d1, d2)] : (z1 (+) z2) -> O z", true,
       [](Harness& h) { ineq(h, 4); }},
      {"ineq.join_and", "[d1] : z1 -> O z & [d2] : z2 -> O z <= [min(d1, d2)] : (z1 & z2) -> O z", true,
       [](Harness& h) { ineq(h, 5); }},
      {"tensor.persistent", "d1 : O z1 (x) d2 : O z2 <= d1 + d2 : O (z1 (+) z2) for persistent z1, z2", true, tensor_persistent},
      {"tensor.mutual", "(d1 : O z1 & (z1 -> z2)) (x) (d2 : O z2 & (z2 -> z1)) <= d1 + d2 : O (z1 & z2)", true, tensor_mutual},
      {"distrib.otimes_oplus", "phi1 (x) (phi2 (+) phi3) == (phi1 (x) phi2) (+) (phi1 (x) phi3)", true,
       [](Harness& h) {
         distrib(h, [](Type a, Type b, Type c) {
           return P3{Type::otimes(a, Type::oplus(b, c)), Type::oplus(Type::otimes(a, b), Type::otimes(a, c))};
         });
       }},
      {"distrib.otimes_or", "phi1 (x) (phi2 | phi3) == (phi1 (x) phi2) | (phi1 (x) phi3)", true,
       [](Harness& h) {
         distrib(h, [](Type a, Type b, Type c) {
           return P3{Type::otimes(a, Type::disj(b, c)), Type::disj(Type::otimes(a, b), Type::otimes(a, c))};
         });
       }},
      {"distrib.and_oplus", "phi1 & (phi2 (+) phi3) == (phi1 & phi2) (+) (phi1 & phi3)", true,
       [](Harness& h) {
         distrib(h, [](Type a, Type b, Type c) {
           return P3{Type::conj(a, Type::oplus(b, c)), Type::oplus(Type::conj(a, b), Type::conj(a, c))};
         });
       }},
      {"distrib.oplus_and", "phi1 (+) (phi2 & phi3) == (phi1 (+) phi2) & (phi1 (+) phi3)", true,
       [](Harness& h) {
         distrib(h, [](Type a, Type b, Type c) {
           return P3{Type::oplus(a, Type::conj(b, c)), Type::conj(Type::oplus(a, b), Type::oplus(a, c))};
         });
       }},
      {"distrib.and_or", "phi1 & (phi2 | phi3) == (phi1 & phi2) | (phi1 & phi3)", true,
       [](Harness& h) {
         distrib(h, [](Type a, Type b, Type c) {
           return P3{Type::conj(a, Type::disj(b, c)), Type::disj(Type::conj(a, b), Type::conj(a, c))};
         });
       }},
      {"distrib.atom_and_otimes", "X & (phi1 (x) phi2) == (X & phi1) (x) (X & phi2) for atoms X", true,
       atom_and_otimes},
      {"flowlaws.meet", "d : O false & e : O false == min(d, e) : O false", true, flow_meet},
      {"flowlaws.tensor", "d : O false (x) e : O false == d + e : O false", true, flow_tensor},
      {"flowlaws.absorb", "((p1 & d1 : O false) (x) (p2 & d2 : O false)) & e : O false drops e when e >= d1 + d2",
       true, [](Harness& h) { flow_absorb(h, false); }},
      {"flowlaws.clip", "((p1 & d1 : O false) (x) (p2 & d2 : O false)) & e : O false clips both sides when e <= min(d1, d2)",
       true, [](Harness& h) { flow_absorb(h, true); }},
      {"neg.stable", "A (+) !A == true does not hold (not every signal is stable)", false, neg_stable},
      {"neg.static", "A | !A == true does not hold (not every signal is static)", false, neg_static},
      {"neg.and_otimes", "& does not distribute over (x) for a non-atomic left operand", false, neg_and_otimes},
      {"neg.min_plus", "min(e, d1 + d2) < min(e, d1) + min(e, d2) at e = 3, d1 = d2 = 2", false, neg_min_plus},
      {"neg.fork_and_min", "forking into a conjunction with min instead of max is unsound", false, neg_fork_and_min},
      {"neg.seq_annihilator", "composing with a -inf second step does not yield -inf", false, neg_seq_annihilator},
  };
  return defs;
}

}  // namespace

const std::vector<std::string>& law_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& d : catalog()) v.push_back(d.id);
    return v;
  }();
  return ids;
}

std::vector<std::string> select_laws(const std::string& pattern) {
  std::vector<std::string> out;
  const bool family = pattern.size() >= 2 && pattern.ends_with(".*");
  const std::string prefix = family ? pattern.substr(0, pattern.size() - 1) : "";
  for (const auto& id : law_ids())
    if (pattern == "all" || id == pattern || (family && id.starts_with(prefix))) out.push_back(id);
  if (out.empty()) throw std::invalid_argument("unknown law '" + pattern + "'");
  return out;
}

LawReport law_check(const std::string& id, const LawOptions& opts) {
  for (const auto& d : catalog()) {
    if (id != d.id) continue;
    LawReport r;
    r.id = d.id;
    r.statement = d.statement;
    r.expected = d.expected;
    Harness h(opts, r);
    d.run(h);
    return r;
  }
  throw std::invalid_argument("unknown law '" + id + "'");
}

}  // namespace schedalg
