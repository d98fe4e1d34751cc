#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "schedalg/kernel/extnat.hpp"

namespace schedalg {

class Interface;

enum class Op : std::uint8_t { Atom, True, False, Not, Delay, And, Or, OPlus, OTimes, Implies, Embed };

// Immutable scheduling type. Copies share structure.
class Type {
 public:
  Type();  // true

  static Type atom(std::string name);
  static Type truth();
  static Type falsity();
  static Type negation(Type t);
  static Type delay(Type t);
  static Type conj(Type a, Type b);
  static Type disj(Type a, Type b);
  static Type oplus(Type a, Type b);
  static Type otimes(Type a, Type b);
  static Type implies(Type a, Type b);
  static Type embed(Interface i);

  Op op() const;
  bool is_binary() const;
  const std::string& name() const;       // Atom only
  const Type& operand() const;           // Not, Delay
  const Type& lhs() const;               // binary
  const Type& rhs() const;               // binary
  const Interface& embedded() const;     // Embed only

  // Structural equality.
  bool operator==(const Type& o) const;
  bool operator!=(const Type& o) const { return !(*this == o); }

  // Address of the shared node; stable for the lifetime of any copy.
  const void* identity() const { return node_.get(); }

 private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Element of a bound space. Mirrors the structure of its type.
class Bound {
 public:
  enum class Kind : std::uint8_t { Unit, Pair, InL, InR, Delay, Table };
  using Entry = std::pair<Bound, Bound>;

  Bound();  // unit

  static Bound unit();
  static Bound pair(Bound a, Bound b);
  static Bound inl(Bound b);
  static Bound inr(Bound b);
  static Bound delay(ExtNat d, Bound b);
  static Bound table(std::vector<Entry> entries);

  Kind kind() const;
  const Bound& first() const;   // Pair
  const Bound& second() const;  // Pair
  const Bound& inner() const;   // InL, InR, Delay
  ExtNat delay_value() const;   // Delay
  const std::vector<Entry>& entries() const;  // Table

  // Table lookup by structural key equality; nullptr if absent.
  const Bound* lookup(const Bound& key) const;

  bool operator==(const Bound& o) const;
  bool operator!=(const Bound& o) const { return !(*this == o); }

  const void* identity() const { return node_.get(); }

 private:
  struct Node;
  explicit Bound(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// f : phi. The constructor validates shape compatibility and throws BoundError.
class Interface {
 public:
  Interface(Bound bound, Type type);

  const Bound& bound() const { return bound_; }
  const Type& type() const { return type_; }

  bool operator==(const Interface& o) const { return bound_ == o.bound_ && type_ == o.type_; }

 private:
  Bound bound_;
  Type type_;
};

// Convenience builders used all over the analyses.
Type conj_all(const std::vector<Type>& ts);    // right-nested, empty -> true
Type disj_all(const std::vector<Type>& ts);    // right-nested, empty -> false
Type oplus_all(const std::vector<Type>& ts);   // right-nested, empty -> false
Type otimes_all(const std::vector<Type>& ts);  // right-nested, empty -> false

// d : O phi for pure phi, as an embedded pure type.
Type delayed(ExtNat d, const Type& phi);

}  // namespace schedalg
