#include "schedalg/kernel/type.hpp"

#include <stdexcept>

#include "schedalg/kernel/bounds.hpp"

namespace schedalg {

struct Type::Node {
  Op op;
  std::string name;
  Type a;
  Type b;
  std::shared_ptr<const Interface> iface;

  explicit Node(Op o) : op(o), a(nullptr), b(nullptr) {}
};

Type::Type() : node_(nullptr) {
  static const Type t = truth();
  node_ = t.node_;
}

Type Type::atom(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  auto n = std::make_shared<Node>(Op::Atom);
  n->name = std::move(name);
  return Type(std::move(n));
}

Type Type::truth() {
  static const auto n = std::make_shared<const Node>(Op::True);
  return Type(n);
}

Type Type::falsity() {
  static const auto n = std::make_shared<const Node>(Op::False);
  return Type(n);
}

Type Type::negation(Type t) {
  auto n = std::make_shared<Node>(Op::Not);
  n->a = std::move(t);
  return Type(std::move(n));
}

Type Type::delay(Type t) {
  auto n = std::make_shared<Node>(Op::Delay);
  n->a = std::move(t);
  return Type(std::move(n));
}

namespace {

template <class NodeT, class TypeT>
std::shared_ptr<const NodeT> binary(Op op, TypeT a, TypeT b) {
  auto n = std::make_shared<NodeT>(op);
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

}  // namespace

Type Type::conj(Type a, Type b) { return Type(binary<Node>(Op::And, std::move(a), std::move(b))); }
Type Type::disj(Type a, Type b) { return Type(binary<Node>(Op::Or, std::move(a), std::move(b))); }
Type Type::oplus(Type a, Type b) { return Type(binary<Node>(Op::OPlus, std::move(a), std::move(b))); }
Type Type::otimes(Type a, Type b) { return Type(binary<Node>(Op::OTimes, std::move(a), std::move(b))); }
Type Type::implies(Type a, Type b) { return Type(binary<Node>(Op::Implies, std::move(a), std::move(b))); }

Type Type::embed(Interface i) {
  auto n = std::make_shared<Node>(Op::Embed);
  n->iface = std::make_shared<const Interface>(std::move(i));
  return Type(std::move(n));
}

Op Type::op() const { return node_->op; }

bool Type::is_binary() const {
  switch (op()) {
    case Op::And: case Op::Or: case Op::OPlus: case Op::OTimes: case Op::Implies: return true;
    default: return false;
  }
}

const std::string& Type::name() const {
  if (op() != Op::Atom) throw std::logic_error("Type::name on non-atom");
  return node_->name;
}

const Type& Type::operand() const {
  if (op() != Op::Not && op() != Op::Delay) throw std::logic_error("Type::operand on non-unary");
  return node_->a;
}

const Type& Type::lhs() const {
  if (!is_binary()) throw std::logic_error("Type::lhs on non-binary");
  return node_->a;
}

const Type& Type::rhs() const {
  if (!is_binary()) throw std::logic_error("Type::rhs on non-binary");
  return node_->b;
}

const Interface& Type::embedded() const {
  if (op() != Op::Embed) throw std::logic_error("Type::embedded on non-embed");
  return *node_->iface;
}

bool Type::operator==(const Type& o) const {
  if (node_ == o.node_) return true;
  if (op() != o.op()) return false;
  switch (op()) {
    case Op::Atom: return name() == o.name();
    case Op::True: case Op::False: return true;
    case Op::Not: case Op::Delay: return operand() == o.operand();
    case Op::Embed: return embedded() == o.embedded();
    default: return lhs() == o.lhs() && rhs() == o.rhs();
  }
}

// ---------------------------------------------------------------------------

struct Bound::Node {
  Kind kind;
  ExtNat d;
  Bound a;
  Bound b;
  std::vector<Entry> entries;

  explicit Node(Kind k) : kind(k), a(nullptr), b(nullptr) {}
};

Bound::Bound() : node_(nullptr) {
  static const auto n = std::make_shared<const Node>(Kind::Unit);
  node_ = n;
}

Bound Bound::unit() { return Bound(); }

Bound Bound::pair(Bound a, Bound b) {
  auto n = std::make_shared<Node>(Kind::Pair);
  n->a = std::move(a);
  n->b = std::move(b);
  return Bound(std::move(n));
}

Bound Bound::inl(Bound b) {
  auto n = std::make_shared<Node>(Kind::InL);
  n->a = std::move(b);
  return Bound(std::move(n));
}

Bound Bound::inr(Bound b) {
  auto n = std::make_shared<Node>(Kind::InR);
  n->a = std::move(b);
  return Bound(std::move(n));
}

Bound Bound::delay(ExtNat d, Bound b) {
  auto n = std::make_shared<Node>(Kind::Delay);
  n->d = d;
  n->a = std::move(b);
  return Bound(std::move(n));
}

Bound Bound::table(std::vector<Entry> entries) {
  auto n = std::make_shared<Node>(Kind::Table);
  n->entries = std::move(entries);
  return Bound(std::move(n));
}

Bound::Kind Bound::kind() const { return node_->kind; }

const Bound& Bound::first() const {
  if (kind() != Kind::Pair) throw std::logic_error("Bound::first on non-pair");
  return node_->a;
}

const Bound& Bound::second() const {
  if (kind() != Kind::Pair) throw std::logic_error("Bound::second on non-pair");
  return node_->b;
}

const Bound& Bound::inner() const {
  if (kind() != Kind::InL && kind() != Kind::InR && kind() != Kind::Delay)
    throw std::logic_error("Bound::inner on wrong kind");
  return node_->a;
}

ExtNat Bound::delay_value() const {
  if (kind() != Kind::Delay) throw std::logic_error("Bound::delay_value on non-delay");
  return node_->d;
}

const std::vector<Bound::Entry>& Bound::entries() const {
  if (kind() != Kind::Table) throw std::logic_error("Bound::entries on non-table");
  return node_->entries;
}

const Bound* Bound::lookup(const Bound& key) const {
  for (const auto& [k, v] : entries())
    if (k == key) return &v;
  return nullptr;
}

bool Bound::operator==(const Bound& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case Kind::Unit: return true;
    case Kind::Pair: return first() == o.first() && second() == o.second();
    case Kind::InL: case Kind::InR: return inner() == o.inner();
    case Kind::Delay: return delay_value() == o.delay_value() && inner() == o.inner();
    case Kind::Table: {
      // Tables are finite functions: key order is irrelevant.
      if (entries().size() != o.entries().size()) return false;
      for (const auto& [k, v] : entries()) {
        const Bound* w = o.lookup(k);
        if (w == nullptr || !(*w == v)) return false;
      }
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------

Interface::Interface(Bound bound, Type type) : bound_(std::move(bound)), type_(std::move(type)) {
  check_bound(bound_, type_);
}

namespace {

template <class F>
Type fold_right(const std::vector<Type>& ts, Type empty, F make) {
  if (ts.empty()) return empty;
  Type acc = ts.back();
  for (std::size_t i = ts.size() - 1; i-- > 0;) acc = make(ts[i], acc);
  return acc;
}

}  // namespace

Type conj_all(const std::vector<Type>& ts) { return fold_right(ts, Type::truth(), Type::conj); }
Type disj_all(const std::vector<Type>& ts) { return fold_right(ts, Type::falsity(), Type::disj); }
Type oplus_all(const std::vector<Type>& ts) { return fold_right(ts, Type::falsity(), Type::oplus); }
Type otimes_all(const std::vector<Type>& ts) { return fold_right(ts, Type::falsity(), Type::otimes); }

Type delayed(ExtNat d, const Type& phi) {
  Type t = Type::delay(phi);
  return Type::embed(Interface(Bound::delay(d, canonical_bound(phi)), t));
}

}  // namespace schedalg
