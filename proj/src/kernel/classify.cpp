#include "schedalg/kernel/classify.hpp"

#include "schedalg/kernel/bounds.hpp"
#include "schedalg/kernel/errors.hpp"
#include "schedalg/kernel/syntax.hpp"

namespace schedalg {

bool is_boolean(const Type& t) {
  switch (t.op()) {
    case Op::Atom: case Op::True: case Op::False: return true;
    case Op::Not: return is_boolean(t.operand());
    case Op::And: case Op::OTimes: return is_boolean(t.lhs()) && is_boolean(t.rhs());
    case Op::Implies: return is_delay_free(t.lhs()) && is_boolean(t.rhs());
    default: return false;
  }
}

bool is_pure(const Type& t) {
  switch (t.op()) {
    case Op::Atom: case Op::True: case Op::False: case Op::Not: case Op::Embed: return true;
    case Op::And: case Op::OPlus: case Op::OTimes: return is_pure(t.lhs()) && is_pure(t.rhs());
    case Op::Implies: return is_delay_free(t.lhs()) && is_pure(t.rhs());
    default: return false;
  }
}

bool is_elementary(const Type& t) {
  if (is_pure(t)) return true;
  switch (t.op()) {
    case Op::Delay: return is_pure(t.operand());
    case Op::And: case Op::OPlus: case Op::OTimes: return is_elementary(t.lhs()) && is_elementary(t.rhs());
    case Op::Implies: return is_delay_free(t.lhs()) && is_elementary(t.rhs());
    default: return false;
  }
}

TypeClass classify(const Type& t) {
  if (is_boolean(t)) return TypeClass::Boolean;
  if (is_pure(t)) return TypeClass::Pure;
  if (is_elementary(t)) return TypeClass::Elementary;
  return TypeClass::General;
}

const char* to_string(TypeClass c) {
  switch (c) {
    case TypeClass::Boolean: return "boolean";
    case TypeClass::Pure: return "pure";
    case TypeClass::Elementary: return "elementary";
    case TypeClass::General: return "general";
  }
  return "?";
}

namespace {

std::size_t slot_count(const Type& t) {
  if (is_pure(t)) return 0;
  switch (t.op()) {
    case Op::Delay: return 1;
    case Op::Implies: return enumerate_bounds(t.lhs()).size() * slot_count(t.rhs());
    default: return slot_count(t.lhs()) + slot_count(t.rhs());
  }
}

void collect_slots(const Bound& b, const Type& t, std::vector<ExtNat>& out) {
  if (is_pure(t)) return;
  switch (t.op()) {
    case Op::Delay: out.push_back(b.delay_value()); return;
    case Op::Implies:
      for (const Bound& k : enumerate_bounds(t.lhs())) collect_slots(*b.lookup(k), t.rhs(), out);
      return;
    default:
      collect_slots(b.first(), t.lhs(), out);
      collect_slots(b.second(), t.rhs(), out);
  }
}

Bound build_from_slots(const Type& t, const ExtNat*& it) {
  if (is_pure(t)) return canonical_bound(t);
  switch (t.op()) {
    case Op::Delay: return Bound::delay(*it++, canonical_bound(t.operand()));
    case Op::Implies: {
      std::vector<Bound::Entry> entries;
      for (const Bound& k : enumerate_bounds(t.lhs())) entries.emplace_back(k, build_from_slots(t.rhs(), it));
      return Bound::table(std::move(entries));
    }
    default: {
      Bound l = build_from_slots(t.lhs(), it);
      Bound r = build_from_slots(t.rhs(), it);
      return Bound::pair(std::move(l), std::move(r));
    }
  }
}

bool top_level_table(const Type& t) { return t.op() == Op::Implies && !is_pure(t); }

void require_elementary(const Type& t) {
  if (!is_elementary(t)) throw ClassError("not an elementary type: " + to_string(t));
}

}  // namespace

BoundShape bound_space_shape(const Type& t) {
  BoundShape s;
  if (is_pure(t)) return s;
  if (!is_elementary(t)) {
    bool finite = true;
    try {
      enumerate_bounds(t);
    } catch (const std::exception&) {
      finite = false;
    }
    s.kind = finite ? BoundShape::Kind::Finite : BoundShape::Kind::Infinite;
    return s;
  }
  s.kind = BoundShape::Kind::Matrix;
  if (top_level_table(t)) {
    s.column_keys = enumerate_bounds(t.lhs());
    s.cols = s.column_keys.size();
    s.rows = slot_count(t.rhs());
  } else {
    s.cols = 1;
    s.rows = slot_count(t);
  }
  return s;
}

std::vector<ExtNat> encode_bound(const Bound& b, const Type& t) {
  require_elementary(t);
  check_bound(b, t);
  if (!top_level_table(t)) {
    std::vector<ExtNat> out;
    collect_slots(b, t, out);
    return out;
  }
  const auto keys = enumerate_bounds(t.lhs());
  std::vector<std::vector<ExtNat>> columns;
  for (const Bound& k : keys) {
    columns.emplace_back();
    collect_slots(*b.lookup(k), t.rhs(), columns.back());
  }
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  std::vector<ExtNat> out;
  out.reserve(rows * columns.size());
  for (std::size_t r = 0; r < rows; ++r)
    for (const auto& col : columns) out.push_back(col[r]);
  return out;
}

Bound decode_bound(const std::vector<ExtNat>& entries, const Type& t) {
  require_elementary(t);
  const BoundShape s = bound_space_shape(t);
  if (entries.size() != s.rows * s.cols)
    throw BoundError("matrix has " + std::to_string(entries.size()) + " entries, type " + to_string(t) +
                     " needs " + std::to_string(s.rows) + "x" + std::to_string(s.cols));
  if (s.kind == BoundShape::Kind::Singleton) return canonical_bound(t);
  if (!top_level_table(t)) {
    const ExtNat* it = entries.data();
    return build_from_slots(t, it);
  }
  std::vector<Bound::Entry> table;
  for (std::size_t c = 0; c < s.cols; ++c) {
    std::vector<ExtNat> column;
    for (std::size_t r = 0; r < s.rows; ++r) column.push_back(entries[r * s.cols + c]);
    const ExtNat* it = column.data();
    table.emplace_back(s.column_keys[c], build_from_slots(t.rhs(), it));
  }
  return Bound::table(std::move(table));
}

}  // namespace schedalg
