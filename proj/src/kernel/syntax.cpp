#include "schedalg/kernel/syntax.hpp"

#include <cctype>

#include "schedalg/kernel/bounds.hpp"
#include "schedalg/kernel/classify.hpp"
#include "schedalg/kernel/errors.hpp"

namespace schedalg {

namespace {

enum class Tok {
  End, Ident, Nat, NegInf, PosInf, Not, Delay, And, Tensor, Or, Plus, Arrow,
  LParen, RParen, LAngle, RAngle, Colon, Comma, Semi, LBracket, RBracket, LBrace, RBrace, MapsTo,
  True, False, Inl, Inr,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.'; }

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts = [&](std::string_view w) { return s.substr(i, w.size()) == w; };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t at = i;
    auto push = [&](Tok k, std::size_t len) {
      out.push_back({k, std::string(s.substr(at, len)), at});
      i += len;
    };
    if (starts("(+)")) push(Tok::Plus, 3);
    else if (starts("(x)")) push(Tok::Tensor, 3);
    else if (starts("->")) push(Tok::Arrow, 2);
    else if (starts("=>")) push(Tok::MapsTo, 2);
    else if (starts("-inf")) push(Tok::NegInf, 4);
    else if (starts("+inf")) push(Tok::PosInf, 4);
    else if (c == '!') push(Tok::Not, 1);
    else if (c == '&') push(Tok::And, 1);
    else if (c == '|') push(Tok::Or, 1);
    else if (c == '(') push(Tok::LParen, 1);
    else if (c == ')') push(Tok::RParen, 1);
    else if (c == '<') push(Tok::LAngle, 1);
    else if (c == '>') push(Tok::RAngle, 1);
    else if (c == ':') push(Tok::Colon, 1);
    else if (c == ',') push(Tok::Comma, 1);
    else if (c == ';') push(Tok::Semi, 1);
    else if (c == '[') push(Tok::LBracket, 1);
    else if (c == ']') push(Tok::RBracket, 1);
    else if (c == '{') push(Tok::LBrace, 1);
    else if (c == '}') push(Tok::RBrace, 1);
    else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      push(Tok::Nat, j - i);
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      const std::string_view w = s.substr(i, j - i);
      Tok k = Tok::Ident;
      if (w == "O") k = Tok::Delay;
      else if (w == "true") k = Tok::True;
      else if (w == "false") k = Tok::False;
      else if (w == "inl") k = Tok::Inl;
      else if (w == "inr") k = Tok::Inr;
      else if (w == "inf") k = Tok::PosInf;
      push(k, j - i);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", at);
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

// Untyped bound syntax, elaborated once the type is known.
struct RawBound {
  enum class Kind { Num, Pair, Inl, Inr, Matrix, Table } kind = Kind::Num;
  ExtNat num;
  std::vector<RawBound> kids;                      // Pair (2), Inl/Inr (1), Table (2 per entry)
  std::vector<std::vector<ExtNat>> rows;           // Matrix
  std::size_t pos = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Type phi() {
    Type lhs = term();
    if (peek() == Tok::Arrow) {
      next();
      return Type::implies(std::move(lhs), phi());
    }
    return lhs;
  }

  RawBound bound() {
    const std::size_t at = pos();
    RawBound b;
    b.pos = at;
    switch (peek()) {
      case Tok::Nat: case Tok::NegInf: case Tok::PosInf:
        b.kind = RawBound::Kind::Num;
        b.num = extnat();
        return b;
      case Tok::LParen:
        next();
        b.kind = RawBound::Kind::Pair;
        b.kids.push_back(bound());
        expect(Tok::Comma, "','");
        b.kids.push_back(bound());
        expect(Tok::RParen, "')'");
        return b;
      case Tok::Inl: case Tok::Inr:
        b.kind = next().kind == Tok::Inl ? RawBound::Kind::Inl : RawBound::Kind::Inr;
        b.kids.push_back(bound());
        return b;
      case Tok::LBracket:
        next();
        b.kind = RawBound::Kind::Matrix;
        b.rows = matrix_body();
        return b;
      case Tok::LBrace:
        next();
        b.kind = RawBound::Kind::Table;
        while (true) {
          b.kids.push_back(bound());
          expect(Tok::MapsTo, "'=>'");
          b.kids.push_back(bound());
          if (peek() == Tok::Comma) {
            next();
            continue;
          }
          expect(Tok::RBrace, "'}'");
          return b;
        }
      default:
        throw ParseError("expected a bound", at);
    }
  }

  // After '['.
  std::vector<std::vector<ExtNat>> matrix_body() {
    std::vector<std::vector<ExtNat>> rows;
    if (peek() == Tok::RBracket) {
      next();
      return rows;
    }
    rows.emplace_back();
    while (true) {
      rows.back().push_back(extnat());
      if (peek() == Tok::Comma) {
        next();
      } else if (peek() == Tok::Semi) {
        next();
        rows.emplace_back();
      } else {
        expect(Tok::RBracket, "']'");
        break;
      }
    }
    for (const auto& r : rows)
      if (r.size() != rows.front().size()) throw ParseError("ragged matrix rows", pos());
    return rows;
  }

  void expect(Tok k, const char* what) {
    if (peek() != k) throw ParseError(std::string("expected ") + what, pos());
    next();
  }
  void expect_end() {
    if (peek() != Tok::End) throw ParseError("unexpected trailing input '" + toks_[i_].text + "'", pos());
  }
  Tok peek() const { return toks_[i_].kind; }
  std::size_t pos() const { return toks_[i_].pos; }

 private:
  const Token& next() { return toks_[i_++]; }

  Type term() {
    Type lhs = summ();
    if (peek() == Tok::Or || peek() == Tok::Plus) {
      const Tok op = next().kind;
      Type rhs = term();
      return op == Tok::Or ? Type::disj(std::move(lhs), std::move(rhs)) : Type::oplus(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Type summ() {
    Type lhs = fact();
    if (peek() == Tok::And || peek() == Tok::Tensor) {
      const Tok op = next().kind;
      Type rhs = summ();
      return op == Tok::And ? Type::conj(std::move(lhs), std::move(rhs)) : Type::otimes(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Type fact() {
    if (peek() == Tok::Not) {
      next();
      return Type::negation(fact());
    }
    if (peek() == Tok::Delay) {
      next();
      return Type::delay(fact());
    }
    return atom();
  }

  Type atom();

  ExtNat extnat() {
    const Token& t = toks_[i_];
    if (t.kind == Tok::NegInf) {
      next();
      return ExtNat::neg_inf();
    }
    if (t.kind == Tok::PosInf) {
      next();
      return ExtNat::pos_inf();
    }
    if (t.kind != Tok::Nat) throw ParseError("expected a number, -inf or +inf", t.pos);
    auto v = parse_extnat(t.text);
    if (!v) throw ParseError("number out of range", t.pos);
    next();
    return *v;
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

Bound elaborate(const RawBound& raw, const Type& ty);

Bound elaborate_matrix(const RawBound& raw, const Type& ty) {
  if (!is_elementary(ty)) throw ParseError("matrix bound for non-elementary type " + to_string(ty), raw.pos);
  const BoundShape s = bound_space_shape(ty);
  const std::size_t r = raw.rows.size();
  const std::size_t c = r == 0 ? 0 : raw.rows.front().size();
  // A single row or column is accepted for either vector orientation.
  const bool fits = (r == s.rows && c == s.cols) || (s.rows * s.cols == r * c && (r == 1 || c == 1) &&
                                                     (s.rows == 1 || s.cols == 1));
  if (!fits)
    throw ParseError("matrix is " + std::to_string(r) + "x" + std::to_string(c) + " but type " + to_string(ty) +
                         " needs " + std::to_string(s.rows) + "x" + std::to_string(s.cols),
                     raw.pos);
  std::vector<ExtNat> flat;
  for (const auto& row : raw.rows) flat.insert(flat.end(), row.begin(), row.end());
  return decode_bound(flat, ty);
}

Bound elaborate(const RawBound& raw, const Type& ty) {
  using K = RawBound::Kind;
  if (raw.kind == K::Matrix) return elaborate_matrix(raw, ty);
  if (raw.kind == K::Num && raw.num == ExtNat(0) && has_singleton_bounds(ty)) return canonical_bound(ty);
  switch (ty.op()) {
    case Op::Delay:
      if (raw.kind == K::Num) {
        if (!has_singleton_bounds(ty.operand()))
          throw ParseError("bare delay needs a pure operand, got " + to_string(ty.operand()), raw.pos);
        return Bound::delay(raw.num, canonical_bound(ty.operand()));
      }
      if (raw.kind == K::Pair && raw.kids[0].kind == K::Num)
        return Bound::delay(raw.kids[0].num, elaborate(raw.kids[1], ty.operand()));
      break;
    case Op::And: case Op::OPlus: case Op::OTimes:
      if (raw.kind == K::Pair) return Bound::pair(elaborate(raw.kids[0], ty.lhs()), elaborate(raw.kids[1], ty.rhs()));
      break;
    case Op::Or:
      if (raw.kind == K::Inl) return Bound::inl(elaborate(raw.kids[0], ty.lhs()));
      if (raw.kind == K::Inr) return Bound::inr(elaborate(raw.kids[0], ty.rhs()));
      break;
    case Op::Implies:
      if (raw.kind == K::Table) {
        if (!is_delay_free(ty.lhs()))
          throw ParseError("table over an antecedent with infinite bound space", raw.pos);
        std::vector<Bound::Entry> entries;
        for (std::size_t k = 0; k + 1 < raw.kids.size(); k += 2)
          entries.emplace_back(elaborate(raw.kids[k], ty.lhs()), elaborate(raw.kids[k + 1], ty.rhs()));
        Bound b = Bound::table(std::move(entries));
        try {
          check_bound(b, ty);
        } catch (const BoundError& e) {
          throw ParseError(e.what(), raw.pos);
        }
        return b;
      }
      break;
    default:
      break;
  }
  if (raw.kind == K::Num && is_elementary(ty)) {
    const BoundShape s = bound_space_shape(ty);
    if (s.rows * s.cols == 1) return decode_bound({raw.num}, ty);
  }
  throw ParseError("bound does not fit type " + to_string(ty), raw.pos);
}

Type Parser::atom() {
  const Token& t = toks_[i_];
  switch (t.kind) {
    case Tok::True: next(); return Type::truth();
    case Tok::False: next(); return Type::falsity();
    case Tok::Ident: next(); return Type::atom(t.text);
    case Tok::LParen: {
      next();
      Type inner = phi();
      expect(Tok::RParen, "')'");
      return inner;
    }
    case Tok::LAngle: {
      next();
      RawBound raw = bound();
      expect(Tok::Colon, "':'");
      Type ty = phi();
      expect(Tok::RAngle, "'>'");
      return Type::embed(Interface(elaborate(raw, ty), ty));
    }
    default:
      throw ParseError(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'", t.pos);
  }
}

int level(const Type& t) {
  switch (t.op()) {
    case Op::Implies: return 0;
    case Op::Or: case Op::OPlus: return 1;
    case Op::And: case Op::OTimes: return 2;
    case Op::Not: case Op::Delay: return 3;
    default: return 4;
  }
}

const char* op_text(Op op) {
  switch (op) {
    case Op::Implies: return " -> ";
    case Op::Or: return " | ";
    case Op::OPlus: return " (+) ";
    case Op::And: return " & ";
    case Op::OTimes: return " (x) ";
    default: return "?";
  }
}

void print(const Type& t, int need, std::string& out) {
  const bool paren = level(t) < need;
  if (paren) out += '(';
  switch (t.op()) {
    case Op::Atom: out += t.name(); break;
    case Op::True: out += "true"; break;
    case Op::False: out += "false"; break;
    case Op::Not: out += '!'; print(t.operand(), 3, out); break;
    case Op::Delay: out += "O "; print(t.operand(), 3, out); break;
    case Op::Embed:
      out += '<';
      out += to_string(t.embedded().bound());
      out += " : ";
      print(t.embedded().type(), 0, out);
      out += '>';
      break;
    default: {
      const int l = level(t);
      print(t.lhs(), l + 1, out);
      out += op_text(t.op());
      print(t.rhs(), l, out);
    }
  }
  if (paren) out += ')';
}

void print(const Bound& b, std::string& out) {
  switch (b.kind()) {
    case Bound::Kind::Unit: out += '0'; break;
    case Bound::Kind::Pair:
      out += '(';
      print(b.first(), out);
      out += ", ";
      print(b.second(), out);
      out += ')';
      break;
    case Bound::Kind::InL: out += "inl "; print(b.inner(), out); break;
    case Bound::Kind::InR: out += "inr "; print(b.inner(), out); break;
    case Bound::Kind::Delay:
      out += '(';
      out += to_string(b.delay_value());
      out += ", ";
      print(b.inner(), out);
      out += ')';
      break;
    case Bound::Kind::Table: {
      out += '{';
      bool first = true;
      for (const auto& [k, v] : b.entries()) {
        if (!first) out += ", ";
        first = false;
        print(k, out);
        out += " => ";
        print(v, out);
      }
      out += '}';
      break;
    }
  }
}

}  // namespace

Type parse_type(std::string_view text) {
  Parser p(text);
  Type t = p.phi();
  p.expect_end();
  return t;
}

Interface parse_interface(std::string_view text) {
  Parser p(text);
  RawBound raw = p.bound();
  p.expect(Tok::Colon, "':'");
  Type ty = p.phi();
  p.expect_end();
  return Interface(elaborate(raw, ty), ty);
}

Bound parse_bound(std::string_view text, const Type& ty) {
  Parser p(text);
  RawBound raw = p.bound();
  p.expect_end();
  return elaborate(raw, ty);
}

std::vector<std::vector<ExtNat>> parse_matrix_rows(std::string_view text) {
  Parser p(text);
  p.expect(Tok::LBracket, "'['");
  auto rows = p.matrix_body();
  p.expect_end();
  return rows;
}

std::string to_string(const Type& t) {
  std::string out;
  print(t, 0, out);
  return out;
}

std::string to_string(const Bound& b) {
  std::string out;
  print(b, out);
  return out;
}

std::string to_string(const Interface& i) { return to_string(i.bound()) + " : " + to_string(i.type()); }

}  // namespace schedalg
