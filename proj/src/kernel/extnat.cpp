#include "schedalg/kernel/extnat.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace schedalg {

std::uint64_t ExtNat::value() const {
  if (kind_ != Kind::Finite) throw std::logic_error("ExtNat::value on infinite " + to_string(*this));
  return value_;
}

namespace {

ExtNat finite_sum(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) return ExtNat::pos_inf();
  return ExtNat(a + b);
}

}  // namespace

ExtNat operator+(ExtNat a, ExtNat b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return ExtNat::neg_inf();
  if (a.is_pos_inf() || b.is_pos_inf()) return ExtNat::pos_inf();
  return finite_sum(a.value(), b.value());
}

ExtNat add_upper(ExtNat a, ExtNat b) {
  if (a.is_pos_inf() || b.is_pos_inf()) return ExtNat::pos_inf();
  if (a.is_neg_inf() || b.is_neg_inf()) return ExtNat::neg_inf();
  return finite_sum(a.value(), b.value());
}

ExtNat delay_sum(ExtNat a, ExtNat b) {
  if (a.is_neg_inf()) return b;
  if (b.is_neg_inf()) return a;
  return a + b;
}

std::string to_string(ExtNat x) {
  switch (x.kind()) {
    case ExtNat::Kind::NegInf: return "-inf";
    case ExtNat::Kind::PosInf: return "+inf";
    case ExtNat::Kind::Finite: break;
  }
  return std::to_string(x.value());
}

std::optional<ExtNat> parse_extnat(std::string_view text) {
  if (text == "-inf") return ExtNat::neg_inf();
  if (text == "+inf" || text == "inf") return ExtNat::pos_inf();
  if (text.empty()) return std::nullopt;
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return ExtNat(v);
}

}  // namespace schedalg
