#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace schedalg {

// Naturals extended with -inf and +inf, totally ordered -inf < 0 < 1 < ... < +inf.
class ExtNat {
 public:
  enum class Kind : std::uint8_t { NegInf = 0, Finite = 1, PosInf = 2 };

  constexpr ExtNat() = default;
  constexpr ExtNat(std::uint64_t v) : kind_(Kind::Finite), value_(v) {}  // NOLINT: implicit by design

  static constexpr ExtNat neg_inf() { return ExtNat(Kind::NegInf); }
  static constexpr ExtNat pos_inf() { return ExtNat(Kind::PosInf); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::PosInf; }

  // Throws std::logic_error unless finite.
  std::uint64_t value() const;

  constexpr bool operator==(const ExtNat& o) const {
    return kind_ == o.kind_ && (kind_ != Kind::Finite || value_ == o.value_);
  }
  constexpr std::strong_ordering operator<=>(const ExtNat& o) const {
    if (kind_ != o.kind_) return kind_ <=> o.kind_;
    if (kind_ != Kind::Finite) return std::strong_ordering::equal;
    return value_ <=> o.value_;
  }

 private:
  constexpr explicit ExtNat(Kind k) : kind_(k), value_(0) {}

  Kind kind_ = Kind::Finite;
  std::uint64_t value_ = 0;
};

// The kernel addition: -inf absorbs everything (including +inf), then +inf
// absorbs finite values. Finite overflow saturates to +inf.
ExtNat operator+(ExtNat a, ExtNat b);

// Dual addition where +inf wins the mixed case. Used as the multiplication of
// the min-plus semiring, whose zero (+inf) must annihilate.
ExtNat add_upper(ExtNat a, ExtNat b);

// Addition with -inf as the identity. This is the delay arithmetic of the
// interleaving laws: a thread that never runs (-inf) contributes no delay.
ExtNat delay_sum(ExtNat a, ExtNat b);

inline ExtNat min(ExtNat a, ExtNat b) { return a < b ? a : b; }
inline ExtNat max(ExtNat a, ExtNat b) { return a < b ? b : a; }

// "-inf", "+inf" or the decimal value.
std::string to_string(ExtNat x);

// Accepts NAT, "-inf", "+inf" (and "inf" as +inf).
std::optional<ExtNat> parse_extnat(std::string_view text);

}  // namespace schedalg
