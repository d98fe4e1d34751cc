#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace schedalg {

// Ordered set of at most 64 control variables; events are bitmasks over it.
class Vocabulary {
 public:
  static constexpr std::size_t kMaxVars = 64;

  Vocabulary() = default;
  explicit Vocabulary(std::vector<std::string> names);

  // Index of an existing name, adding it if absent.
  std::size_t add(const std::string& name);
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
};

using Event = std::uint64_t;

// Monotone sequence of events sigma(0) <= sigma(1) <= ...
struct Activation {
  std::vector<Event> events;

  std::size_t size() const { return events.size(); }
  bool empty() const { return events.empty(); }

  // Length first, then lexicographic on the event masks.
  std::strong_ordering operator<=>(const Activation& o) const;
  bool operator==(const Activation& o) const = default;
};

bool is_monotone(const Activation& a);

// sigma[i,:]; empty once i >= |sigma|.
Activation shift(const Activation& a, std::size_t i);

// One entry per index selection, 2^|a| in total. Selection bit j keeps event j;
// entries appear in increasing selection order.
std::vector<Activation> subactivations(const Activation& a);

// Distinct pairs (a1, a2) of sub-activations jointly hitting every index.
std::vector<std::pair<Activation, Activation>> covers2(const Activation& a);

// Throws std::invalid_argument for non-monotone input or unknown variables.
Activation make_activation(const std::vector<std::vector<std::string>>& events, const Vocabulary& v);

// "{A,B} {A,B,C}"; "-" for the empty activation.
std::string to_string(const Activation& a, const Vocabulary& v);

using Schedule = std::set<Activation>;

// One activation per line in the syntax of to_string. Blank lines and lines
// starting with '#' are skipped. Unknown variables are added to `v`.
// Throws std::runtime_error mentioning the line number on bad input.
Schedule parse_schedule(std::string_view text, Vocabulary& v);

}  // namespace schedalg
