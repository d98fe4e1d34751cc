#include "schedalg/semantics/universe.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "schedalg/kernel/errors.hpp"

namespace schedalg {

std::size_t universe_size(const Universe& u) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t total = 0;
  for (std::size_t n = 0; n <= u.max_len; ++n) {
    std::size_t p = 1;
    for (std::size_t k = 0; k < u.vars.size(); ++k) {
      if (p > kMax / (n + 1)) return kMax;
      p *= n + 1;
    }
    if (total > kMax - p) return kMax;
    total += p;
  }
  return total;
}

std::size_t enumeration_budget() {
  if (const char* env = std::getenv("SCHED_ALGEBRA_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 2'000'000;
}

std::vector<Activation> enumerate_activations(const Universe& u) {
  if (u.vars.size() > Vocabulary::kMaxVars) throw ResourceError("too many variables");
  const std::size_t total = universe_size(u);
  if (total > enumeration_budget())
    throw ResourceError(describe(u) + " has " + std::to_string(total) + " activations, over the budget of " +
                        std::to_string(enumeration_budget()) + " (SCHED_ALGEBRA_BUDGET)");
  const std::size_t k = u.vars.size();
  std::vector<Activation> out;
  out.reserve(total);
  for (std::size_t n = 0; n <= u.max_len; ++n) {
    // Each variable appears from some index on, or never (level n).
    std::vector<std::size_t> level(k, 0);
    const std::size_t first = out.size();
    while (true) {
      Activation a;
      a.events.assign(n, 0);
      for (std::size_t v = 0; v < k; ++v)
        for (std::size_t i = level[v]; i < n; ++i) a.events[i] |= Event{1} << v;
      out.push_back(std::move(a));
      std::size_t v = 0;
      while (v < k && ++level[v] > n) level[v++] = 0;
      if (v == k) break;
    }
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(first), out.end());
  }
  return out;
}

Schedule enumerate_universe(const Universe& u) {
  auto all = enumerate_activations(u);
  return Schedule(all.begin(), all.end());
}

std::string describe(const Universe& u) {
  std::string vars;
  for (std::size_t i = 0; i < u.vars.size(); ++i) vars += (i ? "," : "") + u.vars[i];
  return "universe vars=" + vars + " len=" + std::to_string(u.max_len);
}

}  // namespace schedalg
