#include "schedalg/semantics/activation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace schedalg {

Vocabulary::Vocabulary(std::vector<std::string> names) {
  for (const auto& n : names) add(n);
}

std::size_t Vocabulary::add(const std::string& name) {
  if (auto i = find(name)) return *i;
  if (names_.size() == kMaxVars) throw std::invalid_argument("more than 64 control variables");
  names_.push_back(name);
  return names_.size() - 1;
}

std::optional<std::size_t> Vocabulary::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::strong_ordering Activation::operator<=>(const Activation& o) const {
  if (events.size() != o.events.size()) return events.size() <=> o.events.size();
  return std::lexicographical_compare_three_way(events.begin(), events.end(), o.events.begin(), o.events.end());
}

bool is_monotone(const Activation& a) {
  for (std::size_t i = 1; i < a.events.size(); ++i)
    if ((a.events[i - 1] & ~a.events[i]) != 0) return false;
  return true;
}

Activation shift(const Activation& a, std::size_t i) {
  if (i >= a.size()) return {};
  return Activation{std::vector<Event>(a.events.begin() + static_cast<std::ptrdiff_t>(i), a.events.end())};
}

std::vector<Activation> subactivations(const Activation& a) {
  const std::size_t n = a.size();
  if (n >= 24) throw std::length_error("activation too long for sub-activation enumeration");
  std::vector<Activation> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint32_t sel = 0; sel < (1u << n); ++sel) {
    Activation s;
    for (std::size_t j = 0; j < n; ++j)
      if (sel & (1u << j)) s.events.push_back(a.events[j]);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::pair<Activation, Activation>> covers2(const Activation& a) {
  const std::size_t n = a.size();
  std::size_t total = 1;
  for (std::size_t j = 0; j < n; ++j) total *= 3;
  std::vector<std::pair<Activation, Activation>> out;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    Activation l, r;
    std::size_t c = code;
    for (std::size_t j = 0; j < n; ++j, c /= 3) {
      const std::size_t who = c % 3;  // 0: left only, 1: right only, 2: both
      if (who != 1) l.events.push_back(a.events[j]);
      if (who != 0) r.events.push_back(a.events[j]);
    }
    out.emplace_back(std::move(l), std::move(r));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Activation make_activation(const std::vector<std::vector<std::string>>& events, const Vocabulary& v) {
  Activation a;
  for (const auto& ev : events) {
    Event e = 0;
    for (const auto& name : ev) {
      auto i = v.find(name);
      if (!i) throw std::invalid_argument("unknown variable " + name);
      e |= Event{1} << *i;
    }
    a.events.push_back(e);
  }
  if (!is_monotone(a)) throw std::invalid_argument("activation is not monotone");
  return a;
}

std::string to_string(const Activation& a, const Vocabulary& v) {
  if (a.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ' ';
    out += '{';
    bool first = true;
    for (std::size_t b = 0; b < v.size(); ++b) {
      if (!(a.events[i] & (Event{1} << b))) continue;
      if (!first) out += ',';
      first = false;
      out += v.name(b);
    }
    out += '}';
  }
  return out;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

Schedule parse_schedule(std::string_view text, Vocabulary& v) {
  Schedule out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto fail = [&](const std::string& why) {
      throw std::runtime_error("schedule line " + std::to_string(lineno) + ": " + why);
    };
    if (t == "-") {
      out.insert(Activation{});
      continue;
    }
    std::vector<std::vector<std::string>> events;
    std::size_t i = 0;
    while (i < t.size()) {
      if (std::isspace(static_cast<unsigned char>(t[i]))) {
        ++i;
        continue;
      }
      if (t[i] != '{') fail("expected '{'");
      const std::size_t close = t.find('}', i);
      if (close == std::string::npos) fail("missing '}'");
      std::vector<std::string> names;
      std::string body = t.substr(i + 1, close - i - 1);
      std::size_t start = 0;
      while (start <= body.size()) {
        std::size_t comma = body.find(',', start);
        if (comma == std::string::npos) comma = body.size();
        std::string name = trim(std::string_view(body).substr(start, comma - start));
        if (!name.empty()) names.push_back(name);
        else if (comma < body.size()) fail("empty variable name");
        start = comma + 1;
      }
      for (const auto& n : names) v.add(n);
      events.push_back(std::move(names));
      i = close + 1;
    }
    try {
      out.insert(make_activation(events, v));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  return out;
}

}  // namespace schedalg
