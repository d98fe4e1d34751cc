#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "schedalg/kernel/type.hpp"
#include "schedalg/semantics/activation.hpp"
#include "schedalg/semantics/universe.hpp"

namespace schedalg {

// Fixed-size bitset over the indices of an ActivationSpace.
class ActSet {
 public:
  ActSet() = default;
  explicit ActSet(std::size_t n, bool value = false);

  std::size_t size() const { return n_; }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  std::size_t count() const;
  bool subset_of(const ActSet& o) const;
  // Smallest index in *this but not in o.
  std::optional<std::size_t> first_outside(const ActSet& o) const;

  ActSet& operator&=(const ActSet& o);
  ActSet& operator|=(const ActSet& o);
  ActSet operator~() const;
  bool operator==(const ActSet& o) const = default;

 private:
  void trim();
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

// A finite set of activations closed under sub-activations, with the
// sub-activation, shift and cover relations precomputed as index lists.
class ActivationSpace {
 public:
  static ActivationSpace of_universe(const Universe& u);
  // Downward closure of a schedule.
  static ActivationSpace closure_of(const Schedule& s);

  std::size_t size() const { return acts_.size(); }
  const Activation& at(std::size_t i) const { return acts_[i]; }
  std::optional<std::size_t> index_of(const Activation& a) const;

  const std::vector<std::uint32_t>& subs(std::size_t i) const { return subs_[i]; }
  // shift(i)[k] = index of sigma[k,:], k = 0..|sigma|.
  const std::vector<std::uint32_t>& shifts(std::size_t i) const { return shifts_[i]; }
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& covers(std::size_t i) const { return covers_[i]; }
  std::size_t empty_index() const { return empty_; }

  ActSet members(const Schedule& s) const;

 private:
  explicit ActivationSpace(std::vector<Activation> acts);

  std::vector<Activation> acts_;
  std::map<Activation, std::uint32_t> index_;
  std::vector<std::vector<std::uint32_t>> subs_;
  std::vector<std::vector<std::uint32_t>> shifts_;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> covers_;
  std::size_t empty_ = 0;
};

// Computes satisfaction sets over an ActivationSpace bottom up, memoised per
// (type, bound) node. Agrees with `satisfies` on every member of the space.
class Evaluator {
 public:
  Evaluator(const ActivationSpace& space, Vocabulary vocab);

  const ActivationSpace& space() const { return space_; }
  const Vocabulary& vocabulary() const { return vocab_; }

  const ActSet& eval(const Interface& i);
  const ActSet& eval(const Bound& f, const Type& phi);

 private:
  struct Key {
    const void* type;
    const void* bound;
    bool operator==(const Key& o) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };
  struct Entry {
    Type type;    // keep nodes alive so their addresses stay unique
    Bound bound;
    ActSet set;
  };

  ActSet compute(const Bound& f, const Type& phi);
  const std::vector<Bound>& quantified(const Type& ante);
  ActSet downward_closed_within(const ActSet& good) const;

  const ActivationSpace& space_;
  Vocabulary vocab_;
  std::unordered_map<Key, Entry, KeyHash> memo_;
  std::unordered_map<const void*, std::pair<Type, std::vector<Bound>>> bounds_;
};

}  // namespace schedalg
