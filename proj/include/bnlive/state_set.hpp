// Copyright 2026 The bnlive Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BNLIVE_STATE_SET_HPP_
#define BNLIVE_STATE_SET_HPP_

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "bnlive/ids.hpp"

namespace bnlive {

/// Dense bitset over a fixed universe of client states [0, universe).
///
/// All binary operations require both operands to share the same universe.
class StateSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  StateSet() = default;
  explicit StateSet(std::size_t universe)
      : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}
  StateSet(std::size_t universe, std::initializer_list<StateId> members)
      : StateSet(universe) {
    for (StateId s : members) insert(s);
  }

  static StateSet full(std::size_t universe) {
    StateSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(StateId{static_cast<std::uint32_t>(i)});
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(StateId s) const {
    assert(s.index < universe_);
    return (words_[s.index / kWordBits] >> (s.index % kWordBits)) & 1U;
  }

  /// Returns true if the state was newly inserted.
  bool insert(StateId s) {
    assert(s.index < universe_);
    Word& w = words_[s.index / kWordBits];
    const Word bit = Word{1} << (s.index % kWordBits);
    const bool fresh = (w & bit) == 0;
    w |= bit;
    return fresh;
  }

  bool erase(StateId s) {
    assert(s.index < universe_);
    Word& w = words_[s.index / kWordBits];
    const Word bit = Word{1} << (s.index % kWordBits);
    const bool present = (w & bit) != 0;
    w &= ~bit;
    return present;
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool empty() const {
    for (Word w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  bool is_subset_of(const StateSet& other) const {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
  }

  bool intersects(const StateSet& other) const {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
  }

  StateSet& operator|=(const StateSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  StateSet& operator&=(const StateSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  StateSet& operator-=(const StateSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
  friend StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }
  friend StateSet operator-(StateSet a, const StateSet& b) { return a -= b; }

  friend bool operator==(const StateSet&, const StateSet&) = default;

  /// Members in ascending order.
  std::vector<StateId> members() const {
    std::vector<StateId> out;
    for_each([&](StateId s) { out.push_back(s); });
    return out;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        fn(StateId{static_cast<std::uint32_t>(w * kWordBits + bit)});
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const {
    std::size_t h = universe_;
    for (Word w : words_) h = h * 0x9E3779B97F4A7C15ULL + static_cast<std::size_t>(w ^ (w >> 29));
    return h;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

/// Ordered tuple (S_1, ..., S_m) of state sets: a vertex of the cycle graph
/// and, equally, a constraint for the closure operators.
class SetTuple {
 public:
  SetTuple() = default;
  SetTuple(std::size_t arity, std::size_t universe) : components_(arity, StateSet(universe)) {}
  explicit SetTuple(std::vector<StateSet> components) : components_(std::move(components)) {}

  /// (Q, ..., Q) of the given arity.
  static SetTuple full(std::size_t arity, std::size_t universe) {
    return SetTuple(std::vector<StateSet>(arity, StateSet::full(universe)));
  }

  /// ({s_1}, ..., {s_m}).
  static SetTuple singletons(const std::vector<StateId>& seeds, std::size_t universe) {
    SetTuple t(seeds.size(), universe);
    for (std::size_t i = 0; i < seeds.size(); ++i) t[i].insert(seeds[i]);
    return t;
  }

  std::size_t arity() const { return components_.size(); }
  StateSet& operator[](std::size_t i) { return components_[i]; }
  const StateSet& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<StateSet>& components() const { return components_; }

  /// Componentwise inclusion.
  bool is_below(const SetTuple& other) const {
    if (arity() != other.arity()) return false;
    for (std::size_t i = 0; i < arity(); ++i) {
      if (!components_[i].is_subset_of(other.components_[i])) return false;
    }
    return true;
  }

  std::size_t total_size() const {
    std::size_t n = 0;
    for (const auto& c : components_) n += c.size();
    return n;
  }

  friend SetTuple meet(const SetTuple& a, const SetTuple& b) {
    assert(a.arity() == b.arity());
    SetTuple out = a;
    for (std::size_t i = 0; i < a.arity(); ++i) out.components_[i] &= b.components_[i];
    return out;
  }

  friend bool operator==(const SetTuple&, const SetTuple&) = default;

  std::size_t hash() const {
    std::size_t h = components_.size();
    for (const auto& c : components_) h = h * 1000003U ^ c.hash();
    return h;
  }

 private:
  std::vector<StateSet> components_;
};

struct SetTupleHash {
  std::size_t operator()(const SetTuple& t) const { return t.hash(); }
};

}  // namespace bnlive

#endif  // BNLIVE_STATE_SET_HPP_
