// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DECOY_STATE_SET_H_
#define DECOY_STATE_SET_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace decoy {

using StateId = std::uint32_t;
using ActionId = std::uint32_t;

// Fixed-universe bitset over dense state ids [0, universe).
// Iteration and ToVector() always yield ids in ascending order.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  StateSet(std::size_t universe, std::initializer_list<StateId> ids)
      : StateSet(universe) {
    for (StateId s : ids) insert(s);
  }
  template <typename Range>
  static StateSet FromRange(std::size_t universe, const Range& ids) {
    StateSet out(universe);
    for (auto s : ids) out.insert(static_cast<StateId>(s));
    return out;
  }
  static StateSet Full(std::size_t universe) {
    StateSet out(universe);
    for (std::size_t s = 0; s < universe; ++s) out.insert(static_cast<StateId>(s));
    return out;
  }

  std::size_t universe() const { return universe_; }

  bool contains(StateId s) const {
    return s < universe_ && ((words_[s >> 6] >> (s & 63)) & 1u);
  }
  void insert(StateId s) { words_[s >> 6] |= (std::uint64_t{1} << (s & 63)); }
  void erase(StateId s) { words_[s >> 6] &= ~(std::uint64_t{1} << (s & 63)); }

  std::size_t count() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (std::uint64_t w : words_)
      if (w != 0) return false;
    return true;
  }

  StateSet& operator|=(const StateSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  StateSet& operator&=(const StateSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  // Set difference.
  StateSet& operator-=(const StateSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
  friend StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }
  friend StateSet operator-(StateSet a, const StateSet& b) { return a -= b; }

  StateSet Complement() const {
    StateSet out(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
    out.TrimTail();
    return out;
  }

  bool IsSubsetOf(const StateSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool Intersects(const StateSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        const int bit = std::countr_zero(w);
        fn(static_cast<StateId>(i * 64 + static_cast<std::size_t>(bit)));
        w &= w - 1;
      }
    }
  }

  std::vector<StateId> ToVector() const {
    std::vector<StateId> out;
    out.reserve(count());
    ForEach([&](StateId s) { out.push_back(s); });
    return out;
  }

  friend bool operator==(const StateSet&, const StateSet&) = default;

 private:
  void TrimTail() {
    if (universe_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace decoy

#endif  // DECOY_STATE_SET_H_
