// Copyright 2026 The qwcgroup Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qwc {

/// Fixed-size dynamic bitset over [0, size). Bits past size() are always zero.
class Bitset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  void set_all() {
    for (auto &w : words_) {
      w = ~Word{0};
    }
    trim();
  }
  void reset_all() {
    for (auto &w : words_) {
      w = 0;
    }
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (Word w : words_) {
      n += static_cast<std::size_t>(std::popcount(w));
    }
    return n;
  }

  bool any() const {
    for (Word w : words_) {
      if (w != 0) {
        return true;
      }
    }
    return false;
  }
  bool none() const { return !any(); }

  std::size_t find_first() const { return find_from_word(0); }

  std::size_t find_next(std::size_t i) const {
    ++i;
    if (i >= size_) {
      return npos;
    }
    std::size_t wi = i / kWordBits;
    Word w = words_[wi] & (~Word{0} << (i % kWordBits));
    if (w != 0) {
      return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
    }
    return find_from_word(wi + 1);
  }

  /// Calls fn(i) for each set bit in ascending order.
  template <typename Fn>
  void for_each(Fn &&fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w != 0) {
        fn(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  Bitset &operator&=(const Bitset &o) {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] &= o.words_[i];
    }
    return *this;
  }
  Bitset &operator|=(const Bitset &o) {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] |= o.words_[i];
    }
    return *this;
  }
  /// this &= ~o
  Bitset &subtract(const Bitset &o) {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] &= ~o.words_[i];
    }
    return *this;
  }
  void flip() {
    for (auto &w : words_) {
      w = ~w;
    }
    trim();
  }

  friend Bitset operator&(Bitset a, const Bitset &b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset &b) { return a |= b; }

  std::size_t intersection_count(const Bitset &o) const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      n += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    }
    return n;
  }

  bool intersects(const Bitset &o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & o.words_[i]) != 0) {
        return true;
      }
    }
    return false;
  }

  /// True iff every set bit of this is set in `o`.
  bool is_subset_of(const Bitset &o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~o.words_[i]) != 0) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::size_t> to_indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(const Bitset &, const Bitset &) = default;

 private:
  std::size_t find_from_word(std::size_t wi) const {
    for (; wi < words_.size(); ++wi) {
      if (words_[wi] != 0) {
        return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[wi]));
      }
    }
    return npos;
  }

  void trim() {
    if (size_ % kWordBits != 0 && !words_.empty()) {
      words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
    }
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace qwc
