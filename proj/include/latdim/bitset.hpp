// Copyright 2026 The latdim Authors
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

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace latdim {

// Fixed-size bitset whose length is chosen at runtime. Storage is a flat
// vector of 64-bit words; bits past size() in the last word are always zero.
class DynamicBitset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  DynamicBitset() = default;
  explicit DynamicBitset(std::size_t size)
      : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  const std::vector<Word>& words() const noexcept { return words_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  void set(std::size_t i) noexcept {
    words_[i / kWordBits] |= Word{1} << (i % kWordBits);
  }
  void reset(std::size_t i) noexcept {
    words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
  }

  void set_all() noexcept {
    for (auto& w : words_) w = ~Word{0};
    trim();
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const noexcept {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }
  bool all() const noexcept { return count() == size_; }

  // Mask of the valid bits in word i.
  Word word_mask(std::size_t i) const noexcept {
    const std::size_t tail = size_ % kWordBits;
    if (i + 1 == words_.size() && tail != 0) return (Word{1} << tail) - 1;
    return ~Word{0};
  }

  DynamicBitset operator~() const {
    DynamicBitset out(*this);
    for (auto& w : out.words_) w = ~w;
    out.trim();
    return out;
  }
  DynamicBitset& operator&=(const DynamicBitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  DynamicBitset& operator|=(const DynamicBitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend DynamicBitset operator&(DynamicBitset a, const DynamicBitset& b) {
    return a &= b;
  }
  friend DynamicBitset operator|(DynamicBitset a, const DynamicBitset& b) {
    return a |= b;
  }

  bool is_subset_of(const DynamicBitset& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  // Number of set bits in (*this & ~o).
  std::size_t count_difference(const DynamicBitset& o) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & ~o.words_[i]));
    return c;
  }

  // Number of set bits in (*this ^ o).
  std::size_t hamming(const DynamicBitset& o) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] ^ o.words_[i]));
    return c;
  }

  friend bool operator==(const DynamicBitset&, const DynamicBitset&) = default;

 private:
  void trim() noexcept {
    if (!words_.empty()) words_.back() &= word_mask(words_.size() - 1);
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

// True iff a | b has every bit set. Stops at the first uncovered word.
inline bool covers_all(const DynamicBitset& a, const DynamicBitset& b) noexcept {
  const auto& aw = a.words();
  const auto& bw = b.words();
  for (std::size_t i = 0; i < aw.size(); ++i)
    if ((aw[i] | bw[i]) != a.word_mask(i)) return false;
  return true;
}

// True iff a & b has at least one set bit. Stops at the first shared word.
inline bool intersects(const DynamicBitset& a, const DynamicBitset& b) noexcept {
  const auto& aw = a.words();
  const auto& bw = b.words();
  for (std::size_t i = 0; i < aw.size(); ++i)
    if (aw[i] & bw[i]) return true;
  return false;
}

}  // namespace latdim
