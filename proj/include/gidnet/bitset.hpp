// Copyright 2026 The gidnet Authors
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

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace gidnet {

/// Fixed-size packed bit vector. Bits past size() are always zero, so
/// word-wise operations never leak stale state into counts or comparisons.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size)
      : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}
  Bitset(std::size_t size, std::initializer_list<std::size_t> ones)
      : Bitset(size) {
    for (std::size_t i : ones) set(i);
  }

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i) { words_[i / kWordBits] |= bit(i); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~bit(i); }
  void assign(std::size_t i, bool value) { value ? set(i) : reset(i); }

  void clear() {
    for (auto& w : words_) w = 0;
  }
  void fill() {
    for (auto& w : words_) w = ~std::uint64_t{0};
    trim();
  }

  std::size_t count() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool any() const {
    for (auto w : words_)
      if (w != 0) return true;
    return false;
  }
  bool none() const { return !any(); }

  /// Index of the first set bit at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const {
    if (from >= size_) return size_;
    std::size_t w = from / kWordBits;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from % kWordBits));
    while (true) {
      if (word != 0)
        return w * kWordBits + static_cast<std::size_t>(std::countr_zero(word));
      if (++w == words_.size()) return size_;
      word = words_[w];
    }
  }
  std::size_t find_first() const { return find_next(0); }

  /// Set bits in ascending order.
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::size_t i = find_first(); i < size_; i = find_next(i + 1))
      out.push_back(i);
    return out;
  }

  Bitset& operator&=(const Bitset& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
  }
  Bitset& operator|=(const Bitset& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
  }
  /// Clears every bit that is set in `other`.
  Bitset& subtract(const Bitset& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  /// popcount(a & b) without materializing the intersection.
  static std::size_t intersection_count(const Bitset& a, const Bitset& b) {
    std::size_t total = 0;
    for (std::size_t w = 0; w < a.words_.size(); ++w)
      total += static_cast<std::size_t>(std::popcount(a.words_[w] & b.words_[w]));
    return total;
  }

  bool operator==(const Bitset&) const = default;

  std::span<const std::uint64_t> words() const { return words_; }

 private:
  static constexpr std::size_t kWordBits = 64;
  static std::uint64_t bit(std::size_t i) {
    return std::uint64_t{1} << (i % kWordBits);
  }
  void trim() {
    if (size_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (size_ % kWordBits)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace gidnet
