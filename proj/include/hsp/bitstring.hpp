// Copyright 2026 The hspsim Authors
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

#ifndef HSP_BITSTRING_HPP_
#define HSP_BITSTRING_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hsp {

// Fixed-length binary word. Positions are 1-based with position 1 the
// leftmost character of the textual form, so "110" has bit 1 = 1, bit 3 = 0.
// Internally bits are packed into 64-bit words so that the textual form read
// as a binary number equals the packed value (position j lives at logical
// bit n - j). Length is immutable after construction.
class BitString {
 public:
  static constexpr int kMaxLength = 1 << 20;

  BitString() = default;  // length-0 placeholder; not usable in operations

  /// All-zeros string of length n.
  explicit BitString(int n) : n_(check_length(n)), words_(word_count(n)) {}

  static BitString zeros(int n) { return BitString(n); }

  static BitString ones(int n) {
    BitString b(n);
    for (auto& w : b.words_) w = ~0ull;
    b.mask_top();
    return b;
  }

  /// e_j: bit j set, all others zero. j must lie in [1, n].
  static BitString unit(int n, int j) {
    BitString b(n);
    b.check_position(j);
    b.set(j, true);
    return b;
  }

  static BitString from_string(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("BitString: empty text");
    BitString b(static_cast<int>(text.size()));
    for (int j = 1; j <= b.n_; ++j) {
      const char c = text[static_cast<std::size_t>(j - 1)];
      if (c == '1') {
        b.set(j, true);
      } else if (c != '0') {
        throw std::invalid_argument("BitString: invalid character in text");
      }
    }
    return b;
  }

  /// Inverse of to_index(); requires n <= 64 and index < 2^n.
  static BitString from_index(int n, std::uint64_t index) {
    if (n > 64) throw std::domain_error("BitString::from_index: n > 64");
    BitString b(n);
    if (n < 64 && (index >> n) != 0)
      throw std::domain_error("BitString::from_index: index out of range");
    b.words_[0] = index;
    return b;
  }

  int length() const { return n_; }

  int weight() const {
    int w = 0;
    for (const auto v : words_) w += std::popcount(v);
    return w;
  }

  bool get(int j) const {
    check_position(j);
    const int p = n_ - j;
    return (words_[static_cast<std::size_t>(p >> 6)] >> (p & 63)) & 1;
  }

  void set(int j, bool v) {
    check_position(j);
    const int p = n_ - j;
    const std::uint64_t mask = 1ull << (p & 63);
    auto& w = words_[static_cast<std::size_t>(p >> 6)];
    w = v ? (w | mask) : (w & ~mask);
  }

  std::string str() const {
    std::string out(static_cast<std::size_t>(n_), '0');
    for (int j = 1; j <= n_; ++j)
      if (get(j)) out[static_cast<std::size_t>(j - 1)] = '1';
    return out;
  }

  /// Packed value as an integer; requires n <= 64.
  std::uint64_t to_index() const {
    if (n_ == 0 || n_ > 64)
      throw std::domain_error("BitString::to_index: length not in [1, 64]");
    return words_[0];
  }

  /// True when every 1 of *this is also a 1 of other (Idx(x) subseteq Idx(y)).
  bool is_subset_of(const BitString& other) const {
    check_same_length(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  friend BitString operator&(const BitString& a, const BitString& b) {
    return a.zip(b, [](std::uint64_t x, std::uint64_t y) { return x & y; });
  }
  friend BitString operator|(const BitString& a, const BitString& b) {
    return a.zip(b, [](std::uint64_t x, std::uint64_t y) { return x | y; });
  }
  friend BitString operator^(const BitString& a, const BitString& b) {
    return a.zip(b, [](std::uint64_t x, std::uint64_t y) { return x ^ y; });
  }

  /// x . y = sum_j x_j y_j = |x AND y|.
  friend int inner_product(const BitString& x, const BitString& y) {
    x.check_same_length(y);
    int acc = 0;
    for (std::size_t i = 0; i < x.words_.size(); ++i)
      acc += std::popcount(x.words_[i] & y.words_[i]);
    return acc;
  }

  /// Hamming distance |x XOR y|.
  friend int hamming_distance(const BitString& x, const BitString& y) {
    x.check_same_length(y);
    int acc = 0;
    for (std::size_t i = 0; i < x.words_.size(); ++i)
      acc += std::popcount(x.words_[i] ^ y.words_[i]);
    return acc;
  }

  /// 1-based positions of all set bits, ascending.
  std::vector<int> one_positions() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(weight()));
    for (std::size_t i = words_.size(); i-- > 0;) {
      std::uint64_t w = words_[i];
      while (w) {
        const int p = static_cast<int>(i) * 64 + 63 - std::countl_zero(w);
        out.push_back(n_ - p);
        w &= ~(1ull << p);
      }
    }
    return out;
  }

  bool operator==(const BitString& other) const = default;

  std::strong_ordering operator<=>(const BitString& other) const {
    if (auto c = n_ <=> other.n_; c != 0) return c;
    for (std::size_t i = words_.size(); i-- > 0;)
      if (auto c = words_[i] <=> other.words_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

 private:
  template <typename Op>
  BitString zip(const BitString& other, Op op) const {
    check_same_length(other);
    BitString out(n_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      out.words_[i] = op(words_[i], other.words_[i]);
    return out;
  }

  static int check_length(int n) {
    if (n < 1 || n > kMaxLength)
      throw std::invalid_argument("BitString: length must be in [1, 2^20]");
    return n;
  }

  static std::size_t word_count(int n) {
    return static_cast<std::size_t>((n + 63) / 64);
  }

  void check_position(int j) const {
    if (j < 1 || j > n_)
      throw std::out_of_range("BitString: position out of range");
  }

  void check_same_length(const BitString& other) const {
    if (n_ != other.n_ || n_ == 0)
      throw std::invalid_argument("BitString: length mismatch");
  }

  void mask_top() {
    const int rem = n_ & 63;
    if (rem != 0) words_.back() &= (1ull << rem) - 1;
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// e_j of length n (paper-style 1-based index).
inline BitString unit_string(int n, int j) { return BitString::unit(n, j); }

}  // namespace hsp

#endif  // HSP_BITSTRING_HPP_
