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

#ifndef HSP_INSTANCE_HPP_
#define HSP_INSTANCE_HPP_

#include <compare>
#include <utility>
#include <vector>

#include "hsp/bigint.hpp"
#include "hsp/bitstring.hpp"
#include "hsp/rng.hpp"

namespace hsp {

// A hidden pair {s, s'}: two n-bit strings with equal Hamming weight and
// Hamming distance exactly 2, n >= 3 (n = 2 admits only the trivial pair
// {01, 10} and is rejected). The pair is unordered; the constructor stores
// the lexicographically smaller string first so that equal pairs compare
// equal regardless of argument order.
class HiddenPairInstance {
 public:
  HiddenPairInstance(BitString s, BitString s_prime);

  int n() const { return s_.length(); }
  const BitString& s() const { return s_; }
  const BitString& s_prime() const { return s_prime_; }

  /// s OR s' (the paper's t); weight = base_weight() + 1.
  BitString join() const { return s_ | s_prime_; }
  /// s AND s' (the paper's s0); weight = base_weight() - 1.
  BitString meet() const { return s_ & s_prime_; }

  int base_weight() const { return s_.weight(); }

  /// The two 1-based positions where s and s' differ, ascending.
  std::pair<int, int> differing_positions() const;

  bool operator==(const HiddenPairInstance& other) const = default;
  auto operator<=>(const HiddenPairInstance& other) const = default;

 private:
  BitString s_;
  BitString s_prime_;
};

/// Uniform sample over all n(n-1)*2^(n-3) instances: the differing position
/// pair uniform over C(n,2) choices, the shared bits uniform over 2^(n-2)
/// patterns. Requires n >= 3.
HiddenPairInstance random_instance(int n, Rng& rng);
HiddenPairInstance random_instance(int n, Seed seed);

/// All valid instances for n in [3, 12], each exactly once, in a fixed
/// deterministic order. The list has n(n-1)*2^(n-3) entries.
std::vector<HiddenPairInstance> enumerate_instances(int n);

/// n(n-1)*2^(n-3), the number of distinct hidden pairs.
BigInt instance_count(int n);

}  // namespace hsp

#endif  // HSP_INSTANCE_HPP_
