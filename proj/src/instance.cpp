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

#include "hsp/instance.hpp"

#include <stdexcept>
#include <utility>

namespace hsp {

HiddenPairInstance::HiddenPairInstance(BitString s, BitString s_prime)
    : s_(std::move(s)), s_prime_(std::move(s_prime)) {
  if (s_.length() != s_prime_.length())
    throw std::invalid_argument("HiddenPairInstance: length mismatch");
  if (s_.length() < 3)
    throw std::invalid_argument(
        "HiddenPairInstance: n must be >= 3 (n = 2 is the trivial case)");
  if (s_.weight() != s_prime_.weight())
    throw std::invalid_argument(
        "HiddenPairInstance: the strings must have equal Hamming weight");
  if (hamming_distance(s_, s_prime_) != 2)
    throw std::invalid_argument(
        "HiddenPairInstance: the strings must differ in exactly 2 bits");
  if (s_prime_ < s_) std::swap(s_, s_prime_);  // unordered pair, canonical order
}

std::pair<int, int> HiddenPairInstance::differing_positions() const {
  const std::vector<int> ones = (s_ ^ s_prime_).one_positions();
  return {ones[0], ones[1]};
}

HiddenPairInstance random_instance(int n, Rng& rng) {
  if (n < 3) throw std::invalid_argument("random_instance: n must be >= 3");
  // Unordered differing pair {i, j}: i uniform, j uniform among the rest.
  int i = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  int j = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
  if (j >= i) ++j;
  BitString shared(n);
  for (int p = 1; p <= n; ++p) {
    if (p == i || p == j) continue;
    if (rng.bit()) shared.set(p, true);
  }
  BitString s = shared;
  s.set(i, true);
  BitString s_prime = shared;
  s_prime.set(j, true);
  return {std::move(s), std::move(s_prime)};
}

HiddenPairInstance random_instance(int n, Seed seed) {
  Rng rng(seed);
  return random_instance(n, rng);
}

std::vector<HiddenPairInstance> enumerate_instances(int n) {
  if (n < 3 || n > 12)
    throw std::invalid_argument(
        "enumerate_instances: n must be in [3, 12] (exponential list)");
  std::vector<HiddenPairInstance> out;
  out.reserve(static_cast<std::size_t>(
      instance_count(n).convert_to<std::uint64_t>()));
  const int free_bits = n - 2;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (std::uint64_t v = 0; v < (1ull << free_bits); ++v) {
        BitString shared(n);
        int idx = 0;
        for (int p = 1; p <= n; ++p) {
          if (p == i || p == j) continue;
          if ((v >> (free_bits - 1 - idx)) & 1) shared.set(p, true);
          ++idx;
        }
        BitString s = shared;
        s.set(i, true);
        BitString s_prime = shared;
        s_prime.set(j, true);
        out.emplace_back(std::move(s), std::move(s_prime));
      }
    }
  }
  return out;
}

BigInt instance_count(int n) {
  if (n < 3) throw std::invalid_argument("instance_count: n must be >= 3");
  return BigInt(n) * (n - 1) * pow2(static_cast<unsigned>(n - 3));
}

}  // namespace hsp
