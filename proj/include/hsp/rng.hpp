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

#ifndef HSP_RNG_HPP_
#define HSP_RNG_HPP_

#include <cstdint>
#include <limits>
#include <stdexcept>

#include "hsp/bigint.hpp"

namespace hsp {

// Reproducibility contract: every sampled outcome in this project is a pure
// function of a 64-bit seed and the sequence of draws. The generator identity
// is part of that contract and is fixed to xoshiro256** (Blackman/Vigna),
// seeded through the SplitMix64 finalizer. Both algorithms are public domain
// and bit-portable across platforms; no standard-library distribution is
// involved anywhere (std::uniform_int_distribution is not portable).

using Seed = std::uint64_t;

/// Derived stream for trial i of a batch run: seed XOR trial index.
inline Seed trial_stream_seed(Seed seed, std::uint64_t trial_index) {
  return seed ^ trial_index;
}

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t s) : state(s) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(Seed seed) {
    SplitMix64 sm(seed);
    for (auto& w : s_) w = sm.next();
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  bool bit() { return ((*this)() >> 63) != 0; }

  /// Uniform draw in [0, bound), unbiased via rejection below 2^64 mod bound.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::domain_error("Rng::below: bound must be > 0");
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = (*this)();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform big integer in [0, bound): rejection over bitlength(bound) bits.
  BigInt below_big(const BigInt& bound) {
    if (bound <= 0) throw std::domain_error("Rng::below_big: bound must be > 0");
    const unsigned bits = floor_log2(bound) + 1;
    const unsigned chunks = (bits + 63) / 64;
    const unsigned top_bits = bits - 64 * (chunks - 1);
    const std::uint64_t top_mask =
        top_bits == 64 ? ~0ull : ((1ull << top_bits) - 1);
    for (;;) {
      BigInt r = 0;
      for (unsigned c = 0; c < chunks; ++c) {
        std::uint64_t w = (*this)();
        if (c + 1 == chunks) w &= top_mask;
        r |= BigInt(w) << (64 * c);
      }
      if (r < bound) return r;
    }
  }

  /// Uniform double in [0, 1) from the top 53 bits of one draw.
  double real01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t s_[4];
};

}  // namespace hsp

#endif  // HSP_RNG_HPP_
