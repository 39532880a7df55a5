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

#include "hsp/matroid.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace hsp {

BitString chi(const GroundSubset& subset) {
  BitString out(subset.n);
  for (const int e : subset.members) {
    if (e < 1 || e > subset.n)
      throw std::invalid_argument("chi: element outside the ground set");
    out.set(e, true);
  }
  return out;
}

GroundSubset chi_inverse(const BitString& indicator) {
  return {indicator.length(), indicator.one_positions()};
}

TwoBasesMatroid::TwoBasesMatroid(const GroundSubset& base_a,
                                 const GroundSubset& base_b)
    : TwoBasesMatroid(from_indicators(chi(base_a), chi(base_b))) {}

TwoBasesMatroid TwoBasesMatroid::from_indicators(const BitString& a,
                                                 const BitString& b) {
  if (a.length() != b.length())
    throw std::invalid_argument("TwoBasesMatroid: bases over different ground sets");
  if (a.length() < 3)
    throw std::invalid_argument(
        "TwoBasesMatroid: ground set must have n >= 3 elements");
  if (a.weight() != b.weight())
    throw std::invalid_argument("TwoBasesMatroid: bases must have equal size");
  if (hamming_distance(a, b) != 2)
    throw std::invalid_argument(
        "TwoBasesMatroid: bases must have symmetric difference of size 2");
  return TwoBasesMatroid(HiddenPairInstance(a, b));
}

bool validate_matroid_axioms(const TwoBasesMatroid& m, int cap) {
  const int n = m.n();
  if (n > cap || n > 16)
    throw std::domain_error("validate_matroid_axioms: n exceeds the cap");
  const auto mask_a = static_cast<std::uint32_t>(m.hidden_pair().s().to_index());
  const auto mask_b =
      static_cast<std::uint32_t>(m.hidden_pair().s_prime().to_index());
  const auto independent = [&](std::uint32_t set) {
    return (set & ~mask_a) == 0 || (set & ~mask_b) == 0;
  };

  // I0: the empty set is independent.
  if (!independent(0)) return false;

  std::vector<std::uint32_t> family;
  for (std::uint32_t set = 0; set < (1u << n); ++set)
    if (independent(set)) family.push_back(set);

  // I1: removing any element keeps a set independent.
  for (const std::uint32_t set : family) {
    std::uint32_t rest = set;
    while (rest) {
      const std::uint32_t bit = rest & (0u - rest);
      if (!independent(set & ~bit)) return false;
      rest &= ~bit;
    }
  }

  // I2 (exchange): a smaller independent set extends by some element of a
  // larger one.
  for (const std::uint32_t small : family) {
    const int small_size = std::popcount(small);
    for (const std::uint32_t large : family) {
      if (std::popcount(large) <= small_size) continue;
      std::uint32_t options = large & ~small;
      bool extended = false;
      while (options) {
        const std::uint32_t bit = options & (0u - options);
        if (independent(small | bit)) {
          extended = true;
          break;
        }
        options &= ~bit;
      }
      if (!extended) return false;
    }
  }
  return true;
}

MatroidIdentifyResult identify_bases(const TwoBasesMatroid& m,
                                     MatroidOracleKind kind, Rng& rng,
                                     const MatroidIdentifyParams& params) {
  MatroidIdentifyResult result;
  std::optional<HiddenPairInstance> pair;
  if (kind == MatroidOracleKind::kRank) {
    MatroidRankOracle oracle(m);
    pair = maxip_identify(oracle.string_oracle(), params.omega, params.mode, rng);
    result.ledger = oracle.snapshot();
  } else {
    MatroidIndependenceOracle oracle(m);
    pair = subset_identify(oracle.string_oracle(), rng, params.grover,
                           params.k_override);
    result.ledger = oracle.snapshot();
  }
  if (pair) {
    result.bases = {chi_inverse(pair->s()), chi_inverse(pair->s_prime())};
    result.success = *pair == m.hidden_pair();
  }
  return result;
}

}  // namespace hsp
