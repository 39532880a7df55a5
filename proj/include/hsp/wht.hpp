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

#ifndef HSP_WHT_HPP_
#define HSP_WHT_HPP_

#include <array>
#include <cstdint>
#include <span>

#include "hsp/distribution.hpp"
#include "hsp/instance.hpp"

namespace hsp {

// Exact amplitude engine for the one-query max-inner-product extraction
// circuit. The m-qubit answer register only ever contributes the phase
// (-1)^r(x), so it is never materialized: the engine builds the +-1 vector
// v[x] = (-1)^r(x) over all 2^n inputs, applies the fast Walsh-Hadamard
// transform, and squares. Everything is integer arithmetic; probabilities
// come out as exact rationals hat^2 / 4^n.

/// Hard cap for the exact 2^n engine (16 MiB of int32 amplitudes).
inline constexpr int kWhtMaxBits = 22;

/// In-place unnormalized Walsh-Hadamard transform; size must be a power of 2.
/// Output: a[t] = sum_x (-1)^popcount(x AND t) * in[x].
void fwht_inplace(std::span<std::int32_t> a);

/// The exact measurement law of one extraction query: support is
/// {s, s', s AND s', s OR s'} with probability 1/4 each. Requires
/// n <= kWhtMaxBits; larger sizes must use the analytic law.
OutcomeDistribution wht_distribution(const HiddenPairInstance& instance);

/// The four possible extraction outcomes {s, s', meet, join}.
std::array<BitString, 4> extraction_support(const HiddenPairInstance& instance);

/// One draw from the analytic extraction law (uniform over the 4 outcomes);
/// valid for any n, provably the same law as wht_distribution.
BitString analytic_extract_sample(const HiddenPairInstance& instance, Rng& rng);

}  // namespace hsp

#endif  // HSP_WHT_HPP_
