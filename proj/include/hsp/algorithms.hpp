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

#ifndef HSP_ALGORITHMS_HPP_
#define HSP_ALGORITHMS_HPP_

#include <optional>
#include <vector>

#include "hsp/bigint.hpp"
#include "hsp/bitstring.hpp"
#include "hsp/grover.hpp"
#include "hsp/instance.hpp"
#include "hsp/oracles.hpp"
#include "hsp/rng.hpp"

namespace hsp {

// The four identification procedures plus deterministic classical baselines
// and the information-theoretic lower-bound formulas. Every operation charges
// its oracle ledger exactly as documented; nothing reads the hidden pair
// except through the oracle.

/// One extraction sample (1 superposed query).
BitString maxip_extract(MaxIPOracle& oracle, SampleMode mode, Rng& rng);

/// The combination rule applied to a batch of extraction samples:
///   - two distinct equal-weight samples are the pair itself;
///   - two samples with weight difference 2 are meet and join; the pair is
///     rebuilt by setting each of their two differing positions on the meet.
/// Returns nothing when neither case occurs. Throws logic_error if a
/// weight-2-apart sample pair does not differ in exactly 2 positions (that
/// would mean a corrupted sampler, not a valid run).
std::optional<HiddenPairInstance> combine_extraction_samples(
    const std::vector<BitString>& samples);

/// omega extraction samples plus the combination rule; exactly omega
/// superposed queries. Returns nothing when the samples are inconclusive.
std::optional<HiddenPairInstance> maxip_identify(MaxIPOracle& oracle, int omega,
                                                 SampleMode mode, Rng& rng);

/// Exact success probability of maxip_identify with omega samples: the sum
/// of the multinomial weights omega!/(a!b!c!d!) 4^-omega over all outcome
/// tallies with ab > 0 or cd > 0.
Rational algorithm2_success_probability(int omega);

/// One ball query at threshold k (default floor(n/2 + sqrt(n))); returns the
/// measured candidate for t = s OR s'. k superposed queries. The candidate
/// equals t with probability exactly M_k / 2^n.
BitString subset_or_recover(SubsetOracle& oracle, int k, Rng& rng);
BitString subset_or_recover(SubsetOracle& oracle, Rng& rng);

/// All strings obtained from t by clearing exactly one 1 (weight(t) of them).
std::vector<BitString> shrink_candidates(const BitString& t);

/// Rotation-model Grover search for the marked elements among the candidates.
/// Schedule: assume 2 marked, then 1 after the first verified hit; each round
/// charges plan.iterations grover queries plus 1 classical verification.
/// Fails (complete = false) once policy.max_rounds rounds are spent.
GroverResult grover_find_marked(SubsetOracle& oracle,
                                const std::vector<BitString>& candidates,
                                Rng& rng, const GroverPolicy& policy = {});

/// Full sub-set-oracle identification: recover a candidate t, then Grover
/// over its one-bit shrinkings. Total charge: k superposed + grover
/// iterations + classical verifications. Returns nothing on failure.
std::optional<HiddenPairInstance> subset_identify(
    SubsetOracle& oracle, Rng& rng, const GroverPolicy& policy = {},
    std::optional<int> k_override = std::nullopt);

/// Deterministic baseline: learn t from n unit-string queries, then probe
/// the one-bit shrinkings of t until both members are found. Always exact;
/// ledger >= n.
HiddenPairInstance classical_subset_identify(SubsetOracle& oracle);

/// Deterministic adaptive baseline with the max-inner-product oracle:
/// unit-string queries give t (O_max(e_j) = t_j); then probing t with single
/// 1s cleared separates the two differing positions (value drops to |s| - 1
/// exactly on shared positions). Uses at most 2n - 2 queries; not claimed
/// optimal.
HiddenPairInstance classical_maxip_identify(MaxIPOracle& oracle);

struct LowerBounds {
  BigInt instance_count;  // N = n(n-1) 2^(n-3)
  unsigned maxip_bound;   // C_i(n) = ceil(log_n N)
  unsigned subset_bound;  // C_s(n) = ceil(log_2 N)
};

/// Exact decision-tree lower bounds for classical identification.
LowerBounds lower_bounds(int n);

}  // namespace hsp

#endif  // HSP_ALGORITHMS_HPP_
