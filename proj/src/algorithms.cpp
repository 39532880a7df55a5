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

#include "hsp/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "hsp/ball.hpp"

namespace hsp {

BitString maxip_extract(MaxIPOracle& oracle, SampleMode mode, Rng& rng) {
  return oracle.extract_sample(mode, rng);
}

std::optional<HiddenPairInstance> combine_extraction_samples(
    const std::vector<BitString>& samples) {
  // Case 1: two distinct samples of equal weight are s and s' themselves
  // (meet and join have weights one below and one above).
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      if (samples[i] != samples[j] &&
          samples[i].weight() == samples[j].weight())
        return HiddenPairInstance(samples[i], samples[j]);
    }
  }
  // Case 2: weights 2 apart means the heavier is the join, the lighter the
  // meet; the pair is the meet with either differing position set.
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = 0; j < samples.size(); ++j) {
      if (samples[i].weight() - samples[j].weight() != 2) continue;
      const BitString diff = samples[i] ^ samples[j];
      if (diff.weight() != 2)
        throw std::logic_error(
            "combine_extraction_samples: weight-2-apart samples must differ "
            "in exactly 2 positions; the sampler is corrupted");
      const auto positions = diff.one_positions();
      const int n = samples[i].length();
      return HiddenPairInstance(samples[j] | unit_string(n, positions[0]),
                                samples[j] | unit_string(n, positions[1]));
    }
  }
  return std::nullopt;
}

std::optional<HiddenPairInstance> maxip_identify(MaxIPOracle& oracle, int omega,
                                                 SampleMode mode, Rng& rng) {
  if (omega < 2)
    throw std::invalid_argument("maxip_identify: omega must be >= 2");
  std::vector<BitString> samples;
  samples.reserve(static_cast<std::size_t>(omega));
  for (int i = 0; i < omega; ++i)
    samples.push_back(oracle.extract_sample(mode, rng));
  return combine_extraction_samples(samples);
}

Rational algorithm2_success_probability(int omega) {
  if (omega < 1)
    throw std::invalid_argument(
        "algorithm2_success_probability: omega must be >= 1");
  const unsigned w = static_cast<unsigned>(omega);
  std::vector<BigInt> factorial(w + 1);
  factorial[0] = 1;
  for (unsigned i = 1; i <= w; ++i) factorial[i] = factorial[i - 1] * i;

  BigInt hits = 0;  // sum of multinomial coefficients over ab>0 or cd>0
  for (unsigned a = 0; a <= w; ++a) {
    for (unsigned b = 0; a + b <= w; ++b) {
      for (unsigned c = 0; a + b + c <= w; ++c) {
        const unsigned d = w - a - b - c;
        if (!((a > 0 && b > 0) || (c > 0 && d > 0))) continue;
        hits += factorial[w] / (factorial[a] * factorial[b] * factorial[c] *
                                factorial[d]);
      }
    }
  }
  return Rational(hits, pow2(2 * w));  // 4^-omega per ordered outcome sequence
}

BitString subset_or_recover(SubsetOracle& oracle, int k, Rng& rng) {
  return oracle.or_sample(k, rng);
}

BitString subset_or_recover(SubsetOracle& oracle, Rng& rng) {
  return oracle.or_sample(default_ball_threshold(oracle.n()), rng);
}

std::vector<BitString> shrink_candidates(const BitString& t) {
  std::vector<BitString> out;
  const auto ones = t.one_positions();
  out.reserve(ones.size());
  for (const int p : ones) {
    BitString candidate = t;
    candidate.set(p, false);
    out.push_back(std::move(candidate));
  }
  return out;
}

GroverResult grover_find_marked(SubsetOracle& oracle,
                                const std::vector<BitString>& candidates,
                                Rng& rng, const GroverPolicy& policy) {
  GroverResult result;
  std::vector<BitString> remaining = candidates;
  std::vector<bool> marked(remaining.size());
  for (std::size_t i = 0; i < remaining.size(); ++i)
    marked[i] = oracle.peek_marked(remaining[i]);  // physics, not a query

  // The searcher assumes 2 marked items, then 1 after the first verified hit;
  // the rotation law itself uses the true marked count.
  std::uint64_t assumed = 2;
  while (result.found.size() < 2 && result.rounds < policy.max_rounds &&
         !remaining.empty()) {
    const std::uint64_t space = remaining.size();
    const auto true_marked = static_cast<std::uint64_t>(
        std::count(marked.begin(), marked.end(), true));
    const GroverPlan plan = grover_plan(space, std::min(assumed, space));
    oracle.ledger().charge_grover(plan.iterations);
    result.grover_queries += plan.iterations;
    ++result.rounds;

    double hit_probability = 0;
    if (true_marked > 0) {
      const double theta = std::asin(std::sqrt(
          static_cast<double>(true_marked) / static_cast<double>(space)));
      const double amp = std::sin((2.0 * plan.iterations + 1.0) * theta);
      hit_probability = amp * amp;
    }

    // Measure: a marked index with the rotation probability, sharing mass
    // uniformly inside each group.
    std::size_t sampled;
    const bool hit = rng.real01() < hit_probability;
    const std::uint64_t group = hit ? true_marked : space - true_marked;
    std::uint64_t nth = group > 0 ? rng.below(group) : 0;
    sampled = remaining.size();
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      if (marked[i] != hit) continue;
      if (nth == 0) {
        sampled = i;
        break;
      }
      --nth;
    }
    if (sampled == remaining.size()) break;  // no outcome possible (all same group)

    const bool verified = oracle.value(remaining[sampled]) == 1;
    ++result.verification_queries;
    if (verified) {
      result.found.push_back(remaining[sampled]);
      remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(sampled));
      marked.erase(marked.begin() + static_cast<std::ptrdiff_t>(sampled));
      assumed = 1;
    }
  }
  result.complete = result.found.size() == 2;
  return result;
}

std::optional<HiddenPairInstance> subset_identify(SubsetOracle& oracle,
                                                  Rng& rng,
                                                  const GroverPolicy& policy,
                                                  std::optional<int> k_override) {
  const int k = k_override.value_or(default_ball_threshold(oracle.n()));
  const BitString t_hat = oracle.or_sample(k, rng);
  const std::vector<BitString> candidates = shrink_candidates(t_hat);
  if (candidates.size() < 2) return std::nullopt;
  const GroverResult found = grover_find_marked(oracle, candidates, rng, policy);
  if (!found.complete) return std::nullopt;
  return HiddenPairInstance(found.found[0], found.found[1]);
}

HiddenPairInstance classical_subset_identify(SubsetOracle& oracle) {
  const int n = oracle.n();
  BitString t(n);
  for (int j = 1; j <= n; ++j)
    if (oracle.value(unit_string(n, j)) == 1) t.set(j, true);

  std::vector<BitString> found;
  for (const BitString& candidate : shrink_candidates(t)) {
    if (oracle.value(candidate) == 1) {
      found.push_back(candidate);
      if (found.size() == 2) break;
    }
  }
  return {found.at(0), found.at(1)};
}

HiddenPairInstance classical_maxip_identify(MaxIPOracle& oracle) {
  const int n = oracle.n();
  // Unit probes: O_max(e_j) = max(s_j, s'_j) = t_j.
  BitString t(n);
  for (int j = 1; j <= n; ++j)
    if (oracle.value(unit_string(n, j)) == 1) t.set(j, true);
  const int base_weight = t.weight() - 1;

  // Probe t with one 1 cleared: the value stays at |s| exactly when the
  // cleared position is one of the two differing positions, and drops to
  // |s| - 1 on shared positions. Stop early once both are pinned; the tail
  // is inferred when the remainder is forced.
  const auto ones = t.one_positions();
  std::vector<int> differing;
  for (std::size_t idx = 0; idx < ones.size() && differing.size() < 2; ++idx) {
    const auto remaining = ones.size() - idx;
    if (differing.size() + remaining == 2) {
      // Every remaining position must be a differing one.
      for (std::size_t r = idx; r < ones.size(); ++r)
        differing.push_back(ones[r]);
      break;
    }
    BitString probe = t;
    probe.set(ones[idx], false);
    if (oracle.value(probe) == base_weight) differing.push_back(ones[idx]);
  }

  BitString s = t;
  s.set(differing.at(0), false);
  BitString s_prime = t;
  s_prime.set(differing.at(1), false);
  return {std::move(s), std::move(s_prime)};
}

LowerBounds lower_bounds(int n) {
  if (n < 3) throw std::invalid_argument("lower_bounds: n must be >= 3");
  LowerBounds out;
  out.instance_count = instance_count(n);
  out.maxip_bound = ceil_log_base(static_cast<unsigned>(n), out.instance_count);
  out.subset_bound = ceil_log2(out.instance_count);
  return out;
}

}  // namespace hsp
