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

#include "hsp/oracles.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "hsp/wht.hpp"

namespace hsp {

MaxIPOracle::MaxIPOracle(HiddenPairInstance instance)
    : instance_(std::move(instance)) {}

int MaxIPOracle::value(const BitString& x) {
  if (x.length() != n())
    throw std::invalid_argument("MaxIPOracle: query length != n");
  ledger_.charge_classical();
  const int r = std::max(inner_product(x, instance_.s()),
                         inner_product(x, instance_.s_prime()));
  // r <= n-1 always (s != s' rules out a common all-ones overlap); a
  // violation means the instance invariants were bypassed.
  if (r > n() - 1) throw std::logic_error("MaxIPOracle: r(x) > n-1");
  return r;
}

BitString MaxIPOracle::extract_sample(SampleMode mode, Rng& rng) {
  ledger_.charge_superposed();
  if (mode == SampleMode::kAnalytic)
    return analytic_extract_sample(instance_, rng);
  if (!exact_law_) exact_law_ = wht_distribution(instance_);
  return exact_law_->sample(rng);
}

SubsetOracle::SubsetOracle(HiddenPairInstance instance)
    : instance_(std::move(instance)) {}

int SubsetOracle::value(const BitString& x) {
  if (x.length() != n())
    throw std::invalid_argument("SubsetOracle: query length != n");
  ledger_.charge_classical();
  return peek_marked(x) ? 1 : 0;
}

bool SubsetOracle::peek_marked(const BitString& x) const {
  return x.is_subset_of(instance_.s()) || x.is_subset_of(instance_.s_prime());
}

BitString SubsetOracle::or_sample(int k, Rng& rng) {
  if (k < 0 || k > n())
    throw std::invalid_argument("SubsetOracle: threshold k must lie in [0, n]");
  ledger_.charge_superposed(static_cast<std::uint64_t>(k));
  if (!ball_cache_ || ball_cache_->spec().k != k)
    ball_cache_ = BallLaw::shared(n(), k);
  return ball_sample(*ball_cache_, instance_.join(), rng);
}

int r_piecewise(const HiddenPairInstance& instance, const BitString& x) {
  if (x.length() != instance.n())
    throw std::invalid_argument("r_piecewise: query length != n");
  const auto [i, j] = instance.differing_positions();
  const int base = inner_product(x, instance.meet());
  return (x.get(i) || x.get(j)) ? base + 1 : base;
}

int or_via_unit_queries(SubsetOracle& oracle, const BitString& x) {
  if (x.length() != oracle.n())
    throw std::invalid_argument("or_via_unit_queries: query length != n");
  int acc = 0;
  for (const int j : x.one_positions())
    acc += oracle.value(unit_string(oracle.n(), j));
  return acc;
}

}  // namespace hsp
