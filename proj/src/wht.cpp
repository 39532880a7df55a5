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

#include "hsp/wht.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace hsp {

void fwht_inplace(std::span<std::int32_t> a) {
  const std::size_t size = a.size();
  if (size == 0 || (size & (size - 1)) != 0)
    throw std::invalid_argument("fwht_inplace: size must be a power of two");
  for (std::size_t len = 1; len < size; len <<= 1) {
    for (std::size_t i = 0; i < size; i += len << 1) {
      for (std::size_t j = i; j < i + len; ++j) {
        const std::int32_t x = a[j];
        const std::int32_t y = a[j + len];
        a[j] = x + y;
        a[j + len] = x - y;
      }
    }
  }
}

OutcomeDistribution wht_distribution(const HiddenPairInstance& instance) {
  const int n = instance.n();
  if (n > kWhtMaxBits)
    throw std::domain_error(
        "wht_distribution: n exceeds the exact-simulation cap; "
        "use the analytic law");
  const auto s = static_cast<std::uint32_t>(instance.s().to_index());
  const auto sp = static_cast<std::uint32_t>(instance.s_prime().to_index());
  const std::size_t size = std::size_t{1} << n;

  // v[x] = (-1)^r(x); |hat| <= 2^n < 2^31, so int32 stays exact.
  std::vector<std::int32_t> v(size);
  for (std::size_t x = 0; x < size; ++x) {
    const auto xi = static_cast<std::uint32_t>(x);
    const int r = std::max(std::popcount(xi & s), std::popcount(xi & sp));
    v[x] = (r & 1) ? -1 : 1;
  }
  fwht_inplace(v);

  const BigInt denom = pow2(static_cast<unsigned>(2 * n));
  std::map<BitString, Rational> support;
  for (std::size_t tau = 0; tau < size; ++tau) {
    if (v[tau] == 0) continue;
    const BigInt hat = v[tau];
    support.emplace(BitString::from_index(n, tau), Rational(hat * hat, denom));
  }
  return OutcomeDistribution::sparse(n, std::move(support));
}

std::array<BitString, 4> extraction_support(const HiddenPairInstance& instance) {
  return {instance.s(), instance.s_prime(), instance.meet(), instance.join()};
}

BitString analytic_extract_sample(const HiddenPairInstance& instance,
                                  Rng& rng) {
  const auto outcomes = extraction_support(instance);
  return outcomes[rng.below(4)];
}

}  // namespace hsp
