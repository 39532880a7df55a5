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

#include "hsp/ball.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace hsp {

namespace {

std::uint64_t isqrt_u64(std::uint64_t v) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

void check_params(int n, int k) {
  if (n < 1) throw std::invalid_argument("ball: n must be positive");
  if (k < 0 || k > n)
    throw std::invalid_argument("ball: threshold k must lie in [0, n]");
}

}  // namespace

BallSpec make_ball_spec(int n, int k) {
  check_params(n, k);
  BallSpec spec{n, k, 0};
  const auto row = binomial_row(static_cast<unsigned>(n));
  for (int i = 0; i <= k; ++i) spec.m_k += row[static_cast<std::size_t>(i)];
  return spec;
}

int default_ball_threshold(int n) {
  if (n < 1) throw std::invalid_argument("ball: n must be positive");
  // floor(n/2 + sqrt(n)) = (n + floor(2*sqrt(n))) / 2 = (n + isqrt(4n)) / 2.
  const auto u = isqrt_u64(4ull * static_cast<std::uint64_t>(n));
  const auto k = (static_cast<std::uint64_t>(n) + u) / 2;
  return static_cast<int>(std::min<std::uint64_t>(k, static_cast<std::uint64_t>(n)));
}

int ball_threshold_lambda(int n, double lambda) {
  if (n < 1) throw std::invalid_argument("ball: n must be positive");
  const double raw = n / 2.0 + lambda * std::sqrt(static_cast<double>(n));
  const auto k = static_cast<long long>(std::floor(raw));
  return static_cast<int>(std::clamp<long long>(k, 0, n));
}

Rational t_recovery_probability(int n, int k) {
  const BallSpec spec = make_ball_spec(n, k);
  return Rational(spec.m_k, pow2(static_cast<unsigned>(n)));
}

double recovery_failure_bound(double lambda) {
  return 0.5 * std::exp(-2.0 * lambda * lambda);
}

BallLaw::BallLaw(int n, int k) {
  check_params(n, k);
  spec_.n = n;
  spec_.k = k;
  binomials_ = binomial_row(static_cast<unsigned>(n));
  for (int i = 0; i <= k; ++i) spec_.m_k += binomials_[static_cast<std::size_t>(i)];
  denominator_ = spec_.m_k * pow2(static_cast<unsigned>(n));

  // S_k(d) = sum_{i<=k} K_i(d) via the three-term recurrence in the order i:
  // (i+1) K_{i+1}(d) = (n-2d) K_i(d) - (n-i+1) K_{i-1}(d). The division is
  // exact because Krawtchouk values are integers.
  partial_sums_.resize(static_cast<std::size_t>(n) + 1);
  for (int d = 0; d <= n; ++d) {
    BigInt k_prev = 0;          // K_{-1}
    BigInt k_cur = 1;           // K_0
    BigInt acc = k_cur;
    for (int i = 0; i < k; ++i) {
      BigInt k_next = (n - 2 * d) * k_cur - (n - i + 1) * k_prev;
      k_next /= i + 1;
      acc += k_next;
      k_prev = std::move(k_cur);
      k_cur = std::move(k_next);
    }
    partial_sums_[static_cast<std::size_t>(d)] = std::move(acc);
  }

  cumulative_.resize(static_cast<std::size_t>(n) + 1);
  BigInt acc = 0;
  for (int d = 0; d <= n; ++d) {
    const auto& s = partial_sums_[static_cast<std::size_t>(d)];
    acc += binomials_[static_cast<std::size_t>(d)] * s * s;
    cumulative_[static_cast<std::size_t>(d)] = acc;
  }
  // Parseval: sum_d C(n,d) S_k(d)^2 = M_k 2^n, i.e. the law has mass 1.
  if (acc != denominator_)
    throw std::logic_error("BallLaw: weight-class masses do not sum to 1");
}

std::shared_ptr<const BallLaw> BallLaw::shared(int n, int k) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const BallLaw>> cache;
  const std::scoped_lock lock(mutex);
  auto& slot = cache[{n, k}];
  if (!slot) slot = std::make_shared<const BallLaw>(n, k);
  return slot;
}

const BigInt& BallLaw::partial_kraw_sum(int d) const {
  return partial_sums_.at(static_cast<std::size_t>(d));
}

Rational BallLaw::per_string_probability(int d) const {
  const auto& s = partial_sums_.at(static_cast<std::size_t>(d));
  return Rational(s * s, denominator_);
}

Rational BallLaw::class_probability(int d) const {
  const auto& s = partial_sums_.at(static_cast<std::size_t>(d));
  return Rational(binomials_.at(static_cast<std::size_t>(d)) * s * s,
                  denominator_);
}

Rational BallLaw::retrieval_probability() const {
  return Rational(spec_.m_k, pow2(static_cast<unsigned>(spec_.n)));
}

int BallLaw::sample_distance(Rng& rng) const {
  const BigInt u = rng.below_big(denominator_);
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  return static_cast<int>(it - cumulative_.begin());
}

OutcomeDistribution BallLaw::distribution(const BitString& center) const {
  if (center.length() != spec_.n)
    throw std::invalid_argument("BallLaw: center length != n");
  std::vector<Rational> per_string;
  per_string.reserve(static_cast<std::size_t>(spec_.n) + 1);
  for (int d = 0; d <= spec_.n; ++d) per_string.push_back(per_string_probability(d));
  return OutcomeDistribution::weight_classes(center, std::move(per_string));
}

OutcomeDistribution ball_distribution(const BallSpec& spec, const BitString& t) {
  return BallLaw(spec.n, spec.k).distribution(t);
}

BitString ball_sample(const BallLaw& law, const BitString& t, Rng& rng) {
  if (t.length() != law.spec().n)
    throw std::invalid_argument("ball_sample: center length != n");
  const int n = law.spec().n;
  const int d = law.sample_distance(rng);
  if (d == 0) return t;
  std::vector<int> positions(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) positions[static_cast<std::size_t>(p)] = p + 1;
  BitString out = t;
  for (int i = 0; i < d; ++i) {
    const auto pick =
        i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
    std::swap(positions[static_cast<std::size_t>(i)],
              positions[static_cast<std::size_t>(pick)]);
    const int p = positions[static_cast<std::size_t>(i)];
    out.set(p, !out.get(p));
  }
  return out;
}

}  // namespace hsp
