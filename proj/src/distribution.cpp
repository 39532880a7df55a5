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

#include "hsp/distribution.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hsp {

namespace {

BigInt common_denominator(const std::vector<Rational>& values) {
  BigInt d = 1;
  for (const auto& v : values) d = boost::multiprecision::lcm(d, denominator(v));
  return d;
}

}  // namespace

OutcomeDistribution OutcomeDistribution::sparse(
    int n, std::map<BitString, Rational> support) {
  OutcomeDistribution dist;
  dist.n_ = n;
  dist.sparse_ = true;
  dist.support_ = std::move(support);
  for (const auto& [outcome, p] : dist.support_) {
    if (outcome.length() != n)
      throw std::invalid_argument("OutcomeDistribution: outcome length != n");
    if (p < 0)
      throw std::invalid_argument("OutcomeDistribution: negative probability");
  }
  dist.build_sampler();
  return dist;
}

OutcomeDistribution OutcomeDistribution::weight_classes(
    BitString center, std::vector<Rational> per_string) {
  OutcomeDistribution dist;
  dist.n_ = center.length();
  dist.sparse_ = false;
  dist.center_ = std::move(center);
  dist.per_string_ = std::move(per_string);
  if (dist.per_string_.size() != static_cast<std::size_t>(dist.n_) + 1)
    throw std::invalid_argument(
        "OutcomeDistribution: need one class per distance 0..n");
  dist.build_sampler();
  return dist;
}

void OutcomeDistribution::build_sampler() {
  std::vector<Rational> masses;
  if (sparse_) {
    masses.reserve(support_.size());
    sparse_order_.clear();
    for (const auto& [outcome, p] : support_) {
      masses.push_back(p);
      sparse_order_.push_back(&outcome);
    }
  } else {
    masses.reserve(per_string_.size());
    for (int d = 0; d <= n_; ++d)
      masses.push_back(per_string_[static_cast<std::size_t>(d)] *
                       Rational(class_size(d)));
  }
  denominator_ = common_denominator(masses);
  cumulative_.clear();
  cumulative_.reserve(masses.size());
  BigInt acc = 0;
  for (const auto& m : masses) {
    acc += numerator(m) * (denominator_ / denominator(m));
    cumulative_.push_back(acc);
  }
  if (acc != denominator_)
    throw std::logic_error("OutcomeDistribution: total mass is not exactly 1");
}

const std::map<BitString, Rational>& OutcomeDistribution::support() const {
  if (!sparse_)
    throw std::logic_error("OutcomeDistribution: not in sparse form");
  return support_;
}

const BitString& OutcomeDistribution::center() const {
  if (sparse_)
    throw std::logic_error("OutcomeDistribution: not in weight-class form");
  return center_;
}

const std::vector<Rational>& OutcomeDistribution::per_string_by_distance()
    const {
  if (sparse_)
    throw std::logic_error("OutcomeDistribution: not in weight-class form");
  return per_string_;
}

BigInt OutcomeDistribution::class_size(int d) const {
  return binomial(static_cast<unsigned>(n_), static_cast<unsigned>(d));
}

Rational OutcomeDistribution::probability_of(const BitString& outcome) const {
  if (outcome.length() != n_)
    throw std::invalid_argument("OutcomeDistribution: outcome length != n");
  if (sparse_) {
    const auto it = support_.find(outcome);
    return it == support_.end() ? Rational(0) : it->second;
  }
  return per_string_[static_cast<std::size_t>(
      hamming_distance(outcome, center_))];
}

Rational OutcomeDistribution::total_mass() const {
  Rational total = 0;
  if (sparse_) {
    for (const auto& [outcome, p] : support_) total += p;
  } else {
    for (int d = 0; d <= n_; ++d)
      total += per_string_[static_cast<std::size_t>(d)] * Rational(class_size(d));
  }
  return total;
}

BitString OutcomeDistribution::sample(Rng& rng) const {
  const BigInt u = rng.below_big(denominator_);
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  const auto idx = static_cast<std::size_t>(it - cumulative_.begin());
  if (sparse_) return *sparse_order_[idx];

  const int d = static_cast<int>(idx);
  if (d == 0) return center_;
  // Uniform string at distance d: flip a uniform d-subset of positions.
  std::vector<int> positions(static_cast<std::size_t>(n_));
  for (int p = 0; p < n_; ++p) positions[static_cast<std::size_t>(p)] = p + 1;
  BitString out = center_;
  for (int i = 0; i < d; ++i) {
    const auto pick =
        i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_ - i)));
    std::swap(positions[static_cast<std::size_t>(i)],
              positions[static_cast<std::size_t>(pick)]);
    const int p = positions[static_cast<std::size_t>(i)];
    out.set(p, !out.get(p));
  }
  return out;
}

OutcomeDistribution OutcomeDistribution::to_sparse() const {
  if (sparse_) return *this;
  if (n_ > 20)
    throw std::domain_error(
        "OutcomeDistribution::to_sparse: n > 20 would enumerate 2^n outcomes");
  std::map<BitString, Rational> support;
  for (std::uint64_t idx = 0; idx < (1ull << n_); ++idx) {
    BitString outcome = BitString::from_index(n_, idx);
    const Rational p =
        per_string_[static_cast<std::size_t>(hamming_distance(outcome, center_))];
    if (p != 0) support.emplace(std::move(outcome), p);
  }
  return OutcomeDistribution::sparse(n_, std::move(support));
}

}  // namespace hsp
