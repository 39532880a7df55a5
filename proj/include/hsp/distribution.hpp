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

#ifndef HSP_DISTRIBUTION_HPP_
#define HSP_DISTRIBUTION_HPP_

#include <map>
#include <vector>

#include "hsp/bigint.hpp"
#include "hsp/bitstring.hpp"
#include "hsp/rng.hpp"

namespace hsp {

// Exact probability law over n-bit measurement outcomes, in one of two forms:
//
//   sparse       - explicit map outcome -> rational probability (only nonzero
//                  entries are stored);
//   weight_class - the probability of an outcome depends only on its Hamming
//                  distance d from a center string; stores one per-string
//                  rational for each d in [0, n]. The class at distance d has
//                  C(n, d) strings, so class mass = C(n, d) * per_string[d].
//                  This form stays exact at n = 1000 where 2^n vectors are
//                  impossible.
//
// Sampling is exact: a uniform big integer below the common denominator is
// drawn and walked through the cumulative numerators, so a seeded run replays
// bit-identically.
class OutcomeDistribution {
 public:
  static OutcomeDistribution sparse(int n,
                                    std::map<BitString, Rational> support);
  static OutcomeDistribution weight_classes(BitString center,
                                            std::vector<Rational> per_string);

  int n() const { return n_; }
  bool is_sparse() const { return sparse_; }

  const std::map<BitString, Rational>& support() const;
  const BitString& center() const;
  const std::vector<Rational>& per_string_by_distance() const;
  BigInt class_size(int d) const;

  Rational probability_of(const BitString& outcome) const;
  Rational total_mass() const;

  BitString sample(Rng& rng) const;

  /// Expand a weight-class law to sparse form (n <= 20; exponential).
  OutcomeDistribution to_sparse() const;

 private:
  OutcomeDistribution() = default;
  void build_sampler();

  int n_ = 0;
  bool sparse_ = true;
  std::map<BitString, Rational> support_;
  BitString center_;
  std::vector<Rational> per_string_;

  // cumulative numerators over a common denominator, for exact sampling
  BigInt denominator_;
  std::vector<BigInt> cumulative_;
  std::vector<const BitString*> sparse_order_;
};

}  // namespace hsp

#endif  // HSP_DISTRIBUTION_HPP_
