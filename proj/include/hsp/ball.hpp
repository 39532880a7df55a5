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

#ifndef HSP_BALL_HPP_
#define HSP_BALL_HPP_

#include <memory>
#include <vector>

#include "hsp/bigint.hpp"
#include "hsp/bitstring.hpp"
#include "hsp/distribution.hpp"
#include "hsp/rng.hpp"

namespace hsp {

// Exact engine for the Hamming-ball phase-kickback circuit: prepare the
// uniform superposition over {x : |x| <= k}, pick up the phase (-1)^(x.t),
// transform back. The outcome amplitude depends only on d = |t XOR tau|:
//
//   p(d) = ( sum_{i<=k} K_i(d) )^2 / (M_k * 2^n)
//
// per string at distance d, where K_i is the binary Krawtchouk polynomial
// K_i(d) = sum_j (-1)^j C(d,j) C(n-d,i-j) and M_k = sum_{i<=k} C(n,i) is the
// ball size. This weight-class decomposition keeps the law exact at n = 1000,
// far beyond anything a 2^n state vector could reach. In particular the
// outcome tau = t has probability exactly M_k / 2^n.

/// n, threshold k, and the ball size M_k = sum_{i<=k} C(n,i).
struct BallSpec {
  int n = 0;
  int k = 0;
  BigInt m_k;
};

BallSpec make_ball_spec(int n, int k);

/// floor(n/2 + sqrt(n)), computed exactly in integers.
int default_ball_threshold(int n);

/// floor(n/2 + lambda*sqrt(n)), clamped to [0, n].
int ball_threshold_lambda(int n, double lambda);

/// M_k / 2^n: the exact probability that one ball query returns t itself.
Rational t_recovery_probability(int n, int k);

/// Gaussian-tail bound 1/2 * exp(-2*lambda^2) on the failure probability of
/// one ball query at threshold k = n/2 + lambda*sqrt(n) (large n).
double recovery_failure_bound(double lambda);

/// The exact weight-class law for one ball query at parameters (n, k),
/// center-independent. Sampling uses exact big-integer inverse CDF over the
/// distance classes. Instances of this class are immutable and shareable.
class BallLaw {
 public:
  BallLaw(int n, int k);

  /// Process-wide cache keyed by (n, k); the table build is O(n^2) big-int
  /// operations and is reused across trials.
  static std::shared_ptr<const BallLaw> shared(int n, int k);

  const BallSpec& spec() const { return spec_; }

  /// S_k(d) = sum_{i<=k} K_i(d); S_k(0) = M_k.
  const BigInt& partial_kraw_sum(int d) const;

  /// Probability of one specific outcome at distance d from the center.
  Rational per_string_probability(int d) const;
  /// Probability that the outcome lands at distance d (times C(n,d) strings).
  Rational class_probability(int d) const;
  /// per_string_probability(0) == M_k / 2^n.
  Rational retrieval_probability() const;

  int sample_distance(Rng& rng) const;

  OutcomeDistribution distribution(const BitString& center) const;

 private:
  BallSpec spec_;
  std::vector<BigInt> binomials_;      // C(n, d)
  std::vector<BigInt> partial_sums_;   // S_k(d)
  std::vector<BigInt> cumulative_;     // cumulative C(n,d) * S_k(d)^2
  BigInt denominator_;                 // M_k * 2^n
};

/// Exact measurement law of one ball query centered at t. Charges nothing;
/// metered access goes through SubsetOracle.
OutcomeDistribution ball_distribution(const BallSpec& spec, const BitString& t);

/// One measurement outcome: sample a distance class, then a uniform string at
/// that distance from t.
BitString ball_sample(const BallLaw& law, const BitString& t, Rng& rng);

}  // namespace hsp

#endif  // HSP_BALL_HPP_
