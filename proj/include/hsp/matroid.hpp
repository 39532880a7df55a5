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

#ifndef HSP_MATROID_HPP_
#define HSP_MATROID_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "hsp/algorithms.hpp"
#include "hsp/bitstring.hpp"
#include "hsp/instance.hpp"
#include "hsp/oracles.hpp"
#include "hsp/rng.hpp"

namespace hsp {

// A matroid with exactly two bases, over ground set {1..n}. Its two bases
// necessarily have equal size and symmetric difference of size 2, so under
// the indicator map chi the rank oracle IS the max-inner-product oracle and
// the independence oracle IS the sub-set oracle; identifying the bases is the
// hidden-pair problem on {chi(B), chi(B')}. The independence family is kept
// implicit (downward closure of the two bases); materializing it would be
// exponential and the oracles only ever depend on B and B'.

/// A subset of the ground set {1..n}, members sorted ascending, 1-based.
struct GroundSubset {
  int n = 0;
  std::vector<int> members;
};

/// chi(A): the n-bit indicator vector of A; weight(chi(A)) = |A|.
BitString chi(const GroundSubset& subset);
GroundSubset chi_inverse(const BitString& indicator);

class TwoBasesMatroid {
 public:
  /// Validates |B| = |B'|, |B symdiff B'| = 2 and n >= 3 (n = 2 is the
  /// trivial excluded case). Throws invalid_argument naming the violated
  /// invariant otherwise.
  TwoBasesMatroid(const GroundSubset& base_a, const GroundSubset& base_b);
  static TwoBasesMatroid from_indicators(const BitString& a, const BitString& b);

  int n() const { return pair_.n(); }
  int rank() const { return pair_.base_weight(); }

  GroundSubset base_a() const { return chi_inverse(pair_.s()); }
  GroundSubset base_b() const { return chi_inverse(pair_.s_prime()); }

  /// The bases as a hidden string pair (ground truth; oracles are built on
  /// top of this).
  const HiddenPairInstance& hidden_pair() const { return pair_; }

 private:
  explicit TwoBasesMatroid(HiddenPairInstance pair) : pair_(std::move(pair)) {}

  HiddenPairInstance pair_;
};

/// Rank oracle r(A) = max(|A AND B|, |A AND B'|), delegated to a
/// MaxIPOracle on the indicator pair so the query ledger is shared with any
/// string-level algorithm run on the same handle.
class MatroidRankOracle {
 public:
  explicit MatroidRankOracle(const TwoBasesMatroid& m)
      : inner_(m.hidden_pair()) {}

  int rank(const GroundSubset& subset) { return inner_.value(chi(subset)); }

  MaxIPOracle& string_oracle() { return inner_; }
  LedgerSnapshot snapshot() const { return inner_.snapshot(); }

 private:
  MaxIPOracle inner_;
};

/// Independence oracle: 1 iff A is contained in one of the bases; delegated
/// to a SubsetOracle on the indicator pair.
class MatroidIndependenceOracle {
 public:
  explicit MatroidIndependenceOracle(const TwoBasesMatroid& m)
      : inner_(m.hidden_pair()) {}

  int independent(const GroundSubset& subset) {
    return inner_.value(chi(subset));
  }

  SubsetOracle& string_oracle() { return inner_; }
  LedgerSnapshot snapshot() const { return inner_.snapshot(); }

 private:
  SubsetOracle inner_;
};

/// Brute-force check of the independence axioms (empty set independent,
/// downward closure, exchange) over the family generated by the two bases.
/// Exponential; capped at n <= 16.
bool validate_matroid_axioms(const TwoBasesMatroid& m, int cap = 16);

enum class MatroidOracleKind { kRank, kIndependence };

struct MatroidIdentifyParams {
  int omega = 7;
  SampleMode mode = SampleMode::kAnalytic;
  GroverPolicy grover;
  std::optional<int> k_override;
};

struct MatroidIdentifyResult {
  std::optional<std::pair<GroundSubset, GroundSubset>> bases;
  LedgerSnapshot ledger;
  bool success = false;  // bases found and equal to the matroid's
};

/// Identify the two bases through the chosen oracle: the rank kind runs the
/// max-inner-product identification, the independence kind the sub-set one;
/// results map back through chi^-1. Ledgers and statistics are exactly those
/// of the underlying string algorithm.
MatroidIdentifyResult identify_bases(const TwoBasesMatroid& m,
                                     MatroidOracleKind kind, Rng& rng,
                                     const MatroidIdentifyParams& params = {});

}  // namespace hsp

#endif  // HSP_MATROID_HPP_
