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

#ifndef HSP_ORACLES_HPP_
#define HSP_ORACLES_HPP_

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "hsp/ball.hpp"
#include "hsp/bitstring.hpp"
#include "hsp/distribution.hpp"
#include "hsp/grover.hpp"
#include "hsp/instance.hpp"
#include "hsp/rng.hpp"

namespace hsp {

// Ground-truth oracles with exact query metering. Identification algorithms
// receive only the oracle handle, never the instance: everything they learn
// flows through a metered call. Charging policy:
//   - one classical value() call            -> 1 classical query
//   - one extraction circuit application    -> 1 superposed query
//   - one ball circuit application at k     -> k superposed queries
//   - one Grover iteration                  -> 1 grover query
// Counters are atomic so independent trials may share a read-only instance
// while each owns its ledger.

struct LedgerSnapshot {
  std::uint64_t classical = 0;
  std::uint64_t superposed = 0;
  std::uint64_t grover = 0;

  std::uint64_t total() const { return classical + superposed + grover; }

  bool operator==(const LedgerSnapshot&) const = default;
};

class QueryLedger {
 public:
  void charge_classical(std::uint64_t q = 1) { classical_ += q; }
  void charge_superposed(std::uint64_t q = 1) { superposed_ += q; }
  void charge_grover(std::uint64_t q = 1) { grover_ += q; }

  LedgerSnapshot snapshot() const {
    return {classical_.load(), superposed_.load(), grover_.load()};
  }
  std::uint64_t total() const { return snapshot().total(); }

 private:
  std::atomic<std::uint64_t> classical_{0};
  std::atomic<std::uint64_t> superposed_{0};
  std::atomic<std::uint64_t> grover_{0};
};

/// How an extraction sample is produced: kExact builds the full 2^n
/// amplitude law and samples it (n <= kWhtMaxBits); kAnalytic samples the
/// proven closed-form law directly (any n). Identical distributions.
enum class SampleMode { kExact, kAnalytic };

class MaxIPOracle {
 public:
  explicit MaxIPOracle(HiddenPairInstance instance);

  int n() const { return instance_.n(); }

  /// O_max(x) = max(x.s, x.s'); one classical query.
  int value(const BitString& x);

  /// One application of the extraction circuit followed by measurement:
  /// a sample from the uniform law on {s, s', s AND s', s OR s'}.
  /// One superposed query.
  BitString extract_sample(SampleMode mode, Rng& rng);

  QueryLedger& ledger() { return ledger_; }
  LedgerSnapshot snapshot() const { return ledger_.snapshot(); }

 private:
  HiddenPairInstance instance_;
  QueryLedger ledger_;
  std::optional<OutcomeDistribution> exact_law_;  // lazy, for kExact
};

class SubsetOracle {
 public:
  explicit SubsetOracle(HiddenPairInstance instance);

  int n() const { return instance_.n(); }

  /// O_sub(x) = 1 iff Idx(x) is a subset of Idx(s) or of Idx(s');
  /// one classical query.
  int value(const BitString& x);

  /// One application of the ball circuit at threshold k followed by
  /// measurement; k superposed queries.
  BitString or_sample(int k, Rng& rng);

  QueryLedger& ledger() { return ledger_; }
  LedgerSnapshot snapshot() const { return ledger_.snapshot(); }

 private:
  // Simulation-side ground truth for the Grover rotation model; not metered.
  friend GroverResult grover_find_marked(SubsetOracle& oracle,
                                         const std::vector<BitString>& candidates,
                                         Rng& rng, const GroverPolicy& policy);

  bool peek_marked(const BitString& x) const;

  HiddenPairInstance instance_;
  QueryLedger ledger_;
  std::shared_ptr<const BallLaw> ball_cache_;
};

/// The closed form of O_max under the promise: s0.x on inputs with zeros at
/// both differing positions, s0.x + 1 otherwise (s0 = s AND s'). Equals
/// max(x.s, x.s') on every input; does not touch any counter.
int r_piecewise(const HiddenPairInstance& instance, const BitString& x);

/// x.t for t = s OR s', computed with weight(x) classical unit-string
/// queries (O_sub(e_j) = t_j).
int or_via_unit_queries(SubsetOracle& oracle, const BitString& x);

}  // namespace hsp

#endif  // HSP_ORACLES_HPP_
