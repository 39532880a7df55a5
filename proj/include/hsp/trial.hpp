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

#ifndef HSP_TRIAL_HPP_
#define HSP_TRIAL_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hsp/algorithms.hpp"
#include "hsp/bigint.hpp"
#include "hsp/instance.hpp"
#include "hsp/oracles.hpp"

namespace hsp {

// Batch experiment runner. Trial i of a run draws everything from the stream
// seed XOR i, so any report replays bit-identically from its embedded config,
// independent of worker count (workers only partition the index space; output
// order is by trial index).

inline constexpr const char* kAlgoMaxIP = "maxip";
inline constexpr const char* kAlgoSubset = "subset";
inline constexpr const char* kAlgoClassicalMaxIP = "classical-maxip";
inline constexpr const char* kAlgoClassicalSubset = "classical-subset";

struct ExperimentConfig {
  std::string algorithm = kAlgoMaxIP;
  std::vector<int> sizes;            // n sweep, each >= 3
  std::uint64_t trials = 1;
  int omega = 7;                     // extraction samples per maxip run
  std::optional<int> k_override;     // ball threshold override
  std::optional<double> lambda;      // k = floor(n/2 + lambda*sqrt(n))
  SampleMode mode = SampleMode::kAnalytic;
  Seed seed = 0;
  int workers = 1;
  unsigned grover_rounds = 8;
  unsigned null_retries = 0;         // extra attempts after a NULL outcome
};

/// The ball threshold the config implies for size n.
int resolve_threshold(const ExperimentConfig& config, int n);

void validate(const ExperimentConfig& config);

struct TrialReport {
  std::string algorithm;
  int n = 0;
  std::uint64_t trial = 0;
  unsigned attempt = 0;
  Seed stream_seed = 0;
  std::optional<HiddenPairInstance> instance;
  LedgerSnapshot ledger;
  std::optional<HiddenPairInstance> output;
  bool success = false;
  double wall_time_us = 0;  // informational; excluded from replayable output
};

struct SummaryRow {
  std::string algorithm;
  int n = 0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double rate = 0;
  double stderr_rate = 0;
  double mean_queries = 0;
  double mean_classical_baseline = 0;
  std::optional<Rational> exact_success;  // pure function of (n, omega, k)
  BigInt instance_count;
  unsigned maxip_lower_bound = 0;
  unsigned subset_lower_bound = 0;
};

struct RunOutput {
  std::vector<TrialReport> reports;  // ordered by (n, trial, attempt)
  std::vector<SummaryRow> summary;   // one row per n
};

RunOutput run_experiment(const ExperimentConfig& config);

/// The exact success column for the summary: the multinomial closed law for
/// extraction runs, the t-recovery probability for ball runs, 1 for the
/// deterministic baselines.
std::optional<Rational> exact_success_probability(const ExperimentConfig& config,
                                                  int n);

}  // namespace hsp

#endif  // HSP_TRIAL_HPP_
