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

#include "hsp/trial.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "hsp/ball.hpp"

namespace hsp {

namespace {

bool known_algorithm(const std::string& name) {
  return name == kAlgoMaxIP || name == kAlgoSubset ||
         name == kAlgoClassicalMaxIP || name == kAlgoClassicalSubset;
}

/// Stream for retry attempt a > 0 of a trial; attempt 0 is the plain
/// seed XOR trial contract.
Seed attempt_seed(Seed seed, std::uint64_t trial, unsigned attempt) {
  const Seed base = trial_stream_seed(seed, trial);
  if (attempt == 0) return base;
  return SplitMix64(base + attempt).next();
}

TrialReport run_one(const ExperimentConfig& config, int n, std::uint64_t trial,
                    unsigned attempt) {
  TrialReport report;
  report.algorithm = config.algorithm;
  report.n = n;
  report.trial = trial;
  report.attempt = attempt;
  report.stream_seed = attempt_seed(config.seed, trial, attempt);

  const auto start = std::chrono::steady_clock::now();
  Rng rng(report.stream_seed);
  HiddenPairInstance instance = random_instance(n, rng);
  report.instance = instance;

  if (config.algorithm == kAlgoMaxIP) {
    MaxIPOracle oracle(instance);
    report.output = maxip_identify(oracle, config.omega, config.mode, rng);
    report.ledger = oracle.snapshot();
  } else if (config.algorithm == kAlgoSubset) {
    SubsetOracle oracle(instance);
    report.output = subset_identify(oracle, rng,
                                    GroverPolicy{config.grover_rounds},
                                    config.k_override
                                        ? config.k_override
                                        : (config.lambda
                                               ? std::optional<int>(
                                                     ball_threshold_lambda(
                                                         n, *config.lambda))
                                               : std::nullopt));
    report.ledger = oracle.snapshot();
  } else if (config.algorithm == kAlgoClassicalMaxIP) {
    MaxIPOracle oracle(instance);
    report.output = classical_maxip_identify(oracle);
    report.ledger = oracle.snapshot();
  } else {
    SubsetOracle oracle(instance);
    report.output = classical_subset_identify(oracle);
    report.ledger = oracle.snapshot();
  }

  report.success = report.output.has_value() && *report.output == instance;
  report.wall_time_us =
      std::chrono::duration<double, std::micro>(
          std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

/// The matching deterministic baseline's total queries on this instance.
std::uint64_t baseline_queries(const ExperimentConfig& config,
                               const HiddenPairInstance& instance) {
  if (config.algorithm == kAlgoSubset ||
      config.algorithm == kAlgoClassicalSubset) {
    SubsetOracle oracle(instance);
    classical_subset_identify(oracle);
    return oracle.snapshot().total();
  }
  MaxIPOracle oracle(instance);
  classical_maxip_identify(oracle);
  return oracle.snapshot().total();
}

}  // namespace

int resolve_threshold(const ExperimentConfig& config, int n) {
  if (config.k_override) return *config.k_override;
  if (config.lambda) return ball_threshold_lambda(n, *config.lambda);
  return default_ball_threshold(n);
}

void validate(const ExperimentConfig& config) {
  if (!known_algorithm(config.algorithm))
    throw std::invalid_argument("config: unknown algorithm '" +
                                config.algorithm + "'");
  if (config.sizes.empty())
    throw std::invalid_argument("config: at least one n is required");
  for (const int n : config.sizes) {
    if (n < 3) throw std::invalid_argument("config: every n must be >= 3");
    const int k = resolve_threshold(config, n);
    if (k < 0 || k > n)
      throw std::invalid_argument("config: ball threshold outside [0, n]");
  }
  if (config.trials < 1)
    throw std::invalid_argument("config: trials must be >= 1");
  if (config.omega < 2)
    throw std::invalid_argument("config: omega must be >= 2");
  if (config.workers < 1)
    throw std::invalid_argument("config: workers must be >= 1");
  if (config.grover_rounds < 1)
    throw std::invalid_argument("config: grover rounds must be >= 1");
}

std::optional<Rational> exact_success_probability(
    const ExperimentConfig& config, int n) {
  if (config.algorithm == kAlgoMaxIP)
    return algorithm2_success_probability(config.omega);
  if (config.algorithm == kAlgoSubset)
    // t-recovery probability; the Grover stage adds no closed form.
    return t_recovery_probability(n, resolve_threshold(config, n));
  return Rational(1);  // deterministic baselines
}

RunOutput run_experiment(const ExperimentConfig& config) {
  validate(config);
  RunOutput out;

  for (const int n : config.sizes) {
    if (config.algorithm == kAlgoSubset) {
      BallLaw::shared(n, resolve_threshold(config, n));  // build table once
    }

    std::vector<std::vector<TrialReport>> per_trial(config.trials);
    std::vector<std::uint64_t> baseline(config.trials);

    const auto worker = [&](std::uint64_t begin, std::uint64_t end) {
      for (std::uint64_t trial = begin; trial < end; ++trial) {
        auto& attempts = per_trial[trial];
        for (unsigned attempt = 0; attempt <= config.null_retries; ++attempt) {
          attempts.push_back(run_one(config, n, trial, attempt));
          if (attempts.back().output.has_value()) break;  // retry NULLs only
        }
        baseline[trial] = baseline_queries(config, *attempts.front().instance);
      }
    };

    const auto workers =
        std::min<std::uint64_t>(static_cast<std::uint64_t>(config.workers),
                                config.trials);
    if (workers <= 1) {
      worker(0, config.trials);
    } else {
      std::vector<std::thread> pool;
      const std::uint64_t chunk = (config.trials + workers - 1) / workers;
      for (std::uint64_t w = 0; w < workers; ++w) {
        const std::uint64_t begin = w * chunk;
        const std::uint64_t end = std::min(config.trials, begin + chunk);
        if (begin < end) pool.emplace_back(worker, begin, end);
      }
      for (auto& t : pool) t.join();
    }

    SummaryRow row;
    row.algorithm = config.algorithm;
    row.n = n;
    row.trials = config.trials;
    double query_sum = 0;
    double baseline_sum = 0;
    for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
      const TrialReport& final_attempt = per_trial[trial].back();
      row.successes += final_attempt.success ? 1 : 0;
      query_sum += static_cast<double>(final_attempt.ledger.total());
      baseline_sum += static_cast<double>(baseline[trial]);
      for (auto& attempt : per_trial[trial])
        out.reports.push_back(std::move(attempt));
    }
    row.rate = static_cast<double>(row.successes) /
               static_cast<double>(row.trials);
    row.stderr_rate = std::sqrt(row.rate * (1.0 - row.rate) /
                                static_cast<double>(row.trials));
    row.mean_queries = query_sum / static_cast<double>(row.trials);
    row.mean_classical_baseline =
        baseline_sum / static_cast<double>(row.trials);
    row.exact_success = exact_success_probability(config, n);
    const LowerBounds bounds = lower_bounds(n);
    row.instance_count = bounds.instance_count;
    row.maxip_lower_bound = bounds.maxip_bound;
    row.subset_lower_bound = bounds.subset_bound;
    out.summary.push_back(std::move(row));
  }
  return out;
}

}  // namespace hsp
