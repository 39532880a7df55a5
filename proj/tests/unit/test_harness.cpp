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

#include <doctest.h>

#include <sstream>

#include "hsp/serialize.hpp"

namespace hsp {
namespace {

ExperimentConfig small_config(const std::string& algorithm) {
  ExperimentConfig config;
  config.algorithm = algorithm;
  config.sizes = {8};
  config.trials = 60;
  config.seed = 42;
  return config;
}

std::string render_lines(const RunOutput& run, const ExperimentConfig& config) {
  std::ostringstream os;
  write_report_lines(os, run, config);
  return os.str();
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(validate(ExperimentConfig{}), std::invalid_argument);  // no sizes
  auto bad_algo = small_config("unknown");
  CHECK_THROWS_AS(validate(bad_algo), std::invalid_argument);
  auto bad_n = small_config(kAlgoMaxIP);
  bad_n.sizes = {2};
  CHECK_THROWS_AS(validate(bad_n), std::invalid_argument);
  auto bad_trials = small_config(kAlgoMaxIP);
  bad_trials.trials = 0;
  CHECK_THROWS_AS(validate(bad_trials), std::invalid_argument);
  auto bad_omega = small_config(kAlgoMaxIP);
  bad_omega.omega = 1;
  CHECK_THROWS_AS(validate(bad_omega), std::invalid_argument);
  auto bad_k = small_config(kAlgoSubset);
  bad_k.k_override = 9;
  CHECK_THROWS_AS(validate(bad_k), std::invalid_argument);
}

TEST_CASE("threshold policy") {
  auto config = small_config(kAlgoSubset);
  CHECK(resolve_threshold(config, 16) == 12);
  config.lambda = 0.0;
  CHECK(resolve_threshold(config, 16) == 8);
  config.k_override = 5;
  CHECK(resolve_threshold(config, 16) == 5);  // explicit k wins
}

TEST_CASE("runs replay byte-identically") {
  for (const auto* algorithm : {kAlgoMaxIP, kAlgoSubset, kAlgoClassicalMaxIP,
                                kAlgoClassicalSubset}) {
    const auto config = small_config(algorithm);
    const auto first = render_lines(run_experiment(config), config);
    const auto second = render_lines(run_experiment(config), config);
    CHECK(first == second);
    CHECK(!first.empty());
  }
}

TEST_CASE("reports replay from their embedded config") {
  const auto config = small_config(kAlgoSubset);
  const auto run = run_experiment(config);
  const auto lines = render_lines(run, config);

  // parse the first line, pull the embedded config, and rerun
  const auto first_line = lines.substr(0, lines.find('\n'));
  const auto parsed = nlohmann::json::parse(first_line);
  const auto recovered = config_from_json(parsed.at("config"));
  const auto rerun = run_experiment(recovered);
  CHECK(render_lines(rerun, recovered) == lines);
}

TEST_CASE("worker count does not change the reports") {
  auto config = small_config(kAlgoMaxIP);
  config.trials = 96;
  const auto serial = run_experiment(config);
  config.workers = 4;
  const auto parallel = run_experiment(config);
  // compare trial payloads; the embedded config legitimately differs in the
  // workers field, which has no bearing on outcomes
  REQUIRE(serial.reports.size() == parallel.reports.size());
  for (std::size_t i = 0; i < serial.reports.size(); ++i) {
    auto a = report_to_json(serial.reports[i], config);
    auto b = report_to_json(parallel.reports[i], config);
    a.erase("config");
    b.erase("config");
    CHECK(a == b);
  }
}

TEST_CASE("summary carries the exact columns") {
  const auto maxip = run_experiment(small_config(kAlgoMaxIP));
  REQUIRE(maxip.summary.size() == 1);
  const auto& row = maxip.summary[0];
  CHECK(row.exact_success == Rational(3969, 4096));
  CHECK(row.instance_count == 1792);
  CHECK(row.maxip_lower_bound == 4);
  CHECK(row.subset_lower_bound == 11);
  CHECK(row.mean_queries == 7.0);  // always exactly omega

  auto subset_config = small_config(kAlgoSubset);
  subset_config.sizes = {10};
  const auto subset = run_experiment(subset_config);
  CHECK(subset.summary[0].exact_success == Rational(1013, 1024));
  CHECK(subset.summary[0].mean_classical_baseline >= 10.0);
}

TEST_CASE("every reported outcome is either correct or NULL-marked") {
  auto config = small_config(kAlgoMaxIP);
  config.trials = 300;
  config.omega = 2;  // plenty of NULLs
  const auto run = run_experiment(config);
  std::uint64_t nulls = 0;
  for (const auto& report : run.reports) {
    if (!report.output) {
      ++nulls;
      CHECK(!report.success);
    } else {
      CHECK(report.success == (*report.output == *report.instance));
      CHECK(*report.output == *report.instance);  // soundness of this algorithm
    }
    CHECK(report.ledger.superposed == 2);
  }
  CHECK(nulls > 0);  // omega = 2 fails 3 in 4 runs
}

TEST_CASE("NULL retries re-attempt with fresh streams and keep raw lines") {
  auto config = small_config(kAlgoMaxIP);
  config.trials = 40;
  config.omega = 2;
  config.null_retries = 3;
  const auto run = run_experiment(config);
  bool saw_retry = false;
  for (const auto& report : run.reports) {
    if (report.attempt > 0) saw_retry = true;
    if (report.attempt > 0) CHECK(report.trial < config.trials);
  }
  CHECK(saw_retry);
  // reports remain ordered by (trial, attempt)
  for (std::size_t i = 1; i < run.reports.size(); ++i) {
    const auto& prev = run.reports[i - 1];
    const auto& cur = run.reports[i];
    CHECK((prev.trial < cur.trial ||
           (prev.trial == cur.trial && prev.attempt < cur.attempt)));
  }
}

TEST_CASE("json round trips") {
  const auto inst = random_instance(9, Seed{5});
  CHECK(instance_from_json(instance_to_json(inst)) == inst);

  auto config = small_config(kAlgoSubset);
  config.lambda = 1.5;
  config.null_retries = 2;
  const auto back = config_from_json(config_to_json(config));
  CHECK(back.algorithm == config.algorithm);
  CHECK(back.sizes == config.sizes);
  CHECK(back.lambda == config.lambda);
  CHECK(back.null_retries == config.null_retries);
  CHECK(!back.k_override.has_value());

  const auto m = TwoBasesMatroid::from_indicators(inst.s(), inst.s_prime());
  const auto m2 = matroid_from_json(matroid_to_json(m));
  CHECK(m2.hidden_pair() == m.hidden_pair());
}

TEST_CASE("summary emitters") {
  const auto run = run_experiment(small_config(kAlgoMaxIP));
  const auto csv = summary_csv(run.summary);
  CHECK(csv.find("algorithm,n,trials") == 0);
  CHECK(csv.find(kAlgoMaxIP) != std::string::npos);
  const auto table = summary_table(run.summary);
  CHECK(table.find("maxip") != std::string::npos);
  const auto j = summary_row_to_json(run.summary[0]);
  CHECK(j.at("p_success_exact") == "3969/4096");
}

TEST_CASE("timing is excluded from replayable lines unless requested") {
  const auto config = small_config(kAlgoMaxIP);
  const auto run = run_experiment(config);
  const auto plain = report_to_json(run.reports[0], config, false);
  CHECK(!plain.contains("wall_time_us"));
  const auto timed = report_to_json(run.reports[0], config, true);
  CHECK(timed.contains("wall_time_us"));
}

}  // namespace
}  // namespace hsp
