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

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "hsp/algorithms.hpp"
#include "hsp/ball.hpp"
#include "hsp/matroid.hpp"
#include "hsp/serialize.hpp"
#include "hsp/trial.hpp"
#include "hsp/wht.hpp"

namespace {

using hsp::BitString;
using hsp::ExperimentConfig;
using hsp::Rational;

struct OutputTarget {
  std::string path;  // empty = stdout

  template <typename Fn>
  int with_stream(Fn&& fn) const {
    if (path.empty()) return fn(std::cout);
    std::ofstream file(path);
    if (!file) {
      std::cerr << "error: cannot open '" << path << "' for writing\n";
      return 1;
    }
    return fn(file);
  }
};

std::string format_summary(const std::vector<hsp::SummaryRow>& rows,
                           const std::string& format) {
  if (format == "csv") return hsp::summary_csv(rows);
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) arr.push_back(hsp::summary_row_to_json(row));
    return arr.dump(2) + "\n";
  }
  return hsp::summary_table(rows);
}

int cmd_gen(int n, std::uint64_t count, hsp::Seed seed, const OutputTarget& out) {
  return out.with_stream([&](std::ostream& os) {
    hsp::Rng rng(seed);
    for (std::uint64_t i = 0; i < count; ++i)
      os << hsp::instance_to_json(hsp::random_instance(n, rng)).dump() << "\n";
    return 0;
  });
}

int cmd_run(const ExperimentConfig& config, const OutputTarget& out,
            const std::string& format, bool timing) {
  hsp::validate(config);
  const auto run = hsp::run_experiment(config);
  const int rc = out.with_stream([&](std::ostream& os) {
    hsp::write_report_lines(os, run, config, timing);
    return 0;
  });
  if (rc != 0) return rc;
  // NULL outcomes are data, not process failures.
  std::cout << format_summary(run.summary, format);
  if (config.lambda) {
    std::cout << "# analytic failure bound 1/2 exp(-2 lambda^2) = "
              << hsp::recovery_failure_bound(*config.lambda) << "\n";
  }
  return 0;
}

int cmd_dist_maxip(const std::string& s_text, const std::string& sp_text,
                   const std::string& format) {
  const hsp::HiddenPairInstance inst(BitString::from_string(s_text),
                                     BitString::from_string(sp_text));
  const auto dist = hsp::wht_distribution(inst);
  if (format == "json") {
    std::cout << hsp::distribution_to_json(dist).dump(2) << "\n";
    return 0;
  }
  std::cout << "n = " << dist.n() << ", exact one-query extraction law\n";
  for (const auto& [outcome, p] : dist.support())
    std::cout << "  " << outcome.str() << "  " << hsp::fraction_string(p)
              << "  " << hsp::to_double(p) << "\n";
  return 0;
}

int cmd_dist_ball(int n, std::optional<int> k_flag, std::optional<double> lambda,
                  const std::string& t_text, bool full,
                  const std::string& format) {
  const int k = k_flag ? *k_flag
                       : (lambda ? hsp::ball_threshold_lambda(n, *lambda)
                                 : hsp::default_ball_threshold(n));
  const BitString t = t_text.empty() ? BitString::ones(n)
                                     : BitString::from_string(t_text);
  if (t.length() != n) {
    std::cerr << "error: --t must have length n\n";
    return 1;
  }
  const auto law = hsp::BallLaw::shared(n, k);
  if (format == "json") {
    std::cout << hsp::distribution_to_json(law->distribution(t)).dump(2) << "\n";
    return 0;
  }
  const Rational p_t = law->retrieval_probability();
  std::cout << "n = " << n << ", k = " << k
            << ", M_k = " << law->spec().m_k.str() << "\n";
  std::cout << "P(outcome = t) = M_k / 2^n";
  if (n <= 64) std::cout << " = " << hsp::fraction_string(p_t);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", hsp::to_double(p_t));
  std::cout << "  ~ " << buf << "\n";
  if (lambda) {
    std::cout << "analytic failure bound 1/2 exp(-2 lambda^2) = "
              << hsp::recovery_failure_bound(*lambda) << "\n";
  }
  if (full) {
    std::cout << "  d  class_size  p_per_string  p_class\n";
    for (int d = 0; d <= n; ++d) {
      const Rational per = law->per_string_probability(d);
      std::cout << "  " << d << "  "
                << hsp::binomial(static_cast<unsigned>(n),
                                 static_cast<unsigned>(d))
                       .str()
                << "  ";
      if (n <= 64)
        std::cout << hsp::fraction_string(per) << "  ";
      else
        std::cout << hsp::to_double(per) << "  ";
      std::cout << hsp::to_double(law->class_probability(d)) << "\n";
    }
  }
  return 0;
}

int cmd_bounds(const std::vector<int>& sizes, int omega, unsigned rounds) {
  std::cout << "     n  C_i(n)  C_s(n)  q_maxip  q_subset_worst  N\n";
  for (const int n : sizes) {
    const auto b = hsp::lower_bounds(n);
    const int k = hsp::default_ball_threshold(n);
    const auto per_round = static_cast<std::uint64_t>(std::floor(
                               std::numbers::pi / 4.0 *
                               std::sqrt(static_cast<double>(n > 1 ? n - 1 : 1)))) +
                           1;
    const std::uint64_t worst = static_cast<std::uint64_t>(k) + rounds * per_round;
    std::cout << "  " << std::setw(4) << n << "  " << std::setw(6)
              << b.maxip_bound << "  " << std::setw(6) << b.subset_bound
              << "  " << std::setw(7) << omega << "  " << std::setw(14) << worst
              << "  " << b.instance_count.str() << "\n";
  }
  return 0;
}

int cmd_oscillation(int n_min, int n_max, const OutputTarget& out) {
  return out.with_stream([&](std::ostream& os) {
    os << "n,k,p_exact,failure_bound\n";
    Rational min_p = 1, max_p = 0;
    for (int n = n_min; n <= n_max; ++n) {
      const int k = hsp::default_ball_threshold(n);
      const Rational p = hsp::t_recovery_probability(n, k);
      min_p = std::min(min_p, p);
      max_p = std::max(max_p, p);
      const double lambda =
          (k - n / 2.0) / std::sqrt(static_cast<double>(n));
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%d,%d,%.10f,%.10f\n", n, k,
                    hsp::to_double(p), hsp::recovery_failure_bound(lambda));
      os << buf;
    }
    std::cerr << "# min = " << hsp::to_double(min_p)
              << ", max = " << hsp::to_double(max_p) << " over ["
              << n_min << ", " << n_max << "]\n";
    if (n_min <= 3 && n_max >= 1000) {
      const bool ok = min_p >= Rational(9648, 10000) && max_p == 1;
      std::cerr << "# oscillation band [0.9648, 1]: "
                << (ok ? "confirmed" : "VIOLATED") << "\n";
    }
    return 0;
  });
}

int cmd_matroid(const std::string& file, const std::string& kind,
                std::uint64_t trials, hsp::Seed seed, int omega,
                const std::string& mode, unsigned rounds,
                const OutputTarget& out, const std::string& format) {
  std::ifstream in(file);
  if (!in) {
    std::cerr << "error: cannot read '" << file << "'\n";
    return 1;
  }
  nlohmann::json j;
  in >> j;
  const auto m = hsp::matroid_from_json(j);

  hsp::MatroidIdentifyParams params;
  params.omega = omega;
  params.mode =
      mode == "exact" ? hsp::SampleMode::kExact : hsp::SampleMode::kAnalytic;
  params.grover = hsp::GroverPolicy{rounds};
  const auto oracle_kind = kind == "rank" ? hsp::MatroidOracleKind::kRank
                                          : hsp::MatroidOracleKind::kIndependence;

  std::uint64_t successes = 0;
  double query_sum = 0;
  const int rc = out.with_stream([&](std::ostream& os) {
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
      hsp::Rng rng(hsp::trial_stream_seed(seed, trial));
      const auto result = hsp::identify_bases(m, oracle_kind, rng, params);
      successes += result.success ? 1 : 0;
      query_sum += static_cast<double>(result.ledger.total());
      nlohmann::json line{{"trial", trial},
                          {"kind", kind},
                          {"matroid", hsp::matroid_to_json(m)},
                          {"ledger", hsp::ledger_to_json(result.ledger)},
                          {"success", result.success}};
      if (result.bases) {
        line["bases"] = nlohmann::json::array(
            {hsp::chi(result.bases->first).str(),
             hsp::chi(result.bases->second).str()});
      } else {
        line["bases"] = nullptr;
      }
      os << line.dump() << "\n";
    }
    return 0;
  });
  if (rc != 0) return rc;

  hsp::SummaryRow row;
  row.algorithm = "matroid-" + kind;
  row.n = m.n();
  row.trials = trials;
  row.successes = successes;
  row.rate = trials ? static_cast<double>(successes) / static_cast<double>(trials)
                    : 0.0;
  row.stderr_rate =
      trials ? std::sqrt(row.rate * (1.0 - row.rate) / static_cast<double>(trials))
             : 0.0;
  row.mean_queries = trials ? query_sum / static_cast<double>(trials) : 0.0;
  row.exact_success =
      oracle_kind == hsp::MatroidOracleKind::kRank
          ? std::optional<Rational>(hsp::algorithm2_success_probability(omega))
          : std::optional<Rational>(hsp::t_recovery_probability(
                m.n(), hsp::default_ball_threshold(m.n())));
  const auto bounds = hsp::lower_bounds(m.n());
  row.instance_count = bounds.instance_count;
  row.maxip_lower_bound = bounds.maxip_bound;
  row.subset_lower_bound = bounds.subset_bound;
  std::cout << format_summary({row}, format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hsp: query-metered simulator for hidden-pair identification "
               "through the max-inner-product and sub-set oracles"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format = "table";
  hsp::Seed seed = 0;

  // gen ----------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "Generate random instances (JSON lines)");
  int gen_n = 8;
  std::uint64_t gen_count = 1;
  gen->add_option("--n", gen_n, "String length (>= 3)")->required();
  gen->add_option("--count", gen_count, "Number of instances");
  gen->add_option("--seed", seed, "RNG seed")->envname("HS_SEED");
  gen->add_option("--out", out_path, "Output file (default stdout)");

  // run ----------------------------------------------------------------
  auto* run = app.add_subcommand("run", "Run identification trials");
  ExperimentConfig config;
  std::string algo = "maxip";
  std::string mode = "sampled";
  int k_flag = -1;
  double lambda_flag = std::nan("");
  bool timing = false;
  run->add_option("--algo", algo,
                  "maxip | subset | classical-maxip | classical-subset")
      ->check(CLI::IsMember({"maxip", "subset", "classical-maxip",
                             "classical-subset"}));
  run->add_option("--n", config.sizes, "String length(s), repeatable or comma list")
      ->required()
      ->delimiter(',');
  run->add_option("--trials", config.trials, "Trials per n");
  run->add_option("--seed", seed, "RNG seed")->envname("HS_SEED");
  run->add_option("--omega", config.omega, "Extraction samples per maxip run");
  run->add_option("--k", k_flag, "Ball threshold override");
  run->add_option("--lambda", lambda_flag,
                  "Ball threshold k = floor(n/2 + lambda sqrt(n))");
  run->add_option("--mode", mode, "exact | sampled extraction sampling")
      ->check(CLI::IsMember({"exact", "sampled"}));
  run->add_option("--workers", config.workers, "Worker threads");
  run->add_option("--grover-rounds", config.grover_rounds,
                  "Measurement-round budget of the Grover stage");
  run->add_option("--retry-null", config.null_retries,
                  "Re-attempts after a NULL outcome (raw NULLs stay reported)");
  run->add_option("--out", out_path, "Report JSON-lines file (default stdout)");
  run->add_option("--format", format, "Summary format: table | csv | json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  run->add_flag("--timing", timing,
                "Include wall time per line (breaks byte replay)");

  // dist ---------------------------------------------------------------
  auto* dist = app.add_subcommand("dist", "Print an exact outcome law");
  dist->require_subcommand(1);
  auto* dist_maxip = dist->add_subcommand("maxip", "One-query extraction law");
  std::string s_text, sp_text;
  dist_maxip->add_option("--s", s_text, "First hidden string")->required();
  dist_maxip->add_option("--s-prime", sp_text, "Second hidden string")->required();
  dist_maxip->add_option("--format", format, "table | json")
      ->check(CLI::IsMember({"table", "json"}));

  auto* dist_ball = dist->add_subcommand("ball", "One ball-query law");
  int ball_n = 10;
  int ball_k = -1;
  double ball_lambda = std::nan("");
  std::string ball_t;
  bool ball_full = false;
  dist_ball->add_option("--n", ball_n, "String length")->required();
  dist_ball->add_option("--k", ball_k, "Threshold (default floor(n/2+sqrt(n)))");
  dist_ball->add_option("--lambda", ball_lambda, "Threshold via lambda");
  dist_ball->add_option("--t", ball_t, "Center string (default all-ones)");
  dist_ball->add_flag("--full", ball_full, "Print every distance class");
  dist_ball->add_option("--format", format, "table | json")
      ->check(CLI::IsMember({"table", "json"}));

  // bounds ---------------------------------------------------------------
  auto* bounds = app.add_subcommand("bounds", "Classical lower bounds vs quantum costs");
  std::vector<int> bound_sizes;
  int bounds_omega = 7;
  unsigned bounds_rounds = 8;
  bounds->add_option("--n", bound_sizes, "Sizes, repeatable or comma list")
      ->required()
      ->delimiter(',');
  bounds->add_option("--omega", bounds_omega, "Extraction sample count");
  bounds->add_option("--grover-rounds", bounds_rounds, "Grover round budget");

  // oscillation ----------------------------------------------------------
  auto* osc = app.add_subcommand(
      "oscillation", "CSV of the exact t-recovery probability across n");
  int n_min = 3, n_max = 1000;
  osc->add_option("--n-min", n_min, "Smallest n (>= 3)")
      ->check(CLI::Range(3, 2000));
  osc->add_option("--n-max", n_max, "Largest n (<= 2000)")
      ->check(CLI::Range(3, 2000));
  osc->add_option("--out", out_path, "Output file (default stdout)");

  // matroid ----------------------------------------------------------------
  auto* matroid = app.add_subcommand("matroid", "Identify the bases of a 2-bases matroid");
  std::string matroid_file;
  std::string matroid_kind = "rank";
  std::uint64_t matroid_trials = 1;
  int matroid_omega = 7;
  std::string matroid_mode = "sampled";
  unsigned matroid_rounds = 8;
  matroid->add_option("--file", matroid_file, "Matroid JSON {n, bases:[..]}")
      ->required();
  matroid->add_option("--kind", matroid_kind, "rank | independence")
      ->check(CLI::IsMember({"rank", "independence"}));
  matroid->add_option("--trials", matroid_trials, "Trials");
  matroid->add_option("--seed", seed, "RNG seed")->envname("HS_SEED");
  matroid->add_option("--omega", matroid_omega, "Extraction samples (rank kind)");
  matroid->add_option("--mode", matroid_mode, "exact | sampled")
      ->check(CLI::IsMember({"exact", "sampled"}));
  matroid->add_option("--grover-rounds", matroid_rounds, "Grover round budget");
  matroid->add_option("--out", out_path, "Report JSON-lines file");
  matroid->add_option("--format", format, "Summary format")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    const OutputTarget out{out_path};
    if (gen->parsed()) return cmd_gen(gen_n, gen_count, seed, out);
    if (run->parsed()) {
      config.algorithm = algo;
      config.seed = seed;
      config.mode = mode == "exact" ? hsp::SampleMode::kExact
                                    : hsp::SampleMode::kAnalytic;
      if (k_flag >= 0) config.k_override = k_flag;
      if (!std::isnan(lambda_flag)) config.lambda = lambda_flag;
      return cmd_run(config, out, format, timing);
    }
    if (dist_maxip->parsed()) return cmd_dist_maxip(s_text, sp_text, format);
    if (dist_ball->parsed()) {
      return cmd_dist_ball(
          ball_n, ball_k >= 0 ? std::optional<int>(ball_k) : std::nullopt,
          std::isnan(ball_lambda) ? std::nullopt
                                  : std::optional<double>(ball_lambda),
          ball_t, ball_full, format);
    }
    if (bounds->parsed())
      return cmd_bounds(bound_sizes, bounds_omega, bounds_rounds);
    if (osc->parsed()) {
      if (n_min > n_max) {
        std::cerr << "error: --n-min must be <= --n-max\n";
        return 1;
      }
      return cmd_oscillation(n_min, n_max, out);
    }
    if (matroid->parsed()) {
      return cmd_matroid(matroid_file, matroid_kind, matroid_trials, seed,
                         matroid_omega, matroid_mode, matroid_rounds, out,
                         format);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
