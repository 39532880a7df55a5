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

#include "hsp/serialize.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

namespace hsp {

namespace {

using nlohmann::json;

std::string mode_name(SampleMode mode) {
  return mode == SampleMode::kExact ? "exact" : "sampled";
}

SampleMode mode_from_name(const std::string& name) {
  if (name == "exact") return SampleMode::kExact;
  if (name == "sampled") return SampleMode::kAnalytic;
  throw std::invalid_argument("config: mode must be 'exact' or 'sampled'");
}

std::string format_double(double v, int precision = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision) << v;
  return os.str();
}

}  // namespace

json instance_to_json(const HiddenPairInstance& instance) {
  return {{"n", instance.n()},
          {"s", instance.s().str()},
          {"s_prime", instance.s_prime().str()}};
}

HiddenPairInstance instance_from_json(const json& j) {
  const auto s = BitString::from_string(j.at("s").get<std::string>());
  const auto s_prime =
      BitString::from_string(j.at("s_prime").get<std::string>());
  HiddenPairInstance instance(s, s_prime);
  if (j.contains("n") && j.at("n").get<int>() != instance.n())
    throw std::invalid_argument("instance: n does not match string length");
  return instance;
}

json ledger_to_json(const LedgerSnapshot& ledger) {
  return {{"classical", ledger.classical},
          {"superposed", ledger.superposed},
          {"grover", ledger.grover},
          {"total", ledger.total()}};
}

json distribution_to_json(const OutcomeDistribution& dist) {
  json out{{"n", dist.n()}};
  json entries = json::array();
  if (dist.is_sparse()) {
    out["form"] = "sparse";
    for (const auto& [outcome, p] : dist.support()) {
      entries.push_back({{"outcome", outcome.str()},
                         {"p", fraction_string(p)},
                         {"p_float", to_double(p)}});
    }
  } else {
    out["form"] = "weight_class";
    out["center"] = dist.center().str();
    const auto& per_string = dist.per_string_by_distance();
    for (int d = 0; d <= dist.n(); ++d) {
      const auto& p = per_string[static_cast<std::size_t>(d)];
      entries.push_back({{"d", d},
                         {"class_size", dist.class_size(d).str()},
                         {"p_per_string", fraction_string(p)},
                         {"p_per_string_float", to_double(p)},
                         {"p_class_float",
                          to_double(p * Rational(dist.class_size(d)))}});
    }
  }
  out["entries"] = std::move(entries);
  return out;
}

json config_to_json(const ExperimentConfig& config) {
  json out{{"algorithm", config.algorithm},
           {"sizes", config.sizes},
           {"trials", config.trials},
           {"omega", config.omega},
           {"mode", mode_name(config.mode)},
           {"seed", config.seed},
           {"workers", config.workers},
           {"grover_rounds", config.grover_rounds},
           {"null_retries", config.null_retries}};
  out["k"] = config.k_override ? json(*config.k_override) : json(nullptr);
  out["lambda"] = config.lambda ? json(*config.lambda) : json(nullptr);
  return out;
}

ExperimentConfig config_from_json(const json& j) {
  ExperimentConfig config;
  config.algorithm = j.at("algorithm").get<std::string>();
  config.sizes = j.at("sizes").get<std::vector<int>>();
  config.trials = j.at("trials").get<std::uint64_t>();
  config.omega = j.at("omega").get<int>();
  config.mode = mode_from_name(j.at("mode").get<std::string>());
  config.seed = j.at("seed").get<Seed>();
  config.workers = j.at("workers").get<int>();
  config.grover_rounds = j.at("grover_rounds").get<unsigned>();
  config.null_retries = j.at("null_retries").get<unsigned>();
  if (j.contains("k") && !j.at("k").is_null())
    config.k_override = j.at("k").get<int>();
  if (j.contains("lambda") && !j.at("lambda").is_null())
    config.lambda = j.at("lambda").get<double>();
  return config;
}

json report_to_json(const TrialReport& report, const ExperimentConfig& config,
                    bool include_timing) {
  json out{{"algorithm", report.algorithm},
           {"n", report.n},
           {"trial", report.trial},
           {"attempt", report.attempt},
           {"seed", report.stream_seed},
           {"ledger", ledger_to_json(report.ledger)},
           {"success", report.success},
           {"config", config_to_json(config)}};
  out["instance"] =
      report.instance ? instance_to_json(*report.instance) : json(nullptr);
  if (report.output) {
    out["output"] =
        json::array({report.output->s().str(), report.output->s_prime().str()});
  } else {
    out["output"] = nullptr;
  }
  if (include_timing) out["wall_time_us"] = report.wall_time_us;
  return out;
}

json summary_row_to_json(const SummaryRow& row) {
  json out{{"algorithm", row.algorithm},
           {"n", row.n},
           {"trials", row.trials},
           {"successes", row.successes},
           {"rate", row.rate},
           {"stderr", row.stderr_rate},
           {"mean_queries", row.mean_queries},
           {"classical_baseline_queries", row.mean_classical_baseline},
           {"instance_count", row.instance_count.str()},
           {"c_i", row.maxip_lower_bound},
           {"c_s", row.subset_lower_bound}};
  if (row.exact_success) {
    out["p_success_exact"] = fraction_string(*row.exact_success);
    out["p_success_exact_float"] = to_double(*row.exact_success);
  } else {
    out["p_success_exact"] = nullptr;
  }
  return out;
}

void write_report_lines(std::ostream& out, const RunOutput& run,
                        const ExperimentConfig& config, bool include_timing) {
  for (const auto& report : run.reports)
    out << report_to_json(report, config, include_timing).dump() << "\n";
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
  std::ostringstream os;
  os << "algorithm,n,trials,successes,rate,stderr,mean_queries,"
        "p_success_exact,classical_baseline_queries,c_i,c_s\n";
  for (const auto& row : rows) {
    os << row.algorithm << ',' << row.n << ',' << row.trials << ','
       << row.successes << ',' << format_double(row.rate) << ','
       << format_double(row.stderr_rate) << ','
       << format_double(row.mean_queries, 3) << ','
       << (row.exact_success ? fraction_string(*row.exact_success) : "") << ','
       << format_double(row.mean_classical_baseline, 3) << ','
       << row.maxip_lower_bound << ',' << row.subset_lower_bound << "\n";
  }
  return os.str();
}

std::string summary_table(const std::vector<SummaryRow>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(18) << "algorithm" << std::right << std::setw(6)
     << "n" << std::setw(9) << "trials" << std::setw(10) << "success"
     << std::setw(10) << "rate" << std::setw(9) << "stderr" << std::setw(12)
     << "mean_q" << std::setw(14) << "exact_p" << std::setw(12) << "classic_q"
     << std::setw(6) << "C_i" << std::setw(6) << "C_s" << "\n";
  for (const auto& row : rows) {
    os << std::left << std::setw(18) << row.algorithm << std::right
       << std::setw(6) << row.n << std::setw(9) << row.trials << std::setw(10)
       << row.successes << std::setw(10) << format_double(row.rate, 5)
       << std::setw(9) << format_double(row.stderr_rate, 5) << std::setw(12)
       << format_double(row.mean_queries, 2) << std::setw(14)
       << (row.exact_success ? format_double(to_double(*row.exact_success), 6)
                             : "-")
       << std::setw(12) << format_double(row.mean_classical_baseline, 2)
       << std::setw(6) << row.maxip_lower_bound << std::setw(6)
       << row.subset_lower_bound << "\n";
  }
  return os.str();
}

json matroid_to_json(const TwoBasesMatroid& m) {
  return {{"n", m.n()},
          {"bases", json::array({m.hidden_pair().s().str(),
                                 m.hidden_pair().s_prime().str()})}};
}

TwoBasesMatroid matroid_from_json(const json& j) {
  const auto& bases = j.at("bases");
  if (!bases.is_array() || bases.size() != 2)
    throw std::invalid_argument("matroid: 'bases' must list exactly 2 strings");
  const auto a = BitString::from_string(bases[0].get<std::string>());
  const auto b = BitString::from_string(bases[1].get<std::string>());
  if (j.contains("n") && j.at("n").get<int>() != a.length())
    throw std::invalid_argument("matroid: n does not match indicator length");
  return TwoBasesMatroid::from_indicators(a, b);
}

}  // namespace hsp
