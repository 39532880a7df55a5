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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "hsp/algorithms.hpp"
#include "hsp/ball.hpp"
#include "hsp/matroid.hpp"
#include "hsp/trial.hpp"
#include "hsp/wht.hpp"

namespace py = pybind11;

namespace {

py::object py_fraction(const hsp::Rational& q) {
  static py::object fraction_type =
      py::module_::import("fractions").attr("Fraction");
  return fraction_type(hsp::fraction_string(q));
}

py::object py_bigint(const hsp::BigInt& v) {
  static py::object int_type = py::module_::import("builtins").attr("int");
  return int_type(v.str());
}

hsp::SampleMode parse_mode(const std::string& mode) {
  if (mode == "exact") return hsp::SampleMode::kExact;
  if (mode == "sampled") return hsp::SampleMode::kAnalytic;
  throw py::value_error("mode must be 'exact' or 'sampled'");
}

int resolve_k(int n, std::optional<int> k, std::optional<double> lam) {
  if (k) return *k;
  if (lam) return hsp::ball_threshold_lambda(n, *lam);
  return hsp::default_ball_threshold(n);
}

}  // namespace

PYBIND11_MODULE(hspsim, m) {
  m.doc() =
      "Exact, query-metered simulator for identifying a hidden pair of "
      "equal-weight, distance-2 bitstrings through the max-inner-product "
      "and sub-set oracles.";

  m.def("default_k", &hsp::default_ball_threshold, py::arg("n"),
        "floor(n/2 + sqrt(n)), the default ball threshold.");

  m.def(
      "lower_bounds",
      [](int n) {
        const auto b = hsp::lower_bounds(n);
        py::dict out;
        out["instances"] = py_bigint(b.instance_count);
        out["c_i"] = b.maxip_bound;
        out["c_s"] = b.subset_bound;
        return out;
      },
      py::arg("n"),
      "Instance count N = n(n-1) 2^(n-3) and the classical query lower "
      "bounds ceil(log_n N), ceil(log_2 N).");

  m.def(
      "success_probability",
      [](int omega) { return py_fraction(hsp::algorithm2_success_probability(omega)); },
      py::arg("omega"),
      "Exact identification probability of the omega-sample extraction run.");

  m.def(
      "t_recovery_probability",
      [](int n, std::optional<int> k) {
        return py_fraction(
            hsp::t_recovery_probability(n, k ? *k : hsp::default_ball_threshold(n)));
      },
      py::arg("n"), py::arg("k") = std::nullopt,
      "Exact probability M_k/2^n that one ball query returns t = s OR s'.");

  m.def(
      "random_instance",
      [](int n, hsp::Seed seed) {
        const auto inst = hsp::random_instance(n, seed);
        return py::make_tuple(inst.s().str(), inst.s_prime().str());
      },
      py::arg("n"), py::arg("seed"),
      "Uniform hidden pair as two '0'/'1' strings; deterministic per seed.");

  m.def(
      "enumerate_instances",
      [](int n) {
        py::list out;
        for (const auto& inst : hsp::enumerate_instances(n))
          out.append(py::make_tuple(inst.s().str(), inst.s_prime().str()));
        return out;
      },
      py::arg("n"), "All hidden pairs for n in [3, 12].");

  m.def(
      "wht_distribution",
      [](const std::string& s, const std::string& s_prime) {
        const hsp::HiddenPairInstance inst(hsp::BitString::from_string(s),
                                           hsp::BitString::from_string(s_prime));
        py::dict out;
        for (const auto& [outcome, p] : hsp::wht_distribution(inst).support())
          out[py::str(outcome.str())] = py_fraction(p);
        return out;
      },
      py::arg("s"), py::arg("s_prime"),
      "Exact one-query extraction law as {outcome: Fraction}.");

  m.def(
      "ball_distribution",
      [](int n, std::optional<int> k, std::optional<double> lam) {
        const hsp::BallLaw law(n, resolve_k(n, k, lam));
        py::list out;
        for (int d = 0; d <= n; ++d) {
          py::dict entry;
          entry["d"] = d;
          entry["class_size"] = py_bigint(
              hsp::binomial(static_cast<unsigned>(n), static_cast<unsigned>(d)));
          entry["p_per_string"] = py_fraction(law.per_string_probability(d));
          out.append(entry);
        }
        return out;
      },
      py::arg("n"), py::arg("k") = std::nullopt, py::arg("lam") = std::nullopt,
      "Exact weight-class law of one ball query (distance from t).");

  m.def(
      "grover_plan",
      [](std::uint64_t search_space, std::uint64_t marked) {
        const auto plan = hsp::grover_plan(search_space, marked);
        py::dict out;
        out["iterations"] = plan.iterations;
        out["success_probability"] = plan.success_probability;
        return out;
      },
      py::arg("search_space"), py::arg("marked"));

  m.def(
      "identify_once",
      [](const std::string& algorithm, const std::string& s,
         const std::string& s_prime, hsp::Seed seed, int omega,
         const std::string& mode) {
        const hsp::HiddenPairInstance inst(hsp::BitString::from_string(s),
                                           hsp::BitString::from_string(s_prime));
        hsp::Rng rng(seed);
        py::dict out;
        std::optional<hsp::HiddenPairInstance> found;
        hsp::LedgerSnapshot ledger;
        if (algorithm == hsp::kAlgoMaxIP) {
          hsp::MaxIPOracle oracle(inst);
          found = hsp::maxip_identify(oracle, omega, parse_mode(mode), rng);
          ledger = oracle.snapshot();
        } else if (algorithm == hsp::kAlgoSubset) {
          hsp::SubsetOracle oracle(inst);
          found = hsp::subset_identify(oracle, rng);
          ledger = oracle.snapshot();
        } else if (algorithm == hsp::kAlgoClassicalMaxIP) {
          hsp::MaxIPOracle oracle(inst);
          found = hsp::classical_maxip_identify(oracle);
          ledger = oracle.snapshot();
        } else if (algorithm == hsp::kAlgoClassicalSubset) {
          hsp::SubsetOracle oracle(inst);
          found = hsp::classical_subset_identify(oracle);
          ledger = oracle.snapshot();
        } else {
          throw py::value_error("unknown algorithm '" + algorithm + "'");
        }
        if (found) {
          out["output"] = py::make_tuple(found->s().str(), found->s_prime().str());
        } else {
          out["output"] = py::none();
        }
        out["success"] = found.has_value() && *found == inst;
        py::dict counts;
        counts["classical"] = ledger.classical;
        counts["superposed"] = ledger.superposed;
        counts["grover"] = ledger.grover;
        counts["total"] = ledger.total();
        out["ledger"] = counts;
        return out;
      },
      py::arg("algorithm"), py::arg("s"), py::arg("s_prime"), py::arg("seed"),
      py::arg("omega") = 7, py::arg("mode") = "sampled",
      "Run one identification on a fixed hidden pair; returns output pair, "
      "success flag and the query ledger.");

  m.def(
      "run_trials",
      [](const std::string& algorithm, int n, std::uint64_t trials,
         hsp::Seed seed, int omega, const std::string& mode,
         std::optional<int> k, std::optional<double> lam, int workers) {
        hsp::ExperimentConfig config;
        config.algorithm = algorithm;
        config.sizes = {n};
        config.trials = trials;
        config.seed = seed;
        config.omega = omega;
        config.mode = parse_mode(mode);
        config.k_override = k;
        config.lambda = lam;
        config.workers = workers;
        const auto run = hsp::run_experiment(config);
        const auto& row = run.summary.at(0);
        py::dict out;
        out["trials"] = row.trials;
        out["successes"] = row.successes;
        out["rate"] = row.rate;
        out["mean_queries"] = row.mean_queries;
        out["classical_baseline_queries"] = row.mean_classical_baseline;
        out["exact_success"] = row.exact_success
                                   ? py_fraction(*row.exact_success)
                                   : py::object(py::none());
        out["c_i"] = row.maxip_lower_bound;
        out["c_s"] = row.subset_lower_bound;
        return out;
      },
      py::arg("algorithm"), py::arg("n"), py::arg("trials"), py::arg("seed"),
      py::arg("omega") = 7, py::arg("mode") = "sampled",
      py::arg("k") = std::nullopt, py::arg("lam") = std::nullopt,
      py::arg("workers") = 1,
      "Batch identification trials with fresh random instances; returns the "
      "summary row.");

  m.def(
      "identify_matroid_bases",
      [](int n, const std::vector<int>& base_a, const std::vector<int>& base_b,
         const std::string& kind, hsp::Seed seed) {
        const hsp::TwoBasesMatroid m(hsp::GroundSubset{n, base_a},
                                     hsp::GroundSubset{n, base_b});
        hsp::Rng rng(seed);
        const auto result = hsp::identify_bases(
            m,
            kind == "rank" ? hsp::MatroidOracleKind::kRank
                           : hsp::MatroidOracleKind::kIndependence,
            rng);
        py::dict out;
        if (result.bases) {
          out["bases"] = py::make_tuple(result.bases->first.members,
                                        result.bases->second.members);
        } else {
          out["bases"] = py::none();
        }
        out["success"] = result.success;
        out["total_queries"] = result.ledger.total();
        return out;
      },
      py::arg("n"), py::arg("base_a"), py::arg("base_b"),
      py::arg("kind") = "rank", py::arg("seed") = 0,
      "Identify the two bases of a 2-bases matroid through its rank or "
      "independence oracle.");

#ifdef HSP_VERSION
#define HSP_STR_IMPL(x) #x
#define HSP_STR(x) HSP_STR_IMPL(x)
  m.attr("__version__") = HSP_STR(HSP_VERSION);
#else
  m.attr("__version__") = "dev";
#endif
}
