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

#ifndef HSP_SERIALIZE_HPP_
#define HSP_SERIALIZE_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "hsp/distribution.hpp"
#include "hsp/instance.hpp"
#include "hsp/matroid.hpp"
#include "hsp/oracles.hpp"
#include "hsp/trial.hpp"

namespace hsp {

// Wire formats. nlohmann::json keeps object keys sorted, and every emitter
// here is a pure function of its inputs, so serialized reports are
// byte-stable across replays. Probabilities are rendered as exact "p/q"
// strings plus a float approximation.

nlohmann::json instance_to_json(const HiddenPairInstance& instance);
HiddenPairInstance instance_from_json(const nlohmann::json& j);

nlohmann::json ledger_to_json(const LedgerSnapshot& ledger);

nlohmann::json distribution_to_json(const OutcomeDistribution& dist);

nlohmann::json config_to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const nlohmann::json& j);

/// One JSON-lines record. The run config is embedded in every record so a
/// report file is self-replaying. Wall time is opt-in: with it the line is
/// no longer byte-reproducible.
nlohmann::json report_to_json(const TrialReport& report,
                              const ExperimentConfig& config,
                              bool include_timing = false);

nlohmann::json summary_row_to_json(const SummaryRow& row);

void write_report_lines(std::ostream& out, const RunOutput& run,
                        const ExperimentConfig& config,
                        bool include_timing = false);

std::string summary_csv(const std::vector<SummaryRow>& rows);
std::string summary_table(const std::vector<SummaryRow>& rows);

nlohmann::json matroid_to_json(const TwoBasesMatroid& m);
TwoBasesMatroid matroid_from_json(const nlohmann::json& j);

}  // namespace hsp

#endif  // HSP_SERIALIZE_HPP_
