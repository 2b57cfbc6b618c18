// Copyright 2026 The Authors.
//
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

#ifndef BANDITS_RUNNER_H_
#define BANDITS_RUNNER_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bandits/episode.h"
#include "bandits/rng.h"

namespace bandits {

struct PolicySpec {
  std::string name;
  std::string label;
  nlohmann::json params = nlohmann::json::object();
  // Merged over the experiment's environment for this policy only.
  nlohmann::json environment_patch = nlohmann::json::object();
};

struct ExperimentSpec {
  std::string name;
  nlohmann::json environment;
  std::vector<PolicySpec> policies;
  std::int64_t T = 0;
  std::vector<std::uint64_t> seeds;
  std::string out_dir;
  // Relative file paths in the environment resolve against this.
  std::string base_dir;

  nlohmann::json EnvironmentFor(const PolicySpec& policy) const;
};

// Parses and validates. Unknown names raise ConfigError listing the valid
// ones.
ExperimentSpec ParseExperimentSpec(const std::string& json_text,
                                   const std::string& base_dir = ".");
ExperimentSpec LoadExperimentSpec(const std::string& path);
void ValidateExperimentSpec(const ExperimentSpec& spec);

// One seeded repetition. `final_regret` is the last cumulative regret for
// bandit problems and the recommendation's simple regret for optimizers.
struct RunOutcome {
  RegretTrace trace;
  double final_regret = 0.0;
};

RunOutcome RunRepetition(const ExperimentSpec& spec, std::size_t policy,
                         std::uint64_t seed);

struct SummaryRow {
  std::string label;
  std::int64_t T = 0;
  double mean_final_regret = 0.0;
  double stderr_final_regret = 0.0;
  double runtime_seconds = 0.0;
};

struct RunOptions {
  int parallel = 1;
  bool quiet = false;
  // Writes 0 in the runtime column so reruns are byte-identical.
  bool no_timing = false;
};

struct ExperimentReport {
  std::vector<SummaryRow> summary;
  std::vector<std::string> files;
};

// Writes out_dir/<label>_seed<seed>.csv for each repetition and
// out_dir/summary.csv.
ExperimentReport RunExperiment(const ExperimentSpec& spec,
                               const RunOptions& options);

void WriteTraceCsv(std::ostream& out, const RegretTrace& trace);
void WriteSummaryCsv(std::ostream& out, const std::vector<SummaryRow>& rows);
// Writes to a sibling temp file and renames it over `path`.
void WriteFileAtomically(const std::string& path, const std::string& content);

// "environment <name>" and "policy <name>" lines, sorted, keeping names that
// contain `filter`.
std::vector<std::string> ListComponents(const std::string& filter = "");
std::vector<std::string> EnvironmentNames();
std::vector<std::string> PolicyNames();

}  // namespace bandits

#endif  // BANDITS_RUNNER_H_
