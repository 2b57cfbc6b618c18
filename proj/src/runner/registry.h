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

#ifndef BANDITS_SRC_RUNNER_REGISTRY_H_
#define BANDITS_SRC_RUNNER_REGISTRY_H_

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bandits/rng.h"
#include "bandits/runner.h"

namespace bandits::registry {

struct EnvironmentEntry {
  std::vector<std::string> keys;
  // Throws ConfigError on bad parameters; builds nothing heavy.
  std::function<void(const nlohmann::json& env, std::int64_t T)> validate;
};

struct PolicyEntry {
  std::vector<std::string> environments;
  std::vector<std::string> keys;
  std::function<RunOutcome(const nlohmann::json& env,
                           const nlohmann::json& params, std::int64_t T,
                           const RngStream& rng)>
      run;
};

const std::map<std::string, EnvironmentEntry>& Environments();
const std::map<std::string, PolicyEntry>& Policies();

// Throws ConfigError naming `where` if `j` has a key outside `allowed`.
void CheckKeys(const nlohmann::json& j, const std::vector<std::string>& allowed,
               const std::string& where);

}  // namespace bandits::registry

#endif  // BANDITS_SRC_RUNNER_REGISTRY_H_
