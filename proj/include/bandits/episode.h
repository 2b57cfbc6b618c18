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

#ifndef BANDITS_EPISODE_H_
#define BANDITS_EPISODE_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bandits/rng.h"

namespace bandits {

class WeightedDigraph;

enum class Objective { kLoss, kReward };

// Regret is measured either against the best fixed action on the realized
// values, or against the best declared mean.
enum class Comparator { kBestInHindsight, kBestMean };

// What the learner sees after playing. `signals` has one slot per action and
// holds the revealed value for observed actions (zero elsewhere); noisy
// protocols may fill every slot.
struct Feedback {
  int action = -1;
  double value = 0.0;
  std::vector<int> observed;
  std::vector<double> signals;
  std::shared_ptr<const WeightedDigraph> graph;
};

class Environment {
 public:
  virtual ~Environment() = default;
  virtual int num_actions() const = 0;
  virtual Objective objective() const = 0;
  // Fixes the adversary's choices for round t (1-based).
  virtual void BeginRound(std::int64_t t, RngStream& rng) = 0;
  virtual Feedback Respond(int action, RngStream& rng) = 0;
  // Omniscient view of the current round's per-action values.
  virtual std::span<const double> RoundValues() const = 0;
  // Expected per-action values for stochastic environments.
  virtual std::optional<std::vector<double>> Means() const {
    return std::nullopt;
  }
};

class Policy {
 public:
  virtual ~Policy() = default;
  virtual int num_actions() const = 0;
  virtual int Select(std::int64_t t, RngStream& rng) = 0;
  // The distribution the last Select() drew from, if the policy samples.
  virtual std::optional<std::span<const double>> Distribution() const {
    return std::nullopt;
  }
  virtual void Update(std::int64_t t, const Feedback& feedback,
                      RngStream& rng) = 0;
};

struct RoundRecord {
  std::int64_t round = 0;
  int action = -1;
  double value = 0.0;
  double cum_regret = 0.0;
};

struct RegretTrace {
  Objective objective = Objective::kLoss;
  Comparator comparator = Comparator::kBestInHindsight;
  std::vector<RoundRecord> rounds;

  double FinalRegret() const {
    return rounds.empty() ? 0.0 : rounds.back().cum_regret;
  }
  std::vector<int> Actions() const;
};

// Throws InvariantError unless entries are nonnegative and sum to 1 within
// 1e-9.
void ValidateProbabilities(std::span<const double> probs);
// Throws ConfigError unless every entry lies in [0, 1].
void ValidateLosses(std::span<const double> losses);

// Plays T rounds. The environment and the policy draw from separate child
// streams of `rng`. Uses the best-mean comparator when the environment
// declares means, the hindsight comparator otherwise.
RegretTrace RunEpisode(Policy& policy, Environment& env, std::int64_t T,
                       const RngStream& rng);

// Σ_t ℓ_{t,I_t} − min_i Σ_t ℓ_{t,i}. `losses` is indexed [round][action].
double HindsightRegret(const std::vector<std::vector<double>>& losses,
                       std::span<const int> picks);

// For rewards: T·max mean − Σ mean(pick). For losses: Σ mean(pick) − T·min.
double PseudoRegret(std::span<const double> means, std::span<const int> picks,
                    Objective objective = Objective::kReward);

int ArgMax(std::span<const double> values);
int ArgMin(std::span<const double> values);

}  // namespace bandits

#endif  // BANDITS_EPISODE_H_
