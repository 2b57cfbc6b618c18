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

#include "bandits/episode.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "bandits/errors.h"

namespace bandits {

std::vector<int> RegretTrace::Actions() const {
  std::vector<int> out;
  out.reserve(rounds.size());
  for (const auto& r : rounds) out.push_back(r.action);
  return out;
}

void ValidateProbabilities(std::span<const double> probs) {
  if (probs.empty()) throw InvariantError("empty probability vector");
  double sum = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (!(probs[i] >= 0.0) || !std::isfinite(probs[i])) {
      std::ostringstream msg;
      msg << "probability " << i << " is invalid: " << probs[i];
      throw InvariantError(msg.str());
    }
    sum += probs[i];
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg << "probabilities sum to " << sum;
    throw InvariantError(msg.str());
  }
}

void ValidateLosses(std::span<const double> losses) {
  for (double l : losses) {
    if (!(l >= 0.0 && l <= 1.0)) {
      std::ostringstream msg;
      msg << "loss outside [0,1]: " << l;
      throw ConfigError(msg.str());
    }
  }
}

int ArgMax(std::span<const double> values) {
  int best = -1;
  for (int i = 0; i < static_cast<int>(values.size()); ++i) {
    if (best < 0 || values[i] > values[best]) best = i;
  }
  return best;
}

int ArgMin(std::span<const double> values) {
  int best = -1;
  for (int i = 0; i < static_cast<int>(values.size()); ++i) {
    if (best < 0 || values[i] < values[best]) best = i;
  }
  return best;
}

RegretTrace RunEpisode(Policy& policy, Environment& env, std::int64_t T,
                       const RngStream& rng) {
  if (T < 1) throw ConfigError("horizon must be at least 1");
  const int n = env.num_actions();
  if (policy.num_actions() != n) {
    std::ostringstream msg;
    msg << "policy has " << policy.num_actions()
        << " actions but environment has " << n;
    throw ConfigError(msg.str());
  }
  RngStream env_rng = rng.Split("env");
  RngStream policy_rng = rng.Split("policy");

  RegretTrace trace;
  trace.objective = env.objective();
  const bool reward = trace.objective == Objective::kReward;
  const auto means = env.Means();
  double best_mean = 0.0;
  if (means) {
    if (static_cast<int>(means->size()) != n) {
      throw ConfigError("environment means have the wrong length");
    }
    trace.comparator = Comparator::kBestMean;
    best_mean = reward ? *std::max_element(means->begin(), means->end())
                       : *std::min_element(means->begin(), means->end());
  }
  trace.rounds.reserve(static_cast<std::size_t>(T));

  std::vector<double> totals(n, 0.0);
  double incurred = 0.0;
  double pseudo = 0.0;
  for (std::int64_t t = 1; t <= T; ++t) {
    env.BeginRound(t, env_rng);
    const int action = policy.Select(t, policy_rng);
    if (auto dist = policy.Distribution()) ValidateProbabilities(*dist);
    if (action < 0 || action >= n) {
      throw InvariantError("policy selected an out-of-range action");
    }
    const auto values = env.RoundValues();
    Feedback fb = env.Respond(action, env_rng);
    policy.Update(t, fb, policy_rng);

    double regret;
    if (means) {
      const double gap = reward ? best_mean - (*means)[action]
                                : (*means)[action] - best_mean;
      pseudo += gap;
      regret = pseudo;
    } else {
      incurred += values[action];
      for (int i = 0; i < n; ++i) totals[i] += values[i];
      regret = reward
                   ? *std::max_element(totals.begin(), totals.end()) - incurred
                   : incurred - *std::min_element(totals.begin(), totals.end());
    }
    trace.rounds.push_back({t, action, fb.value, regret});
  }
  return trace;
}

double HindsightRegret(const std::vector<std::vector<double>>& losses,
                       std::span<const int> picks) {
  if (losses.size() != picks.size()) {
    throw ConfigError("loss history and picks differ in length");
  }
  if (losses.empty()) return 0.0;
  const std::size_t n = losses.front().size();
  std::vector<double> totals(n, 0.0);
  double incurred = 0.0;
  for (std::size_t t = 0; t < losses.size(); ++t) {
    if (losses[t].size() != n) throw ConfigError("ragged loss history");
    incurred += losses[t].at(picks[t]);
    for (std::size_t i = 0; i < n; ++i) totals[i] += losses[t][i];
  }
  return incurred - *std::min_element(totals.begin(), totals.end());
}

double PseudoRegret(std::span<const double> means, std::span<const int> picks,
                    Objective objective) {
  if (means.empty()) throw ConfigError("no means");
  const double best =
      objective == Objective::kReward
          ? *std::max_element(means.begin(), means.end())
          : *std::min_element(means.begin(), means.end());
  double total = 0.0;
  for (int a : picks) {
    total += objective == Objective::kReward ? best - means[a]
                                             : means[a] - best;
  }
  return total;
}

}  // namespace bandits
