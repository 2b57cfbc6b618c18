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

#include "bandits/baselines.h"

#include <algorithm>
#include <cmath>

#include "bandits/errors.h"

namespace bandits {

FixedActionPolicy::FixedActionPolicy(int num_actions, int action)
    : num_actions_(num_actions), action_(action) {
  if (action < 0 || action >= num_actions) {
    throw ConfigError("fixed action out of range");
  }
}

UniformPolicy::UniformPolicy(int num_actions)
    : num_actions_(num_actions),
      probs_(num_actions, 1.0 / std::max(num_actions, 1)) {
  if (num_actions < 1) throw ConfigError("need at least one action");
}

int UniformPolicy::Select(std::int64_t, RngStream& rng) {
  return rng.UniformInt(num_actions_);
}

Ucb1Policy::Ucb1Policy(int num_actions, Objective objective, double scale)
    : num_actions_(num_actions),
      objective_(objective),
      scale_(scale),
      means_(num_actions, 0.0),
      counts_(num_actions, 0) {
  if (num_actions < 1) throw ConfigError("need at least one action");
  if (!(scale > 0.0)) throw ConfigError("UCB1 scale must be positive");
}

int Ucb1Policy::Select(std::int64_t, RngStream&) {
  for (int i = 0; i < num_actions_; ++i) {
    if (counts_[i] == 0) return i;
  }
  const double log_t = std::log(static_cast<double>(plays_ + 1));
  int best = 0;
  double best_index = -INFINITY;
  for (int i = 0; i < num_actions_; ++i) {
    const double index =
        means_[i] + std::sqrt(2.0 * log_t / static_cast<double>(counts_[i]));
    if (index > best_index) {
      best_index = index;
      best = i;
    }
  }
  return best;
}

void Ucb1Policy::Update(std::int64_t, const Feedback& feedback, RngStream&) {
  const int a = feedback.action;
  double r = feedback.value / scale_;
  if (objective_ == Objective::kLoss) r = 1.0 - r;
  ++plays_;
  ++counts_[a];
  means_[a] += (r - means_[a]) / static_cast<double>(counts_[a]);
}

}  // namespace bandits
