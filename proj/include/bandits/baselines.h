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

#ifndef BANDITS_BASELINES_H_
#define BANDITS_BASELINES_H_

#include <cstdint>
#include <vector>

#include "bandits/episode.h"

namespace bandits {

// Always plays the same action.
class FixedActionPolicy : public Policy {
 public:
  FixedActionPolicy(int num_actions, int action);
  int num_actions() const override { return num_actions_; }
  int Select(std::int64_t, RngStream&) override { return action_; }
  void Update(std::int64_t, const Feedback&, RngStream&) override {}

 private:
  int num_actions_;
  int action_;
};

class UniformPolicy : public Policy {
 public:
  explicit UniformPolicy(int num_actions);
  int num_actions() const override { return num_actions_; }
  int Select(std::int64_t t, RngStream& rng) override;
  std::optional<std::span<const double>> Distribution() const override {
    return std::span<const double>(probs_);
  }
  void Update(std::int64_t, const Feedback&, RngStream&) override {}

 private:
  int num_actions_;
  std::vector<double> probs_;
};

// UCB1 with index mean + sqrt(2 ln t / n). Feedback values are mapped to
// [0, 1] rewards by dividing by `scale`; loss feedback is turned into
// reward 1 − value/scale. Unplayed arms go first, lowest index.
class Ucb1Policy : public Policy {
 public:
  Ucb1Policy(int num_actions, Objective objective = Objective::kReward,
             double scale = 1.0);
  int num_actions() const override { return num_actions_; }
  int Select(std::int64_t t, RngStream& rng) override;
  void Update(std::int64_t t, const Feedback& feedback,
              RngStream& rng) override;

  const std::vector<double>& means() const { return means_; }
  const std::vector<std::int64_t>& counts() const { return counts_; }

 private:
  int num_actions_;
  Objective objective_;
  double scale_;
  std::int64_t plays_ = 0;
  std::vector<double> means_;
  std::vector<std::int64_t> counts_;
};

}  // namespace bandits

#endif  // BANDITS_BASELINES_H_
