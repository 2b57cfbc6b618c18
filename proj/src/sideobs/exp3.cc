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

#include <cmath>
#include <utility>

#include "bandits/errors.h"
#include "bandits/sideobs.h"

namespace bandits {

Exp3Policy::Exp3Policy(int num_actions, Exp3Config config)
    : n_(num_actions),
      config_(config),
      l_hat_(num_actions, 0.0),
      probs_(num_actions, 1.0 / std::max(1, num_actions)),
      last_(num_actions, 0.0) {
  if (num_actions < 1) throw ConfigError("Exp3Policy: no actions");
  if (config_.estimator == Estimator::kRes && num_actions < 3) {
    throw ConfigError("Exp3Policy: Res estimator needs N >= 3");
  }
  if (config_.R < 0.0) throw ConfigError("Exp3Policy: R < 0");
  if (config_.epsilon > 1.0) throw ConfigError("Exp3Policy: epsilon > 1");
}

void Exp3Policy::ComputeRates() {
  switch (config_.estimator) {
    case Estimator::kWix:
      eta_ = WixEta(n_, config_.R, second_moment_);
      gamma_ = config_.R * eta_;
      break;
    case Estimator::kRes:
      eta_ = ResEta(n_, second_moment_);
      gamma_ = 0.0;
      break;
    case Estimator::kSet:
      eta_ = Exp3IxEta(n_, second_moment_);
      gamma_ = 0.0;
      break;
    default:
      eta_ = Exp3IxEta(n_, second_moment_);
      gamma_ = eta_ / 2.0;
      break;
  }
  if (config_.fixed_eta > 0.0) eta_ = config_.fixed_eta;
  if (config_.fixed_gamma >= 0.0) gamma_ = config_.fixed_gamma;
}

int Exp3Policy::Select(std::int64_t, RngStream& rng) {
  ComputeRates();
  probs_ = ExpWeights(l_hat_, eta_);
  return rng.Categorical(probs_);
}

void Exp3Policy::Update(std::int64_t, const Feedback& fb, RngStream& rng) {
  const WeightedDigraph empty = WeightedDigraph::Empty(n_);
  const WeightedDigraph& g = fb.graph ? *fb.graph : empty;
  if (g.n() != n_) throw ConfigError("Exp3Policy: graph size mismatch");
  if (static_cast<int>(fb.signals.size()) != n_) {
    throw ConfigError("Exp3Policy: signal size mismatch");
  }
  const int chosen = fb.action;
  std::vector<char> observed(n_, 0);
  for (int i : fb.observed) observed.at(i) = 1;

  if (config_.estimator == Estimator::kIxt && config_.epsilon < 0.0) {
    config_.epsilon = EffectiveIndependenceNumber(g).epsilon;
  }

  std::vector<double> column(n_);
  std::vector<char> others;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) column[j] = ObservationWeight(g, j, i);
    const double c = fb.signals[i];
    const bool seen = observed[i] != 0;
    double est = 0.0;
    switch (config_.estimator) {
      case Estimator::kSet:
      case Estimator::kIx: {
        double o = 0.0;
        for (int j = 0; j < n_; ++j) {
          if (j == i || g.HasArc(j, i)) o += probs_[j];
        }
        est = config_.estimator == Estimator::kSet
                  ? SetEstimate(c, o, seen)
                  : IxEstimate(c, o, gamma_, seen);
        break;
      }
      case Estimator::kBasic:
        est = BasicEstimate(c, probs_, column, gamma_);
        break;
      case Estimator::kIxt:
        est = IxtEstimate(c, probs_, column, column[chosen], config_.epsilon,
                          gamma_);
        break;
      case Estimator::kWix:
        est = WixEstimate(c, probs_, column, column[chosen], gamma_);
        break;
      case Estimator::kRes: {
        if (!seen) break;
        others.clear();
        for (int j = 0; j < n_; ++j) {
          if (j != i && j != chosen) others.push_back(observed[j]);
        }
        est = static_cast<double>(ResSurrogate(probs_[i], others, n_, rng)) *
              c;
        break;
      }
    }
    last_[i] = est;
  }
  for (int i = 0; i < n_; ++i) {
    second_moment_ += probs_[i] * last_[i] * last_[i];
    l_hat_[i] += last_[i];
  }
}

}  // namespace bandits
