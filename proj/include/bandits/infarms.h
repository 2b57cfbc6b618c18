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

#ifndef BANDITS_INFARMS_H_
#define BANDITS_INFARMS_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "bandits/rng.h"

namespace bandits {

// One arm drawn from a reservoir: samples are mean + Uniform[−noise, noise].
struct ReservoirArm {
  double mean = 0.0;
  double noise = 0.0;

  double Sample(RngStream& rng) const;
};

class Reservoir {
 public:
  using Sampler = std::function<ReservoirArm(RngStream&)>;

  // `bound` is C: every sample lies in [−C, C].
  Reservoir(Sampler sampler, double mu_star, double bound);

  ReservoirArm Draw(RngStream& rng) const;
  double mu_star() const { return mu_star_; }
  double bound() const { return bound_; }

 private:
  Sampler sampler_;
  double mu_star_;
  double bound_;
};

// μ = μ★ − U^{1/β}, so P(μ > μ★ − ε) = ε^β for ε ≤ 1, with uniform noise of
// half-width `noise`.
Reservoir CanonicalReservoir(double beta, double mu_star = 0.5,
                             double noise = 0.5);
// Every arm has mean μ★.
Reservoir PointMassReservoir(double mu_star, double noise = 0.0);
// Means drawn uniformly from `means`.
Reservoir DiscreteReservoir(std::vector<double> means, double noise = 0.0);

struct SiriConfig {
  double beta = 1.0;
  double C = 1.0;
  double delta = 0.1;
  double A = 0.25;
  std::int64_t T = 1000;
};

void ValidateSiriConfig(const SiriConfig& config);

// A(T) with b = min(β, 2): A, A/log(T)², A/log(T) for β <, =, > 2.
double SiriA(std::int64_t T, double beta, double A);
// ⌈A(T) T^{b/2}⌉.
std::int64_t SiriBarT(std::int64_t T, double beta, double A);

// μ̂ + 2 sqrt((C/n) L) + (2C/n) L with L = log(2^{2t̄/b} / (n δ)), L
// clamped at 0.
double SiriBValue(double mean, std::int64_t n, double C, double delta,
                  std::int64_t t_bar, double b);

struct SiriResult {
  int recommended = -1;
  double simple_regret = 0.0;
  std::int64_t total_pulls = 0;
  std::vector<double> means;
  std::vector<std::int64_t> pulls;
  std::vector<double> empirical_means;
  // Arm chosen in each doubling round.
  std::vector<int> rounds;
};

// Draws T̄_β arms, pulls each once, then repeatedly doubles the pull count of
// the arm with the largest B-value (ties to the lower index), cutting the
// last batch at T. Returns the most pulled arm, lower index on ties.
SiriResult SiriRun(const Reservoir& reservoir, const SiriConfig& config,
                   RngStream& rng);

}  // namespace bandits

#endif  // BANDITS_INFARMS_H_
