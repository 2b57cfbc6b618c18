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

#include "bandits/infarms.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "bandits/errors.h"

namespace bandits {

double ReservoirArm::Sample(RngStream& rng) const {
  return noise > 0.0 ? mean + rng.Uniform(-noise, noise) : mean;
}

Reservoir::Reservoir(Sampler sampler, double mu_star, double bound)
    : sampler_(std::move(sampler)), mu_star_(mu_star), bound_(bound) {
  if (!sampler_) throw ConfigError("Reservoir: null sampler");
  if (!(bound_ > 0.0)) throw ConfigError("Reservoir: bound must be > 0");
}

ReservoirArm Reservoir::Draw(RngStream& rng) const {
  const ReservoirArm arm = sampler_(rng);
  if (std::abs(arm.mean) + arm.noise > bound_ + 1e-12) {
    throw InvariantError("Reservoir: arm exceeds the sample bound");
  }
  if (arm.mean > mu_star_) {
    throw InvariantError("Reservoir: mean above the right end point");
  }
  return arm;
}

Reservoir CanonicalReservoir(double beta, double mu_star, double noise) {
  if (!(beta > 0.0)) throw ConfigError("CanonicalReservoir: beta must be > 0");
  if (!(noise >= 0.0)) throw ConfigError("CanonicalReservoir: noise < 0");
  const double bound =
      std::max(std::abs(mu_star), std::abs(mu_star - 1.0)) + noise;
  return Reservoir(
      [beta, mu_star, noise](RngStream& rng) {
        return ReservoirArm{mu_star - std::pow(rng.Uniform(), 1.0 / beta),
                            noise};
      },
      mu_star, bound);
}

Reservoir PointMassReservoir(double mu_star, double noise) {
  if (!(noise >= 0.0)) throw ConfigError("PointMassReservoir: noise < 0");
  return Reservoir(
      [mu_star, noise](RngStream&) { return ReservoirArm{mu_star, noise}; },
      mu_star, std::max(std::abs(mu_star) + noise, 1e-12));
}

Reservoir DiscreteReservoir(std::vector<double> means, double noise) {
  if (means.empty()) throw ConfigError("DiscreteReservoir: no means");
  if (!(noise >= 0.0)) throw ConfigError("DiscreteReservoir: noise < 0");
  double top = means[0];
  double bound = 0.0;
  for (double m : means) {
    top = std::max(top, m);
    bound = std::max(bound, std::abs(m) + noise);
  }
  return Reservoir(
      [means = std::move(means), noise](RngStream& rng) {
        return ReservoirArm{
            means[rng.UniformInt(static_cast<int>(means.size()))], noise};
      },
      top, std::max(bound, 1e-12));
}

void ValidateSiriConfig(const SiriConfig& c) {
  if (!(c.beta > 0.0)) throw ConfigError("SiRI: beta must be > 0");
  if (!(c.C > 0.0)) throw ConfigError("SiRI: C must be > 0");
  if (!(c.delta > 0.0 && c.delta < 1.0)) {
    throw ConfigError("SiRI: delta must lie in (0, 1)");
  }
  if (!(c.A > 0.0)) throw ConfigError("SiRI: A must be > 0");
  if (c.T < 2) throw ConfigError("SiRI: T must be >= 2");
}

double SiriA(std::int64_t T, double beta, double A) {
  if (T < 2) throw ConfigError("SiRI: T must be >= 2");
  const double l = std::log(static_cast<double>(T));
  if (beta < 2.0) return A;
  if (beta == 2.0) return A / (l * l);
  return A / l;
}

std::int64_t SiriBarT(std::int64_t T, double beta, double A) {
  const double b = std::min(beta, 2.0);
  const double v = SiriA(T, beta, A) * std::pow(static_cast<double>(T), b / 2);
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(v)));
}

double SiriBValue(double mean, std::int64_t n, double C, double delta,
                  std::int64_t t_bar, double b) {
  if (n < 1) throw ConfigError("SiRI: B-value needs at least one pull");
  const double log_term = std::max(
      0.0, (2.0 * t_bar / b) * std::log(2.0) - std::log(n * delta));
  return mean + 2.0 * std::sqrt(C / n * log_term) + 2.0 * C / n * log_term;
}

SiriResult SiriRun(const Reservoir& reservoir, const SiriConfig& config,
                   RngStream& rng) {
  ValidateSiriConfig(config);
  const std::int64_t bar_t = SiriBarT(config.T, config.beta, config.A);
  if (bar_t > config.T) {
    throw ConfigError("SiRI: budget smaller than the initial arm draw");
  }
  const auto t_bar = static_cast<std::int64_t>(
      std::floor(std::log2(static_cast<double>(bar_t))));
  const double b = std::min(config.beta, 2.0);
  RngStream arm_rng = rng.Split("reservoir");
  RngStream sample_rng = rng.Split("samples");

  const int K = static_cast<int>(bar_t);
  std::vector<ReservoirArm> arms;
  SiriResult out;
  std::vector<double> sums(K, 0.0);
  out.pulls.assign(K, 0);
  for (int k = 0; k < K; ++k) {
    arms.push_back(reservoir.Draw(arm_rng));
    out.means.push_back(arms.back().mean);
    sums[k] += arms[k].Sample(sample_rng);
    out.pulls[k] = 1;
  }
  std::int64_t t = bar_t;
  while (t < config.T) {
    int best = 0;
    double best_b = 0.0;
    for (int k = 0; k < K; ++k) {
      const double v = SiriBValue(sums[k] / out.pulls[k], out.pulls[k],
                                  config.C, config.delta, t_bar, b);
      if (k == 0 || v > best_b) {
        best = k;
        best_b = v;
      }
    }
    const std::int64_t batch = std::min(out.pulls[best], config.T - t);
    for (std::int64_t s = 0; s < batch; ++s) {
      sums[best] += arms[best].Sample(sample_rng);
    }
    out.pulls[best] += batch;
    t += batch;
    out.rounds.push_back(best);
  }
  out.total_pulls = t;
  out.recommended = static_cast<int>(
      std::max_element(out.pulls.begin(), out.pulls.end()) -
      out.pulls.begin());
  out.simple_regret = reservoir.mu_star() - out.means[out.recommended];
  for (int k = 0; k < K; ++k) {
    out.empirical_means.push_back(sums[k] / out.pulls[k]);
  }
  return out;
}

}  // namespace bandits
