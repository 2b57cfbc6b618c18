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

#ifndef BANDITS_SPECTRAL_H_
#define BANDITS_SPECTRAL_H_

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "bandits/episode.h"
#include "bandits/graph.h"

namespace bandits {

// fᵀLf.
double Smoothness(const Eigen::VectorXd& f, const Eigen::MatrixXd& L);

// Largest d in [1, N] with (d−1)·λ_d ≤ T / log(1 + T/λ). Eigenvalues are the
// regularized ones, ascending.
int EffectiveDimension(std::span<const double> eigenvalues, double T,
                       double lambda);

// max over integer allocations t_i ≥ 0, Σt_i = T of Σ log(1 + t_i/λ_i),
// divided by log(1 + T/λ). Greedy unit-by-unit allocation; the terms are
// concave so greedy is exact.
double EffectiveDimensionNew(std::span<const double> eigenvalues,
                             std::int64_t T, double lambda,
                             std::vector<std::int64_t>* allocation = nullptr);

// d blocks K_M with unit weights inside blocks and ε between blocks.
WeightedDigraph LowerBoundGraph(int d, int M, double eps);

// Laplacian spectrum with the regularizer folded in: Λ = Λ_L + λI. Arm v has
// feature x_v = row v of Q.
struct SpectralModel {
  LaplacianSpectrum spectrum;
  double lambda = 0.01;
  Eigen::VectorXd regularized;  // Λ_L + λ, ascending

  static SpectralModel FromGraph(const WeightedDigraph& g,
                                 double lambda = 0.01);
  const Eigen::MatrixXd& features() const { return spectrum.vectors; }
  int num_arms() const { return static_cast<int>(spectrum.vectors.rows()); }
  std::vector<double> RegularizedEigenvalues() const;
  // Node values f = Qα.
  Eigen::VectorXd Values(const Eigen::VectorXd& alpha) const {
    return spectrum.vectors * alpha;
  }
};

// Penalized least squares with prior precision diag(Λ), over a fixed arm set
// (rows of `arms`). Keeps V⁻¹ and every arm's squared width through rank-one
// updates, rebuilt from scratch every `refactor_every` observations.
class RidgeState {
 public:
  RidgeState(Eigen::MatrixXd arms, const Eigen::VectorXd& prior_diagonal,
             int refactor_every = 512);

  void Observe(int arm, double reward);
  void Reset();

  int num_arms() const { return static_cast<int>(arms_.rows()); }
  double Mean(int arm) const { return arms_.row(arm).dot(alpha_hat_); }
  double Width(int arm) const;
  const Eigen::VectorXd& alpha_hat() const { return alpha_hat_; }
  const Eigen::VectorXd& b() const { return b_; }
  const Eigen::MatrixXd& V() const { return v_; }
  const Eigen::MatrixXd& V_inverse() const { return v_inv_; }
  const Eigen::MatrixXd& arms() const { return arms_; }
  std::int64_t observations() const { return observations_; }

 private:
  void Refactor();

  Eigen::MatrixXd arms_;
  Eigen::VectorXd prior_;
  int refactor_every_;
  Eigen::MatrixXd v_;
  Eigen::MatrixXd v_inv_;
  Eigen::VectorXd b_;
  Eigen::VectorXd alpha_hat_;
  Eigen::VectorXd width_sq_;
  std::int64_t observations_ = 0;
};

enum class CSchedule { kConstant, kLogT };

struct SpectralConfig {
  double lambda = 0.01;
  double R = 0.01;      // noise scale
  double C = 1.0;       // bound on ‖α‖_Λ
  double delta = 0.001;
  int d = 0;            // effective dimension; 0 = compute at `horizon`
  std::int64_t horizon = 1000;
  CSchedule c_schedule = CSchedule::kConstant;
};

// C_t: constant C, or C·max(1, log t).
double ConfidenceC(const SpectralConfig& config, std::int64_t t);

// β_t = R·sqrt(d·log(1 + t/λ) + 2 log(1/δ)) + C_t.
double SpectralBeta(const SpectralConfig& config, int d, std::int64_t t);

class SpectralUcbPolicy : public Policy {
 public:
  SpectralUcbPolicy(const SpectralModel& model, SpectralConfig config);
  int num_actions() const override { return state_.num_arms(); }
  int Select(std::int64_t t, RngStream& rng) override;
  void Update(std::int64_t t, const Feedback& feedback,
              RngStream& rng) override;

  int d() const { return d_; }
  const RidgeState& state() const { return state_; }

 private:
  SpectralConfig config_;
  int d_;
  RidgeState state_;
};

// Default posterior scale g.
double SpectralTsDefaultScale(const SpectralConfig& config, int d, int N);

class SpectralTsPolicy : public Policy {
 public:
  // v < 0 selects SpectralTsDefaultScale.
  SpectralTsPolicy(const SpectralModel& model, SpectralConfig config,
                   double v = -1.0);
  int num_actions() const override { return state_.num_arms(); }
  int Select(std::int64_t t, RngStream& rng) override;
  void Update(std::int64_t t, const Feedback& feedback,
              RngStream& rng) override;

  double v() const { return v_; }

 private:
  SpectralConfig config_;
  int d_;
  double v_;
  RidgeState state_;
};

// Phase j spans rounds 2^{j−1} .. 2^j − 1. Survivors are played round-robin;
// at the end of each phase a fresh estimate from that phase's data drops
// every arm whose upper bound falls below the best lower bound,
// bounds being estimate ± β·‖x‖_{V⁻¹}.
class SpectralEliminatorPolicy : public Policy {
 public:
  SpectralEliminatorPolicy(Eigen::MatrixXd arms,
                           const Eigen::VectorXd& prior_diagonal, double beta);
  static SpectralEliminatorPolicy FromModel(const SpectralModel& model,
                                            double beta);

  int num_actions() const override { return static_cast<int>(arms_.rows()); }
  int Select(std::int64_t t, RngStream& rng) override;
  void Update(std::int64_t t, const Feedback& feedback,
              RngStream& rng) override;

  const std::vector<int>& survivors() const { return survivors_; }
  int phase() const { return phase_; }

 private:
  void EndPhase();

  Eigen::MatrixXd arms_;
  Eigen::VectorXd prior_;
  double beta_;
  std::vector<int> survivors_;
  int phase_ = 1;
  std::int64_t phase_end_ = 1;  // last round of the current phase
  std::size_t cursor_ = 0;
  RidgeState phase_state_;
};

struct EliminatorResult {
  RegretTrace trace;
  std::vector<int> survivors;
};

// Stochastic node rewards f_v plus N(0, R²) noise.
class SmoothRewardEnvironment : public Environment {
 public:
  SmoothRewardEnvironment(std::vector<double> means, double noise);
  int num_actions() const override { return static_cast<int>(means_.size()); }
  Objective objective() const override { return Objective::kReward; }
  void BeginRound(std::int64_t, RngStream&) override {}
  Feedback Respond(int action, RngStream& rng) override;
  std::span<const double> RoundValues() const override { return means_; }
  std::optional<std::vector<double>> Means() const override { return means_; }

 private:
  std::vector<double> means_;
  double noise_;
};

EliminatorResult SpectralEliminatorRun(SpectralEliminatorPolicy& policy,
                                       Environment& env, std::int64_t T,
                                       const RngStream& rng);

// Block-constant reward on LowerBoundGraph: block k gets value
// low + (high − low)·k/(d − 1), so the last block is best.
std::vector<double> BlockReward(int d, int M, double low, double high);

}  // namespace bandits

#endif  // BANDITS_SPECTRAL_H_
