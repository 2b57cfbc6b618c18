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

#ifndef BANDITS_KERNEL_H_
#define BANDITS_KERNEL_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bandits/episode.h"
#include "bandits/rng.h"

namespace bandits {

class KernelFn {
 public:
  enum class Kind { kLinear, kRbf, kPolynomial };

  static KernelFn Linear();
  // exp(−‖x−y‖²/2σ²).
  static KernelFn Rbf(double sigma);
  // (xᵀy + 1)^p.
  static KernelFn Polynomial(int p);

  Kind kind() const { return kind_; }
  double sigma() const { return sigma_; }
  int degree() const { return degree_; }

  double operator()(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;
  // Rows of X are points.
  Eigen::MatrixXd Gram(const Eigen::MatrixXd& X) const;

 private:
  KernelFn(Kind kind, double sigma, int degree)
      : kind_(kind), sigma_(sigma), degree_(degree) {}

  Kind kind_;
  double sigma_;
  int degree_;
};

// Dual ridge regression over observed contexts, holding a Cholesky factor of
// K_t + γI that grows by one bordered row per observation.
class KernelState {
 public:
  static constexpr int kRefactorEvery = 256;

  KernelState(KernelFn kernel, double gamma);

  void Add(const Eigen::VectorXd& x, double y);

  int size() const { return static_cast<int>(xs_.size()); }
  double gamma() const { return gamma_; }
  const KernelFn& kernel() const { return kernel_; }

  // k_{x,t}ᵀ(K_t+γI)⁻¹y_t; 0 on an empty state.
  double Predict(const Eigen::VectorXd& x) const;
  // γ^{−1/2} sqrt(k(x,x) − k_{x,t}ᵀ(K_t+γI)⁻¹k_{x,t}).
  double Width(const Eigen::VectorXd& x) const;

  Eigen::MatrixXd KernelMatrix() const;
  // ‖(K_t+γI)z − y‖∞ for the cached dual coefficients z.
  double Residual() const;
  // Eigenvalues of K_t in descending order, clipped at 0. Their nonzero part
  // is the spectrum of Φ_tᵀΦ_t.
  std::vector<double> DataSpectrum() const;

 private:
  Eigen::VectorXd KernelColumn(const Eigen::VectorXd& x) const;
  void Refactor();
  void SolveDual();

  KernelFn kernel_;
  double gamma_;
  std::vector<Eigen::VectorXd> xs_;
  Eigen::VectorXd y_;
  Eigen::MatrixXd chol_;  // lower factor in the leading size()×size() block
  Eigen::VectorXd dual_;
};

// argmax_a Predict(x_a) + η·Width(x_a); ties to the lowest index. Rows of
// `arms` are contexts.
int KernelUcbSelect(const KernelState& state, const Eigen::MatrixXd& arms,
                    double eta);

// d̃ = min{j : jγ ln T ≥ Σ_{i>j} λ_i − γ}, scanning j = 0, 1, ... over the
// descending spectrum; returns the list length if nothing qualifies.
int EffectiveDimTilde(const std::vector<double>& spectrum_desc, double gamma,
                      std::int64_t T);

// sqrt(2 ln(2TN/δ)).
double SupKernelEta(std::int64_t T, int N, double delta);

struct KernelUcbConfig {
  double gamma = 1.0;
  double eta = 1.0;
};

// KernelUCB over a fixed set of arm contexts.
class KernelUcbPolicy : public Policy {
 public:
  KernelUcbPolicy(Eigen::MatrixXd arms, KernelFn kernel,
                  KernelUcbConfig config);

  int num_actions() const override { return static_cast<int>(arms_.rows()); }
  int Select(std::int64_t t, RngStream& rng) override;
  void Update(std::int64_t t, const Feedback& feedback,
              RngStream& rng) override;

  const KernelState& state() const { return state_; }

 private:
  Eigen::MatrixXd arms_;
  KernelUcbConfig config_;
  KernelState state_;
};

// Fixed arm contexts with mean rewards f(x_a) and Gaussian noise.
class ContextArmEnvironment : public Environment {
 public:
  ContextArmEnvironment(std::vector<double> means, double noise_sd);
  // Linear model: means = arms·θ.
  static ContextArmEnvironment Linear(const Eigen::MatrixXd& arms,
                                      const Eigen::VectorXd& theta,
                                      double noise_sd);

  int num_actions() const override { return static_cast<int>(means_.size()); }
  Objective objective() const override { return Objective::kReward; }
  void BeginRound(std::int64_t t, RngStream& rng) override;
  Feedback Respond(int action, RngStream& rng) override;
  std::span<const double> RoundValues() const override { return means_; }
  std::optional<std::vector<double>> Means() const override { return means_; }

 private:
  std::vector<double> means_;
  double noise_sd_;
};

// Context matrix from CSV: one arm per row, one feature per column. A first
// line that does not parse as numbers is taken as a header.
Eigen::MatrixXd ReadContextsCsv(std::istream& in);
Eigen::MatrixXd ReadContextsCsvFile(const std::string& path);

}  // namespace bandits

#endif  // BANDITS_KERNEL_H_
