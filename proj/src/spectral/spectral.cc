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

#include "bandits/spectral.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>

#include "bandits/errors.h"

namespace bandits {

double Smoothness(const Eigen::VectorXd& f, const Eigen::MatrixXd& L) {
  if (L.rows() != f.size() || L.cols() != f.size()) {
    throw ConfigError("smoothness: dimension mismatch");
  }
  return f.dot(L * f);
}

int EffectiveDimension(std::span<const double> eigenvalues, double T,
                       double lambda) {
  if (eigenvalues.empty()) throw ConfigError("empty spectrum");
  if (!(lambda > 0.0) || T < 1) {
    throw ConfigError("effective dimension needs λ > 0 and T ≥ 1");
  }
  const double bound = T / std::log1p(T / lambda);
  int d = 1;
  for (int k = 2; k <= static_cast<int>(eigenvalues.size()); ++k) {
    if ((k - 1) * eigenvalues[k - 1] <= bound) d = k;
  }
  return d;
}

double EffectiveDimensionNew(std::span<const double> eigenvalues,
                             std::int64_t T, double lambda,
                             std::vector<std::int64_t>* allocation) {
  const int n = static_cast<int>(eigenvalues.size());
  if (n == 0) throw ConfigError("empty spectrum");
  if (!(lambda > 0.0) || T < 1) {
    throw ConfigError("effective dimension needs λ > 0 and T ≥ 1");
  }
  std::vector<std::int64_t> t(n, 0);
  auto gain = [&](int i) {
    const double l = eigenvalues[i];
    return std::log1p((t[i] + 1) / l) - std::log1p(t[i] / l);
  };
  // Max-heap on (gain, −index) so equal gains go to the lower index.
  using Entry = std::pair<double, int>;
  auto cmp = [](const Entry& a, const Entry& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
  for (int i = 0; i < n; ++i) heap.push({gain(i), i});
  for (std::int64_t unit = 0; unit < T; ++unit) {
    const int i = heap.top().second;
    heap.pop();
    ++t[i];
    heap.push({gain(i), i});
  }
  double numerator = 0.0;
  for (int i = 0; i < n; ++i) numerator += std::log1p(t[i] / eigenvalues[i]);
  if (allocation) *allocation = t;
  return numerator / std::log1p(static_cast<double>(T) / lambda);
}

WeightedDigraph LowerBoundGraph(int d, int M, double eps) {
  if (d < 1 || M < 1) throw ConfigError("block count and size must be ≥ 1");
  if (!(eps > 0.0 && eps < 1.0)) throw ConfigError("ε must lie in (0,1)");
  const int n = d * M;
  WeightedDigraph g(n, false);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      g.AddArc(i, j, i / M == j / M ? 1.0 : eps);
    }
  }
  return g;
}

std::vector<double> BlockReward(int d, int M, double low, double high) {
  std::vector<double> f(static_cast<std::size_t>(d) * M);
  for (std::size_t v = 0; v < f.size(); ++v) {
    const int block = static_cast<int>(v) / M;
    f[v] = d == 1 ? high : low + (high - low) * block / (d - 1.0);
  }
  return f;
}

SpectralModel SpectralModel::FromGraph(const WeightedDigraph& g,
                                       double lambda) {
  if (!(lambda > 0.0)) throw ConfigError("λ must be positive");
  SpectralModel m;
  m.lambda = lambda;
  m.spectrum = Eigendecompose(Laplacian(g));
  // Clamp round-off below zero so Λ_reg ≥ λ.
  m.regularized = m.spectrum.eigenvalues.cwiseMax(0.0).array() + lambda;
  return m;
}

std::vector<double> SpectralModel::RegularizedEigenvalues() const {
  return std::vector<double>(regularized.data(),
                             regularized.data() + regularized.size());
}

RidgeState::RidgeState(Eigen::MatrixXd arms,
                       const Eigen::VectorXd& prior_diagonal,
                       int refactor_every)
    : arms_(std::move(arms)),
      prior_(prior_diagonal),
      refactor_every_(refactor_every) {
  if (arms_.cols() != prior_.size()) {
    throw ConfigError("prior dimension does not match the features");
  }
  if ((prior_.array() <= 0.0).any()) {
    throw ConfigError("prior precision must be positive");
  }
  if (refactor_every_ < 1) throw ConfigError("refactor interval must be ≥ 1");
  Reset();
}

void RidgeState::Reset() {
  const auto D = prior_.size();
  v_ = prior_.asDiagonal();
  v_inv_ = prior_.cwiseInverse().asDiagonal();
  b_ = Eigen::VectorXd::Zero(D);
  alpha_hat_ = Eigen::VectorXd::Zero(D);
  width_sq_ = (arms_ * v_inv_).cwiseProduct(arms_).rowwise().sum();
  observations_ = 0;
}

void RidgeState::Observe(int arm, double reward) {
  const Eigen::VectorXd x = arms_.row(arm).transpose();
  v_.noalias() += x * x.transpose();
  b_ += reward * x;
  ++observations_;
  if (observations_ % refactor_every_ == 0) {
    Refactor();
    return;
  }
  const Eigen::VectorXd u = v_inv_ * x;
  const double denom = 1.0 + x.dot(u);
  v_inv_.noalias() -= (u / denom) * u.transpose();
  const Eigen::VectorXd proj = arms_ * u;
  width_sq_ -= proj.cwiseAbs2() / denom;
  alpha_hat_ = v_inv_ * b_;
}

void RidgeState::Refactor() {
  Eigen::LLT<Eigen::MatrixXd> llt(v_);
  if (llt.info() != Eigen::Success) {
    throw NumericalError("design matrix lost positive definiteness");
  }
  v_inv_ = llt.solve(Eigen::MatrixXd::Identity(v_.rows(), v_.cols()));
  v_inv_ = 0.5 * (v_inv_ + v_inv_.transpose());
  width_sq_ = (arms_ * v_inv_).cwiseProduct(arms_).rowwise().sum();
  alpha_hat_ = llt.solve(b_);
}

double RidgeState::Width(int arm) const {
  return std::sqrt(std::max(width_sq_(arm), 0.0));
}

double ConfidenceC(const SpectralConfig& config, std::int64_t t) {
  if (config.c_schedule == CSchedule::kConstant) return config.C;
  return config.C * std::max(1.0, std::log(static_cast<double>(t)));
}

double SpectralBeta(const SpectralConfig& config, int d, std::int64_t t) {
  return config.R * std::sqrt(d * std::log1p(t / config.lambda) +
                              2.0 * std::log(1.0 / config.delta)) +
         ConfidenceC(config, t);
}

namespace {

int ResolveDimension(const SpectralModel& model, const SpectralConfig& c) {
  if (c.d > 0) return c.d;
  const auto eig = model.RegularizedEigenvalues();
  return EffectiveDimension(eig, static_cast<double>(c.horizon), c.lambda);
}

void CheckConfig(const SpectralConfig& c) {
  if (!(c.lambda > 0.0)) throw ConfigError("λ must be positive");
  if (!(c.delta > 0.0 && c.delta < 1.0)) throw ConfigError("δ outside (0,1)");
  if (c.R < 0.0 || c.C < 0.0) throw ConfigError("R and C must be ≥ 0");
  if (c.horizon < 1) throw ConfigError("horizon must be ≥ 1");
}

}  // namespace

SpectralUcbPolicy::SpectralUcbPolicy(const SpectralModel& model,
                                     SpectralConfig config)
    : config_(config),
      d_((CheckConfig(config), ResolveDimension(model, config))),
      state_(model.features(), model.regularized) {}

int SpectralUcbPolicy::Select(std::int64_t t, RngStream&) {
  const double beta = SpectralBeta(config_, d_, t);
  int best = 0;
  double best_score = -INFINITY;
  for (int v = 0; v < state_.num_arms(); ++v) {
    const double score = state_.Mean(v) + beta * state_.Width(v);
    if (score > best_score) {
      best_score = score;
      best = v;
    }
  }
  return best;
}

void SpectralUcbPolicy::Update(std::int64_t, const Feedback& feedback,
                               RngStream&) {
  state_.Observe(feedback.action, feedback.value);
}

double SpectralTsDefaultScale(const SpectralConfig& c, int d, int N) {
  const double T = static_cast<double>(c.horizon);
  const double l = c.lambda;
  return std::sqrt(4.0 * std::log(T * N)) *
             (c.R * std::sqrt(6.0 * d * std::log((l + T) / (c.delta * l))) +
              c.C) +
         c.R * std::sqrt(2.0 * d * std::log((l + T) * T * T / (c.delta * l))) +
         c.C;
}

SpectralTsPolicy::SpectralTsPolicy(const SpectralModel& model,
                                   SpectralConfig config, double v)
    : config_(config),
      d_((CheckConfig(config), ResolveDimension(model, config))),
      v_(v >= 0.0 ? v
                  : SpectralTsDefaultScale(config, d_, model.num_arms())),
      state_(model.features(), model.regularized) {}

int SpectralTsPolicy::Select(std::int64_t, RngStream& rng) {
  const auto D = state_.alpha_hat().size();
  Eigen::VectorXd sample = state_.alpha_hat();
  if (v_ > 0.0) {
    Eigen::LLT<Eigen::MatrixXd> llt(state_.V_inverse());
    if (llt.info() != Eigen::Success) {
      throw NumericalError("posterior covariance is not positive definite");
    }
    Eigen::VectorXd z(D);
    for (Eigen::Index i = 0; i < D; ++i) z(i) = rng.Normal();
    const Eigen::VectorXd step = llt.matrixL() * z;
    sample += v_ * step;
  }
  const Eigen::VectorXd scores = state_.arms() * sample;
  int best = 0;
  for (int i = 1; i < scores.size(); ++i) {
    if (scores(i) > scores(best)) best = i;
  }
  return best;
}

void SpectralTsPolicy::Update(std::int64_t, const Feedback& feedback,
                              RngStream&) {
  state_.Observe(feedback.action, feedback.value);
}

SpectralEliminatorPolicy::SpectralEliminatorPolicy(
    Eigen::MatrixXd arms, const Eigen::VectorXd& prior_diagonal, double beta)
    : arms_(std::move(arms)),
      prior_(prior_diagonal),
      beta_(beta),
      phase_state_(arms_, prior_) {
  if (arms_.rows() < 1) throw ConfigError("need at least one arm");
  if (beta < 0.0) throw ConfigError("β must be ≥ 0");
  for (int i = 0; i < arms_.rows(); ++i) survivors_.push_back(i);
}

SpectralEliminatorPolicy SpectralEliminatorPolicy::FromModel(
    const SpectralModel& model, double beta) {
  return SpectralEliminatorPolicy(model.features(), model.regularized, beta);
}

int SpectralEliminatorPolicy::Select(std::int64_t, RngStream&) {
  return survivors_[cursor_ % survivors_.size()];
}

void SpectralEliminatorPolicy::Update(std::int64_t t,
                                      const Feedback& feedback, RngStream&) {
  phase_state_.Observe(feedback.action, feedback.value);
  ++cursor_;
  if (t >= phase_end_) EndPhase();
}

void SpectralEliminatorPolicy::EndPhase() {
  double best_lower = -INFINITY;
  for (int v : survivors_) {
    best_lower = std::max(best_lower, phase_state_.Mean(v) -
                                          beta_ * phase_state_.Width(v));
  }
  std::vector<int> kept;
  for (int v : survivors_) {
    if (phase_state_.Mean(v) + beta_ * phase_state_.Width(v) >= best_lower) {
      kept.push_back(v);
    }
  }
  if (kept.empty()) throw InvariantError("eliminator dropped every arm");
  survivors_ = std::move(kept);
  ++phase_;
  phase_end_ = (std::int64_t{1} << phase_) - 1;
  cursor_ = 0;
  phase_state_.Reset();
}

SmoothRewardEnvironment::SmoothRewardEnvironment(std::vector<double> means,
                                                 double noise)
    : means_(std::move(means)), noise_(noise) {
  if (means_.empty()) throw ConfigError("no arms");
  if (noise_ < 0.0) throw ConfigError("noise scale must be ≥ 0");
}

Feedback SmoothRewardEnvironment::Respond(int action, RngStream& rng) {
  Feedback fb;
  fb.action = action;
  fb.value = means_[action] + (noise_ > 0.0 ? noise_ * rng.Normal() : 0.0);
  fb.observed = {action};
  fb.signals.assign(means_.size(), 0.0);
  fb.signals[action] = fb.value;
  return fb;
}

EliminatorResult SpectralEliminatorRun(SpectralEliminatorPolicy& policy,
                                       Environment& env, std::int64_t T,
                                       const RngStream& rng) {
  EliminatorResult out;
  out.trace = RunEpisode(policy, env, T, rng);
  out.survivors = policy.survivors();
  return out;
}

}  // namespace bandits
