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

#include "bandits/kernel.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "bandits/errors.h"

namespace bandits {

KernelFn KernelFn::Linear() { return KernelFn(Kind::kLinear, 0.0, 1); }

KernelFn KernelFn::Rbf(double sigma) {
  if (!(sigma > 0.0)) throw ConfigError("RBF kernel: sigma must be > 0");
  return KernelFn(Kind::kRbf, sigma, 0);
}

KernelFn KernelFn::Polynomial(int p) {
  if (p < 1) throw ConfigError("polynomial kernel: degree must be >= 1");
  return KernelFn(Kind::kPolynomial, 0.0, p);
}

double KernelFn::operator()(const Eigen::VectorXd& x,
                            const Eigen::VectorXd& y) const {
  if (x.size() != y.size()) throw ConfigError("kernel: dimension mismatch");
  switch (kind_) {
    case Kind::kLinear:
      return x.dot(y);
    case Kind::kRbf:
      return std::exp(-(x - y).squaredNorm() / (2.0 * sigma_ * sigma_));
    case Kind::kPolynomial:
      return std::pow(x.dot(y) + 1.0, degree_);
  }
  return 0.0;
}

Eigen::MatrixXd KernelFn::Gram(const Eigen::MatrixXd& X) const {
  const Eigen::Index n = X.rows();
  Eigen::MatrixXd K(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      K(i, j) = K(j, i) = (*this)(X.row(i).transpose(), X.row(j).transpose());
    }
  }
  return K;
}

KernelState::KernelState(KernelFn kernel, double gamma)
    : kernel_(kernel), gamma_(gamma) {
  if (!(gamma > 0.0)) throw ConfigError("KernelState: gamma must be > 0");
}

Eigen::VectorXd KernelState::KernelColumn(const Eigen::VectorXd& x) const {
  Eigen::VectorXd k(size());
  for (int i = 0; i < size(); ++i) k(i) = kernel_(xs_[i], x);
  return k;
}

Eigen::MatrixXd KernelState::KernelMatrix() const {
  const int n = size();
  Eigen::MatrixXd K(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) K(i, j) = K(j, i) = kernel_(xs_[i], xs_[j]);
  }
  return K;
}

void KernelState::Refactor() {
  const int n = size();
  Eigen::MatrixXd A = KernelMatrix();
  A.diagonal().array() += gamma_;
  Eigen::LLT<Eigen::MatrixXd> llt(A);
  if (llt.info() != Eigen::Success) {
    throw NumericalError("KernelState: factorization failed");
  }
  chol_.topLeftCorner(n, n) = llt.matrixL();
}

void KernelState::SolveDual() {
  const int n = size();
  auto L = chol_.topLeftCorner(n, n).triangularView<Eigen::Lower>();
  dual_ = L.solve(y_);
  L.transpose().solveInPlace(dual_);
}

void KernelState::Add(const Eigen::VectorXd& x, double y) {
  if (!xs_.empty() && x.size() != xs_.front().size()) {
    throw ConfigError("KernelState: context dimension mismatch");
  }
  const int n = size();
  const Eigen::VectorXd k = KernelColumn(x);
  xs_.push_back(x);
  y_.conservativeResize(n + 1);
  y_(n) = y;
  if (chol_.rows() < n + 1) {
    const Eigen::Index cap = std::max<Eigen::Index>(16, 2 * chol_.rows());
    Eigen::MatrixXd grown = Eigen::MatrixXd::Zero(cap, cap);
    grown.topLeftCorner(n, n) = chol_.topLeftCorner(n, n);
    chol_.swap(grown);
  }
  if ((n + 1) % kRefactorEvery == 0) {
    Refactor();
  } else {
    Eigen::VectorXd l = k;
    if (n > 0) {
      chol_.topLeftCorner(n, n).triangularView<Eigen::Lower>().solveInPlace(l);
    }
    const double d2 = kernel_(x, x) + gamma_ - l.squaredNorm();
    if (!(d2 > 0.0)) throw NumericalError("KernelState: lost definiteness");
    chol_.row(n).head(n) = l.transpose();
    chol_(n, n) = std::sqrt(d2);
  }
  SolveDual();
}

double KernelState::Predict(const Eigen::VectorXd& x) const {
  if (xs_.empty()) return 0.0;
  return KernelColumn(x).dot(dual_);
}

double KernelState::Width(const Eigen::VectorXd& x) const {
  double rad = kernel_(x, x);
  if (!xs_.empty()) {
    Eigen::VectorXd v = KernelColumn(x);
    chol_.topLeftCorner(size(), size())
        .triangularView<Eigen::Lower>()
        .solveInPlace(v);
    rad -= v.squaredNorm();
  }
  if (rad < 0.0) {
    if (rad < -1e-10) throw NumericalError("KernelState: negative width");
    rad = 0.0;
  }
  return std::sqrt(rad / gamma_);
}

double KernelState::Residual() const {
  if (xs_.empty()) return 0.0;
  Eigen::MatrixXd A = KernelMatrix();
  A.diagonal().array() += gamma_;
  return (A * dual_ - y_).cwiseAbs().maxCoeff();
}

std::vector<double> KernelState::DataSpectrum() const {
  if (xs_.empty()) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(KernelMatrix(),
                                                    Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(),
                          es.eigenvalues().data() + size());
  for (double& v : out) v = std::max(0.0, v);
  std::sort(out.rbegin(), out.rend());
  return out;
}

int KernelUcbSelect(const KernelState& state, const Eigen::MatrixXd& arms,
                    double eta) {
  if (eta < 0.0) throw ConfigError("KernelUcbSelect: eta < 0");
  if (arms.rows() == 0) throw ConfigError("KernelUcbSelect: no arms");
  int best = 0;
  double best_score = 0.0;
  for (Eigen::Index a = 0; a < arms.rows(); ++a) {
    const Eigen::VectorXd x = arms.row(a).transpose();
    const double score = state.Predict(x) + eta * state.Width(x);
    if (a == 0 || score > best_score) {
      best = static_cast<int>(a);
      best_score = score;
    }
  }
  return best;
}

int EffectiveDimTilde(const std::vector<double>& spectrum_desc, double gamma,
                      std::int64_t T) {
  if (!(gamma > 0.0) || T < 1) throw ConfigError("EffectiveDimTilde: args");
  const int n = static_cast<int>(spectrum_desc.size());
  for (int i = 1; i < n; ++i) {
    if (spectrum_desc[i] > spectrum_desc[i - 1]) {
      throw ConfigError("EffectiveDimTilde: spectrum must be descending");
    }
  }
  std::vector<double> tail(n + 1, 0.0);
  for (int i = n - 1; i >= 0; --i) tail[i] = tail[i + 1] + spectrum_desc[i];
  const double log_t = std::log(static_cast<double>(T));
  for (int j = 0; j <= n; ++j) {
    if (j * gamma * log_t >= tail[j] - gamma) return j;
  }
  return n;
}

double SupKernelEta(std::int64_t T, int N, double delta) {
  return std::sqrt(2.0 * std::log(2.0 * T * N / delta));
}

KernelUcbPolicy::KernelUcbPolicy(Eigen::MatrixXd arms, KernelFn kernel,
                                 KernelUcbConfig config)
    : arms_(std::move(arms)),
      config_(config),
      state_(kernel, config.gamma) {
  if (arms_.rows() == 0) throw ConfigError("KernelUcbPolicy: no arms");
}

int KernelUcbPolicy::Select(std::int64_t, RngStream&) {
  return KernelUcbSelect(state_, arms_, config_.eta);
}

void KernelUcbPolicy::Update(std::int64_t, const Feedback& fb, RngStream&) {
  state_.Add(arms_.row(fb.action).transpose(), fb.value);
}

ContextArmEnvironment::ContextArmEnvironment(std::vector<double> means,
                                             double noise_sd)
    : means_(std::move(means)), noise_sd_(noise_sd) {
  if (means_.empty()) throw ConfigError("ContextArmEnvironment: no arms");
  if (noise_sd < 0.0) throw ConfigError("ContextArmEnvironment: noise < 0");
}

ContextArmEnvironment ContextArmEnvironment::Linear(
    const Eigen::MatrixXd& arms, const Eigen::VectorXd& theta,
    double noise_sd) {
  if (arms.cols() != theta.size()) {
    throw ConfigError("ContextArmEnvironment: theta dimension mismatch");
  }
  Eigen::VectorXd m = arms * theta;
  return ContextArmEnvironment(
      std::vector<double>(m.data(), m.data() + m.size()), noise_sd);
}

void ContextArmEnvironment::BeginRound(std::int64_t, RngStream&) {}

Feedback ContextArmEnvironment::Respond(int action, RngStream& rng) {
  Feedback fb;
  fb.action = action;
  fb.value = means_.at(action) + noise_sd_ * rng.Normal();
  fb.observed = {action};
  fb.signals.assign(means_.size(), 0.0);
  fb.signals[action] = fb.value;
  return fb;
}

namespace {

bool ParseRow(const std::string& line, std::vector<double>& row) {
  row.clear();
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    std::size_t used = 0;
    try {
      row.push_back(std::stod(cell, &used));
    } catch (const std::exception&) {
      return false;
    }
    while (used < cell.size() && std::isspace(
                                     static_cast<unsigned char>(cell[used]))) {
      ++used;
    }
    if (used != cell.size()) return false;
  }
  return !row.empty();
}

}  // namespace

Eigen::MatrixXd ReadContextsCsv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::vector<double> row;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (!ParseRow(line, row)) {
      if (line_no == 1) continue;
      throw ConfigError("contexts CSV: bad row at line " +
                        std::to_string(line_no));
    }
    if (!rows.empty() && row.size() != rows[0].size()) {
      throw ConfigError("contexts CSV: ragged row at line " +
                        std::to_string(line_no));
    }
    rows.push_back(row);
  }
  if (rows.empty()) throw ConfigError("contexts CSV: no rows");
  Eigen::MatrixXd X(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) X(i, j) = rows[i][j];
  }
  return X;
}

Eigen::MatrixXd ReadContextsCsvFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open contexts file " + path);
  return ReadContextsCsv(in);
}

}  // namespace bandits
