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

#include <algorithm>
#include <cmath>
#include <limits>

#include "bandits/errors.h"
#include "bandits/funcopt.h"

namespace bandits {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

double HooUValue(double mean, std::int64_t count, double t, double nu,
                 double rho, int depth) {
  if (count == 0) return kInf;
  if (!(t >= 1.0)) throw ConfigError("HooUValue: t must be >= 1");
  return mean + std::sqrt(2.0 * std::log(t) / count) +
         nu * std::pow(rho, depth);
}

Hoo::Hoo(Box domain, int K, SmoothnessParams params)
    : tree_(std::move(domain), K), params_(params) {
  ValidateSmoothness(params_);
}

const std::vector<double>& Hoo::RefreshBValues() {
  b_.assign(tree_.size(), kInf);
  const double two_log_t = 2.0 * std::log(static_cast<double>(t_));
  while (static_cast<int>(smooth_.size()) <= tree_.max_depth()) {
    smooth_.push_back(params_.nu *
                      std::pow(params_.rho, static_cast<int>(smooth_.size())));
  }
  // Children always have larger ids than their parent.
  for (int id = tree_.size() - 1; id >= 0; --id) {
    const Cell& c = tree_.cell(id);
    if (c.count == 0) continue;
    const double u =
        c.mean() + std::sqrt(two_log_t / c.count) + smooth_[c.depth];
    double best_child = kInf;
    if (!c.leaf()) {
      best_child = -kInf;
      for (int k = 0; k < tree_.arity(); ++k) {
        best_child = std::max(best_child, b_[c.first_child + k]);
      }
    }
    b_[id] = std::min(u, best_child);
  }
  return b_;
}

double Hoo::Step(const Evaluator& f, EvalBudget& budget) {
  ++t_;
  std::vector<int> path{0};
  if (tree_.cell(0).count > 0) {
    RefreshBValues();
    int id = 0;
    while (tree_.cell(id).count > 0) {
      if (tree_.cell(id).leaf()) tree_.Expand(id);
      if (static_cast<int>(b_.size()) < tree_.size()) {
        b_.resize(tree_.size(), kInf);
      }
      const int first = tree_.cell(id).first_child;
      int best = first;
      for (int k = 1; k < tree_.arity(); ++k) {
        if (b_[first + k] > b_[best]) best = first + k;
      }
      id = best;
      path.push_back(id);
    }
  }
  const Point x = tree_.Representative(path.back());
  const double r = budget.Evaluate(f, x);
  for (int id : path) tree_.Record(id, r);
  points_.push_back(x);
  rewards_.push_back(r);
  cells_.push_back(path.back());
  return r;
}

double Hoo::mean_reward() const {
  if (rewards_.empty()) return -kInf;
  double s = 0.0;
  for (double r : rewards_) s += r;
  return s / rewards_.size();
}

Point Hoo::Recommend(RngStream& rng) const {
  if (points_.empty()) throw InvariantError("Hoo: nothing evaluated");
  return points_[rng.UniformInt(static_cast<int>(points_.size()))];
}

OptimizationResult RunHoo(const Evaluator& f, const Box& domain, int K,
                          SmoothnessParams params, std::int64_t T,
                          RngStream& rng) {
  if (T < 1) throw ConfigError("RunHoo: T must be >= 1");
  Hoo hoo(domain, K, params);
  EvalBudget budget(T);
  while (!budget.exhausted()) hoo.Step(f, budget);
  OptimizationResult out;
  out.recommendation = hoo.Recommend(rng);
  out.evaluated = hoo.evaluated();
  out.rewards = hoo.rewards();
  return out;
}

double PooDMax(int K, double rho_max) {
  if (K < 2) throw ConfigError("POO: arity must be at least 2");
  if (!(rho_max > 0.0 && rho_max < 1.0)) {
    throw ConfigError("POO: rho_max must lie in (0, 1)");
  }
  return std::log(static_cast<double>(K)) / std::log(1.0 / rho_max);
}

int PooInstanceCount(std::int64_t n, int K, double rho_max) {
  const double d_max = PooDMax(K, rho_max);
  if (n < 2) return 1;
  const double nn = static_cast<double>(n);
  const double target = 0.5 * d_max * std::log(nn / std::log(nn));
  int N = 1;
  while (N < target) N *= 2;
  return N;
}

namespace {

std::vector<SmoothnessParams> PooGrid(int N, double rho_max, double nu_max) {
  std::vector<SmoothnessParams> out;
  for (int i = 1; i <= N; ++i) {
    out.push_back({nu_max, std::pow(rho_max, static_cast<double>(N) / i)});
  }
  return out;
}

}  // namespace

PooSchedule MakePooSchedule(std::int64_t T, double rho_max, double nu_max,
                            int K) {
  if (T < 2) throw ConfigError("POO schedule: T must be >= 2");
  if (!(nu_max > 0.0)) throw ConfigError("POO: nu_max must be > 0");
  PooSchedule s;
  s.d_max = PooDMax(K, rho_max);
  s.N = PooInstanceCount(T, K, rho_max);
  s.instances = PooGrid(s.N, rho_max, nu_max);
  return s;
}

PooTrace RunPoo(const Evaluator& f, const Box& domain, int K, std::int64_t T,
                double rho_max, double nu_max, RngStream& rng) {
  if (T < 1) throw ConfigError("RunPoo: T must be >= 1");
  if (!(nu_max > 0.0)) throw ConfigError("POO: nu_max must be > 0");
  PooDMax(K, rho_max);
  EvalBudget budget(T);
  // Instance i (0-based) of a grid of size N has ρ = ρ_max^{N/(i+1)}.
  // After doubling, the old instances sit at the odd positions.
  std::vector<Hoo> hoos;
  std::vector<SmoothnessParams> params;
  hoos.emplace_back(domain, K, SmoothnessParams{nu_max, rho_max});
  params.push_back({nu_max, rho_max});
  std::int64_t per_instance = 0;
  PooTrace trace;

  auto spread = [&]() {
    std::int64_t lo = hoos[0].steps();
    std::int64_t hi = lo;
    for (const Hoo& h : hoos) {
      lo = std::min(lo, h.steps());
      hi = std::max(hi, h.steps());
    }
    return hi - lo;
  };

  while (!budget.exhausted()) {
    int N = static_cast<int>(hoos.size());
    while (N < PooInstanceCount(budget.consumed(), K, rho_max) &&
           budget.remaining() >= N * per_instance) {
      std::vector<Hoo> next;
      std::vector<SmoothnessParams> next_params;
      const int N2 = 2 * N;
      for (int i = 1; i <= N2; ++i) {
        if (i % 2 == 0) {
          next.push_back(std::move(hoos[i / 2 - 1]));
          next_params.push_back(params[i / 2 - 1]);
        } else {
          const SmoothnessParams p{
              nu_max, std::pow(rho_max, static_cast<double>(N2) / i)};
          next.emplace_back(domain, K, p);
          next_params.push_back(p);
        }
      }
      hoos = std::move(next);
      params = std::move(next_params);
      for (std::int64_t r = 0; r < per_instance; ++r) {
        for (int i = 0; i < N2; i += 2) hoos[i].Step(f, budget);
      }
      N = N2;
    }
    for (Hoo& h : hoos) {
      if (budget.exhausted()) break;
      h.Step(f, budget);
    }
    ++per_instance;
    trace.max_count_spread = std::max(trace.max_count_spread, spread());
  }

  int best = 0;
  for (int i = 1; i < static_cast<int>(hoos.size()); ++i) {
    if (hoos[i].mean_reward() > hoos[best].mean_reward()) best = i;
  }
  trace.best = best;
  trace.instances = params;
  for (const Hoo& h : hoos) {
    trace.counts.push_back(h.steps());
    trace.means.push_back(h.mean_reward());
    trace.result.evaluated.insert(trace.result.evaluated.end(),
                                  h.evaluated().begin(), h.evaluated().end());
    trace.result.rewards.insert(trace.result.rewards.end(),
                                h.rewards().begin(), h.rewards().end());
  }
  trace.result.recommendation = hoos[best].Recommend(rng);
  trace.calls = budget.consumed();
  return trace;
}

}  // namespace bandits
