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
#include <numeric>
#include <utility>

#include "bandits/errors.h"
#include "bandits/sideobs.h"

namespace bandits {

UnitVectors::UnitVectors(int n) : n_(n) {
  if (n < 1) throw ConfigError("UnitVectors: n < 1");
}

std::vector<int> UnitVectors::ArgMin(std::span<const double> score) const {
  if (static_cast<int>(score.size()) != n_) {
    throw ConfigError("UnitVectors: score size");
  }
  return {bandits::ArgMin(score)};
}

bool UnitVectors::Contains(std::span<const int> support) const {
  return support.size() == 1 && support[0] >= 0 && support[0] < n_;
}

FixedSizeSubsets::FixedSizeSubsets(int n, int m) : n_(n), m_(m) {
  if (m < 1 || m > n) throw ConfigError("FixedSizeSubsets: need 1 <= m <= n");
}

std::vector<int> FixedSizeSubsets::ArgMin(
    std::span<const double> score) const {
  if (static_cast<int>(score.size()) != n_) {
    throw ConfigError("FixedSizeSubsets: score size");
  }
  std::vector<int> idx(n_);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return score[a] < score[b]; });
  idx.resize(m_);
  std::sort(idx.begin(), idx.end());
  return idx;
}

bool FixedSizeSubsets::Contains(std::span<const int> support) const {
  if (static_cast<int>(support.size()) != m_) return false;
  for (std::size_t a = 0; a < support.size(); ++a) {
    if (support[a] < 0 || support[a] >= n_) return false;
    if (a > 0 && support[a] <= support[a - 1]) return false;
  }
  return true;
}

Matchings::Matchings(int users, int items) : users_(users), items_(items) {
  if (users < 1 || users > items || items > 5) {
    throw ConfigError("Matchings: need 1 <= users <= items <= 5");
  }
  std::vector<int> perm(items);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> support(users);
    for (int u = 0; u < users; ++u) support[u] = u * items + perm[u];
    if (all_.empty() || all_.back() != support) all_.push_back(support);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(all_.begin(), all_.end());
  all_.erase(std::unique(all_.begin(), all_.end()), all_.end());
}

std::vector<int> Matchings::ArgMin(std::span<const double> score) const {
  if (static_cast<int>(score.size()) != dim()) {
    throw ConfigError("Matchings: score size");
  }
  const std::vector<int>* best = nullptr;
  double best_value = std::numeric_limits<double>::infinity();
  for (const auto& support : all_) {
    double v = 0.0;
    for (int c : support) v += score[c];
    if (best == nullptr || v < best_value) {
      best = &support;
      best_value = v;
    }
  }
  return *best;
}

bool Matchings::Contains(std::span<const int> support) const {
  std::vector<int> s(support.begin(), support.end());
  return std::binary_search(all_.begin(), all_.end(), s);
}

NewsFeedsInstance::NewsFeedsInstance() {
  for (int u = 0; u < 3; ++u) {
    graph.AddArc(u * 3 + 1, u * 3 + 2);
    graph.AddArc(u * 3 + 2, u * 3 + 1);
  }
}

std::vector<int> FplSelect(const DecisionSet& set,
                           std::span<const double> cumulative_estimates,
                           double eta, std::span<const double> perturbation) {
  const int n = set.dim();
  if (static_cast<int>(cumulative_estimates.size()) != n ||
      static_cast<int>(perturbation.size()) != n) {
    throw ConfigError("FplSelect: size mismatch");
  }
  std::vector<double> score(n);
  for (int i = 0; i < n; ++i) {
    score[i] = eta * cumulative_estimates[i] - perturbation[i];
  }
  std::vector<int> v = set.ArgMin(score);
  if (static_cast<int>(v.size()) > set.max_support() || !set.Contains(v)) {
    throw InvariantError("FplSelect: oracle returned a non-member");
  }
  return v;
}

FplIxLearner::FplIxLearner(std::shared_ptr<const DecisionSet> set,
                           FplConfig config)
    : set_(std::move(set)), config_(config) {
  if (!set_) throw ConfigError("FplIxLearner: null decision set");
  if (!(config_.delta > 0.0 && config_.delta < 1.0)) {
    throw ConfigError("FplIxLearner: delta must lie in (0,1)");
  }
  l_hat_.assign(set_->dim(), 0.0);
}

void FplIxLearner::ComputeRate() {
  if (config_.fixed_rate > 0.0) {
    rate_ = config_.fixed_rate;
    return;
  }
  const double n = set_->dim();
  rate_ = std::sqrt((std::log(n) + 1.0) /
                    (set_->max_support() * (n + alpha_sum_)));
}

namespace {

std::vector<double> Perturbation(int n, RngStream& rng) {
  std::vector<double> z(n);
  for (double& v : z) v = rng.Exponential();
  return z;
}

std::vector<char> ObservedComponents(const WeightedDigraph& g,
                                     std::span<const int> decision) {
  std::vector<char> o(g.n(), 0);
  for (int c : decision) {
    for (int i : ObservedSet(g, c)) o[i] = 1;
  }
  return o;
}

}  // namespace

std::vector<int> FplIxLearner::Select(RngStream& rng) {
  ComputeRate();
  decision_ = FplSelect(*set_, l_hat_, rate_, Perturbation(set_->dim(), rng));
  return decision_;
}

void FplIxLearner::Update(const WeightedDigraph& graph,
                          std::span<const double> losses, RngStream& rng) {
  const int n = set_->dim();
  if (graph.n() != n || static_cast<int>(losses.size()) != n) {
    throw ConfigError("FplIxLearner: size mismatch");
  }
  if (decision_.empty()) throw InvariantError("FplIxLearner: no decision");
  const std::vector<char> observed = ObservedComponents(graph, decision_);
  std::vector<int> targets;
  for (int i = 0; i < n; ++i) {
    if (observed[i]) targets.push_back(i);
  }
  draws_ = 0;
  auto sampler = [&](RngStream& r) {
    ++draws_;
    std::vector<int> v =
        FplSelect(*set_, l_hat_, rate_, Perturbation(n, r));
    return ObservedComponents(graph, v);
  };
  const std::int64_t cap = ResamplingCap(n, config_.delta, rate_);
  const std::vector<std::int64_t> K =
      GeometricResampling(sampler, targets, rate_, cap, rng);
  for (std::size_t a = 0; a < targets.size(); ++a) {
    l_hat_[targets[a]] += GrixEstimate(K[a], true, losses[targets[a]]);
  }
  alpha_sum_ += config_.alpha_estimate > 0.0
                    ? config_.alpha_estimate
                    : IndependenceNumber(graph).value;
}

FplIxPolicy::FplIxPolicy(int num_actions, FplConfig config)
    : n_(num_actions),
      learner_(std::make_shared<UnitVectors>(num_actions), config) {}

int FplIxPolicy::Select(std::int64_t, RngStream& rng) {
  return learner_.Select(rng).front();
}

void FplIxPolicy::Update(std::int64_t, const Feedback& fb, RngStream& rng) {
  const WeightedDigraph empty = WeightedDigraph::Empty(n_);
  learner_.Update(fb.graph ? *fb.graph : empty, fb.signals, rng);
}

}  // namespace bandits
