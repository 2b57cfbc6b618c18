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

#include "bandits/influence.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <utility>

#include "bandits/errors.h"
#include "bandits/graph.h"

namespace bandits {

InfluenceMatrix::InfluenceMatrix(int n)
    : InfluenceMatrix(n, std::vector<double>(
                             static_cast<std::size_t>(std::max(n, 0)) *
                                 static_cast<std::size_t>(std::max(n, 0)),
                             0.0)) {}

InfluenceMatrix::InfluenceMatrix(int n, std::vector<double> entries)
    : n_(n), p_(std::move(entries)) {
  if (n < 1) throw ConfigError("InfluenceMatrix: need at least one node");
  if (p_.size() != static_cast<std::size_t>(n) * n) {
    throw ConfigError("InfluenceMatrix: expected N*N entries");
  }
  for (double p : p_) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw ConfigError("InfluenceMatrix: entries must lie in [0, 1]");
    }
  }
}

void InfluenceMatrix::Set(int k, int j, double p) {
  if (k < 0 || k >= n_ || j < 0 || j >= n_) {
    throw ConfigError("InfluenceMatrix: node out of range");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ConfigError("InfluenceMatrix: entries must lie in [0, 1]");
  }
  p_[Index(k, j)] = p;
}

std::span<const double> InfluenceMatrix::Row(int k) const {
  return std::span<const double>(p_).subspan(Index(k, 0), n_);
}

bool InfluenceMatrix::Symmetric() const {
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (p(i, j) != p(j, i)) return false;
    }
  }
  return true;
}

InfluenceMatrix StarInfluence(int n, double to_hub, double from_hub,
                              double self) {
  InfluenceMatrix m(n);
  for (int k = 0; k < n; ++k) m.Set(k, k, self);
  for (int k = 1; k < n; ++k) {
    m.Set(k, 0, to_hub);
    m.Set(0, k, from_hub);
  }
  return m;
}

InfluenceMatrix PairsInfluence(int n) {
  if (n < 2 || n % 2) throw ConfigError("PairsInfluence: n must be even");
  InfluenceMatrix m(n);
  for (int k = 0; k < n; k += 2) {
    m.Set(k, k, 1.0);
    m.Set(k + 1, k + 1, 1.0);
    m.Set(k, k + 1, 1.0);
    m.Set(k + 1, k, 1.0);
  }
  return m;
}

InfluenceMatrix InfluenceFromGraph(const WeightedDigraph& g, double self) {
  InfluenceMatrix m(g.n());
  for (const Arc& a : g.Arcs()) m.Set(a.src, a.dst, a.weight);
  for (int k = 0; k < g.n(); ++k) m.Set(k, k, self);
  return m;
}

InfluenceMatrix ReadInfluenceCsv(std::istream& in) {
  std::vector<double> entries;
  int n = -1;
  int rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::stringstream row(line);
    std::string cell;
    int cols = 0;
    while (std::getline(row, cell, ',')) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(cell, &used);
      } catch (const std::exception&) {
        throw ConfigError("ReadInfluenceCsv: bad number '" + cell + "'");
      }
      if (cell.find_first_not_of(" \t\r", used) != std::string::npos) {
        throw ConfigError("ReadInfluenceCsv: bad number '" + cell + "'");
      }
      entries.push_back(v);
      ++cols;
    }
    if (n < 0) n = cols;
    if (cols != n) throw ConfigError("ReadInfluenceCsv: ragged rows");
    ++rows;
  }
  if (n < 1 || rows != n) {
    throw ConfigError("ReadInfluenceCsv: matrix must be square");
  }
  return InfluenceMatrix(n, std::move(entries));
}

InfluenceMatrix ReadInfluenceCsvFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("ReadInfluenceCsvFile: cannot open " + path);
  return ReadInfluenceCsv(in);
}

InfluenceStats ComputeInfluenceStats(const InfluenceMatrix& m) {
  const int n = m.n();
  InfluenceStats s;
  s.r.assign(n, 0.0);
  s.r_dual.assign(n, 0.0);
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      s.r[k] += m.p(k, j);
      s.r_dual[j] += m.p(k, j);
    }
  }
  s.r_star = *std::max_element(s.r.begin(), s.r.end());
  s.r_dual_star = *std::max_element(s.r_dual.begin(), s.r_dual.end());
  double best = 0.0;
  for (int k = 0; k < n; ++k) {
    if (s.r_dual_star - s.r_dual[k] <= 1e-12) best = std::max(best, s.r[k]);
  }
  s.eps_star = s.r_star - best;
  return s;
}

std::vector<int> SampleInfluence(const InfluenceMatrix& m, int k,
                                 RngStream& rng) {
  if (k < 0 || k >= m.n()) throw ConfigError("SampleInfluence: bad node");
  std::vector<int> s;
  const auto row = m.Row(k);
  for (int j = 0; j < m.n(); ++j) {
    if (rng.Bernoulli(row[j])) s.push_back(j);
  }
  return s;
}

int DualGapCount(std::span<const double> r_dual, double delta) {
  if (!(delta >= 0.0)) throw ConfigError("DualGapCount: delta must be >= 0");
  if (r_dual.empty()) return 0;
  const double top = *std::max_element(r_dual.begin(), r_dual.end());
  return static_cast<int>(
      std::count_if(r_dual.begin(), r_dual.end(),
                    [&](double v) { return top - v <= delta + 1e-12; }));
}

int DualGapCount(const InfluenceMatrix& m, double delta) {
  return DualGapCount(ComputeInfluenceStats(m).r_dual, delta);
}

double DetectableGap(double r_dual_star, int n, std::int64_t T,
                     std::int64_t t_star) {
  const double l = std::log(static_cast<double>(T) * n);
  const double ts = static_cast<double>(t_star);
  return 16.0 * std::sqrt(r_dual_star * n * l / ts) + 144.0 * n * l / ts;
}

namespace {

// The horizon test at one candidate T★. Its left side grows with T★ and
// its right side cannot, so the first success can be found by bisection.
bool HorizonHolds(std::span<const double> r_dual, double top, std::int64_t T,
                  std::int64_t t_star, int* d, double* delta) {
  const int n = static_cast<int>(r_dual.size());
  *delta = DetectableGap(top, n, T, t_star);
  *d = DualGapCount(r_dual, *delta);
  return static_cast<double>(t_star) * top >=
         std::sqrt(static_cast<double>(*d) * static_cast<double>(T) * top);
}

}  // namespace

DetectableQuantities ComputeDetectableQuantities(
    std::span<const double> r_dual, std::int64_t T) {
  if (T < 1) throw ConfigError("DetectableQuantities: T must be >= 1");
  if (r_dual.empty()) throw ConfigError("DetectableQuantities: no nodes");
  const double top = *std::max_element(r_dual.begin(), r_dual.end());
  DetectableQuantities q;
  int d = 0;
  double delta = 0.0;
  if (!HorizonHolds(r_dual, top, T, T, &d, &delta)) {
    q.t_star = T;
    q.d_star = static_cast<int>(r_dual.size());
    q.delta_star = DetectableGap(top, q.d_star, T, T);
    return q;
  }
  std::int64_t lo = 0;
  std::int64_t hi = T;
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (HorizonHolds(r_dual, top, T, mid, &d, &delta)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  HorizonHolds(r_dual, top, T, hi, &d, &delta);
  q.t_star = hi;
  q.d_star = d;
  q.delta_star = delta;
  q.found = true;
  return q;
}

DetectableQuantities ComputeDetectableQuantities(const InfluenceMatrix& m,
                                                 std::int64_t T) {
  return ComputeDetectableQuantities(ComputeInfluenceStats(m).r_dual, T);
}

InfluenceEnvironment::InfluenceEnvironment(InfluenceMatrix m)
    : m_(std::move(m)), stats_(ComputeInfluenceStats(m_)) {}

Feedback InfluenceEnvironment::Respond(int action, RngStream& rng) {
  Feedback f;
  f.action = action;
  f.observed = SampleInfluence(m_, action, rng);
  f.value = static_cast<double>(f.observed.size());
  return f;
}

BarePolicy::BarePolicy(int num_nodes, std::int64_t horizon)
    : n_(num_nodes),
      horizon_(horizon),
      uniform_(std::max(num_nodes, 0), 0.0),
      dual_counts_(std::max(num_nodes, 0), 0),
      plays_(std::max(num_nodes, 0), 0),
      means_(std::max(num_nodes, 0), 0.0) {
  if (num_nodes < 1) throw ConfigError("BARE: need at least one node");
  if (horizon < 2) throw ConfigError("BARE: T must be >= 2");
  std::fill(uniform_.begin(), uniform_.end(), 1.0 / n_);
}

int BarePolicy::Select(std::int64_t t, RngStream& rng) {
  if (exploring_) return rng.UniformInt(n_);
  for (int k : survivors_) {
    if (plays_[k] == 0) return k;
  }
  const double log_t = std::log(static_cast<double>(std::max<std::int64_t>(
      t - 1, 1)));
  int best = survivors_[0];
  double best_index = -1.0;
  for (int k : survivors_) {
    const double index =
        means_[k] / n_ +
        std::sqrt(2.0 * log_t / static_cast<double>(plays_[k]));
    if (index > best_index) {
      best = k;
      best_index = index;
    }
  }
  return best;
}

std::optional<std::span<const double>> BarePolicy::Distribution() const {
  if (exploring_) return std::span<const double>(uniform_);
  return std::nullopt;
}

void BarePolicy::Update(std::int64_t t, const Feedback& feedback,
                        RngStream&) {
  const int k = feedback.action;
  if (k < 0 || k >= n_) throw InvariantError("BARE: feedback for bad node");
  ++plays_[k];
  means_[k] += (feedback.value - means_[k]) / static_cast<double>(plays_[k]);
  if (!exploring_) return;
  for (int j : feedback.observed) {
    if (j < 0 || j >= n_) throw InvariantError("BARE: revealed bad node");
    ++dual_counts_[j];
  }
  MaybeStopExploring(t);
}

void BarePolicy::MaybeStopExploring(std::int64_t t) {
  // Uniform play makes N·count/t an unbiased dual-influence estimate.
  std::vector<double> r_dual(n_);
  for (int j = 0; j < n_; ++j) {
    r_dual[j] = static_cast<double>(n_) * dual_counts_[j] / t;
  }
  const double top = *std::max_element(r_dual.begin(), r_dual.end());
  if (!(top > 0.0)) return;
  const double delta = DetectableGap(top, n_, horizon_, t);
  const int d = DualGapCount(r_dual, delta);
  if (static_cast<double>(t) * top <
      std::sqrt(static_cast<double>(d) * horizon_ * top)) {
    return;
  }
  exploring_ = false;
  phase_one_rounds_ = t;
  d_hat_ = d;
  std::vector<int> order(n_);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return dual_counts_[a] > dual_counts_[b];
  });
  survivors_.assign(order.begin(), order.begin() + d);
  std::sort(survivors_.begin(), survivors_.end());
}

int BarePolicy::Recommend() const {
  const std::vector<int>* pool = &survivors_;
  std::vector<int> all;
  if (exploring_) {
    all.resize(n_);
    std::iota(all.begin(), all.end(), 0);
    pool = &all;
  }
  int best = (*pool)[0];
  for (int k : *pool) {
    if (means_[k] > means_[best]) best = k;
  }
  return best;
}

}  // namespace bandits
