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

#ifndef BANDITS_POLYMATROID_H_
#define BANDITS_POLYMATROID_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bandits/episode.h"
#include "bandits/rng.h"

namespace bandits {

using Subset = std::vector<bool>;
using Basis = std::vector<double>;

// M = (E, f) with E = {0..L-1} and f a monotone submodular rank oracle.
class Polymatroid {
 public:
  using Rank = std::function<double(const Subset&)>;

  static constexpr int kMaxVerifySize = 12;

  // With `verify` the oracle is checked exhaustively (L ≤ 12). Coverage
  // instances may have items worth more than 1 and pass unit_gains = false.
  Polymatroid(int L, Rank f, std::string name, bool verify = false,
              bool unit_gains = true);

  int size() const { return L_; }
  const std::string& name() const { return name_; }
  double operator()(const Subset& X) const;
  // K = f(E).
  double rank() const { return rank_; }

  // Throws ConfigError unless f(∅) = 0 and f is monotone and submodular,
  // with marginal gains ≤ 1 when unit gains are required.
  void Verify() const;

 private:
  int L_;
  Rank f_;
  std::string name_;
  bool unit_gains_;
  double rank_ = 0.0;
};

// min{Σ_i min{1{2i∈X} + 1{2i+1∈X}, 3/2}, K} over pairs of sources.
double FlowRank(const Subset& X, int L, double K);
// L even and K a positive multiple of 3/2 with K ≤ 3L/4.
Polymatroid FlowPolymatroid(int L, double K, bool verify = false);
// Means 0.5 − Δ/2 for the first floor(4K/3) sources, 0.5 + Δ/2 after.
std::vector<double> FlowWeights(int L, double K, double delta);

// f(X) = number of topics covered by X; item e covers topics[e].
Polymatroid CoveragePolymatroid(std::vector<std::vector<int>> topics,
                                bool verify = false);
// Three movies over {action, comedy}: action, comedy, both.
Polymatroid MovieCoverage();
std::vector<double> MoviePopularity();

// f(X) = Σ_b min(|X ∩ block b|, capacity_b).
Polymatroid PartitionMatroid(std::vector<int> block_of_item,
                             std::vector<int> capacities, bool verify = false);
// f(X) = min(|X|, K).
Polymatroid CardinalityMatroid(int L, int K, bool verify = false);

// Edmonds' greedy: items by descending weight, ties to the lower index.
Basis Greedy(const Polymatroid& M, const std::vector<double>& w);
// Greedy on max_e w(e) − w.
Basis MinimumBasis(const Polymatroid& M, const std::vector<double>& w);
// Exhaustive check of Σ_{e∈X} x(e) ≤ f(X) for all X and Σ x = K (L ≤ 20).
bool InBasePolyhedron(const Polymatroid& M, const Basis& x,
                      double tol = 1e-9);

double Dot(const std::vector<double>& w, const Basis& x);

struct OpmConfig {
  // Initialize over L real episodes (item t first, then the rest) instead of
  // one free observation of every item.
  bool episode_init = false;
};

// Optimistic polymatroid maximization over Bernoulli item weights.
class OpmLearner {
 public:
  OpmLearner(const Polymatroid& M, OpmConfig config = {});

  // Idealized initialization: one observation of every item.
  void Initialize(const std::vector<double>& w0);
  bool initialized() const { return initialized_; }

  // Basis for episode t (1-based). During episode initialization returns
  // the forced basis.
  Basis Select(std::int64_t t) const;
  // Updates items with x(e) > 0.
  void Observe(const Basis& x, const std::vector<double>& w);

  // c_{t,s} = sqrt(2 log t / s), 0 for t ≤ 1.
  static double Radius(std::int64_t t, std::int64_t s);

  const std::vector<double>& means() const { return means_; }
  const std::vector<std::int64_t>& counts() const { return counts_; }

 private:
  Polymatroid M_;
  OpmConfig config_;
  std::vector<double> means_;
  std::vector<std::int64_t> counts_;
  bool initialized_ = false;
};

// Runs OPM for T episodes on independent Bernoulli(w̄) weights. For cost
// instances (`minimize`), the learner sees rewards 1 − w; on bases both
// objectives give the same regret because Σ x = K. Each round record holds
// the support bitmask as `action`, the realized payoff, and the cumulative
// expected regret against Greedy(M, w̄).
RegretTrace RunOpm(const Polymatroid& M, const std::vector<double>& means,
                   bool minimize, std::int64_t T, const RngStream& rng,
                   OpmConfig config = {});

// Instance file: {"kind": "flow"|"coverage"|"partition"|"cardinality", ...}.
struct PolymatroidInstance {
  Polymatroid M;
  std::vector<double> means;
  bool minimize = false;
};
PolymatroidInstance ParsePolymatroidInstance(const std::string& json_text);
PolymatroidInstance LoadPolymatroidInstance(const std::string& path);

}  // namespace bandits

#endif  // BANDITS_POLYMATROID_H_
