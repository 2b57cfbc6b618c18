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

#ifndef BANDITS_FUNCOPT_H_
#define BANDITS_FUNCOPT_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "bandits/rng.h"

namespace bandits {

using Point = std::vector<double>;

struct Box {
  Point lo;
  Point hi;

  int dim() const { return static_cast<int>(lo.size()); }
  Point Center() const;
  double Volume() const;
  bool Contains(const Point& x) const;
};

Box UnitBox(int dim);

struct Cell {
  int depth = 0;
  std::int64_t index = 0;
  Box box;
  int parent = -1;
  // Children are stored contiguously; -1 for a leaf.
  int first_child = -1;
  std::int64_t count = 0;
  double sum = 0.0;

  double mean() const { return count > 0 ? sum / count : 0.0; }
  bool leaf() const { return first_child < 0; }
};

// Standard K-ary partitioning: a cell splits into K equal boxes along its
// longest side (first axis on ties). Representatives are box centers.
class PartitionTree {
 public:
  PartitionTree(Box domain, int K);

  int arity() const { return K_; }
  int size() const { return static_cast<int>(cells_.size()); }
  int max_depth() const { return max_depth_; }
  const Cell& cell(int id) const { return cells_.at(id); }
  Point Representative(int id) const { return cells_.at(id).box.Center(); }
  // Creates the K children of a leaf and returns the id of the first.
  int Expand(int id);
  int Child(int id, int c) const;
  std::vector<int> Leaves() const;
  void Record(int id, double reward);

 private:
  int K_;
  int max_depth_ = 0;
  std::vector<Cell> cells_;
};

// Splits a box into K equal parts along its longest side.
std::vector<Box> SplitBox(const Box& box, int K);

// Noisy or exact black-box objective, maximized.
using Evaluator = std::function<double(const Point&)>;

// Counts evaluations and refuses to exceed T.
class EvalBudget {
 public:
  explicit EvalBudget(std::int64_t T);
  std::int64_t total() const { return T_; }
  std::int64_t consumed() const { return consumed_; }
  std::int64_t remaining() const { return T_ - consumed_; }
  bool exhausted() const { return consumed_ >= T_; }
  // Throws InvariantError once the budget is spent.
  double Evaluate(const Evaluator& f, const Point& x);

 private:
  std::int64_t T_;
  std::int64_t consumed_ = 0;
};

struct TestFunction {
  std::string name;
  Box domain;
  std::function<double(const Point&)> f;
  double f_star = 0.0;
  Point x_star;
};

// s(log2|x−0.5|)·(sqrt|x−0.5| − (x−0.5)²) − sqrt|x−0.5| with s(y) = 1 when
// y − floor(y) ∈ [0, 0.5]. Zero at x = 0.5.
double DifficultFunction(double x);

// Built-in fixtures on [0,1]: difficult, abs (−|x−0.5|), peak
// (1 − |x − 1/3|), quadratic (1 − (x − 1/3)²).
TestFunction LookupTestFunction(const std::string& name);
std::vector<std::string> TestFunctionNames();

enum class NoiseKind { kNone, kUniform, kBernoulli };

struct NoiseModel {
  NoiseKind kind = NoiseKind::kNone;
  // Half-width of the uniform noise.
  double b = 0.0;
};

// Wraps f with noise drawn from `rng`, which must outlive the evaluator.
// Bernoulli noise draws Bernoulli(f(x)) and needs f in [0, 1].
Evaluator MakeNoisy(std::function<double(const Point&)> f, NoiseModel noise,
                    RngStream* rng);

// Evaluates f through an external command: writes the coordinates of x as
// one text line and reads f(x) back as one text line.
class ProcessOracle {
 public:
  explicit ProcessOracle(const std::string& command);
  ~ProcessOracle();
  ProcessOracle(const ProcessOracle&) = delete;
  ProcessOracle& operator=(const ProcessOracle&) = delete;

  double operator()(const Point& x);

 private:
  int pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
};

struct SmoothnessParams {
  double nu = 1.0;
  double rho = 0.5;
};

void ValidateSmoothness(const SmoothnessParams& p);

// μ̂ + sqrt(2 ln t / N) + νρ^h, +∞ when N = 0.
double HooUValue(double mean, std::int64_t count, double t, double nu,
                 double rho, int depth);

// μ̂ + sqrt(log(Tk/δ) / (2 n)), +∞ when n = 0.
double StoSooBValue(double mean, std::int64_t T, double k, double delta,
                    std::int64_t n);
// Same with log(Tk/δ) given directly.
double StoSooBValueFromLog(double mean, double log_term, std::int64_t n);

struct OptimizationResult {
  Point recommendation;
  std::vector<Point> evaluated;
  std::vector<double> rewards;
};

// Hierarchical optimistic optimization. Statistics of a cell cover every
// evaluation routed through it.
class Hoo {
 public:
  Hoo(Box domain, int K, SmoothnessParams params);

  // Descends along maximal B-values (ties to the lower child), evaluates the
  // first unvisited cell on the path and updates the path statistics.
  double Step(const Evaluator& f, EvalBudget& budget);

  const PartitionTree& tree() const { return tree_; }
  const SmoothnessParams& params() const { return params_; }
  std::int64_t steps() const { return t_; }
  const std::vector<Point>& evaluated() const { return points_; }
  const std::vector<double>& rewards() const { return rewards_; }
  double mean_reward() const;
  // Uniform draw over the evaluated points.
  Point Recommend(RngStream& rng) const;
  // Cell evaluated at each step.
  const std::vector<int>& evaluated_cells() const { return cells_; }
  // Recomputes B = min(U, max over children B) with unvisited cells at +∞,
  // using the current step count as t.
  const std::vector<double>& RefreshBValues();

 private:

  PartitionTree tree_;
  SmoothnessParams params_;
  std::int64_t t_ = 0;
  std::vector<double> b_;
  // ν ρ^h by depth.
  std::vector<double> smooth_;
  std::vector<Point> points_;
  std::vector<double> rewards_;
  std::vector<int> cells_;
};

OptimizationResult RunHoo(const Evaluator& f, const Box& domain, int K,
                          SmoothnessParams params, std::int64_t T,
                          RngStream& rng);

struct StoSooConfig {
  // Nonpositive values select k = T/log³T, δ = 1/√T, h_max = sqrt(T/k).
  double k = 0.0;
  double delta = 0.0;
  int h_max = 0;
};

struct StoSooParams {
  std::int64_t k = 1;
  double delta = 0.0;
  int h_max = 0;
};

StoSooParams ResolveStoSoo(std::int64_t T, const StoSooConfig& config);

struct StoSooTrace {
  OptimizationResult result;
  PartitionTree tree{UnitBox(1), 2};
  StoSooParams params;
  // Depths expanded in each sweep, for the one-per-depth invariant.
  std::vector<std::vector<int>> sweep_expansions;
};

// Sweeps depths 0..min(depth, h_max). At each depth the leaf with the
// largest b-value is evaluated while it has fewer than k pulls; otherwise
// it is expanded if its b-value is at least the largest expanded so far in
// the sweep. Recommends the representative of the highest-mean cell with at
// least k/2 pulls, deeper cells on ties.
StoSooTrace RunStoSoo(const Evaluator& f, const Box& domain, int K,
                      std::int64_t T, const StoSooConfig& config);

struct PooSchedule {
  double d_max = 0.0;
  int N = 1;
  std::vector<SmoothnessParams> instances;
};

double PooDMax(int K, double rho_max);
// Smallest power of two N with N ≥ ½ D_max ln(n / ln n).
int PooInstanceCount(std::int64_t n, int K, double rho_max);
// (ν_max, ρ_max^{N/i}) for i = 1..N.
PooSchedule MakePooSchedule(std::int64_t T, double rho_max, double nu_max,
                            int K);

struct PooTrace {
  OptimizationResult result;
  std::vector<SmoothnessParams> instances;
  std::vector<std::int64_t> counts;
  std::vector<double> means;
  int best = -1;
  // Largest spread of per-instance counts seen after each round.
  std::int64_t max_count_spread = 0;
  std::int64_t calls = 0;
};

// Parallel HOO instances, doubled when the schedule asks for more. New
// instances catch up to the current per-instance count before the next
// round, and a doubling is skipped when the catch-up no longer fits in the
// budget. Recommends a uniform draw among the points of the instance with
// the best mean reward.
PooTrace RunPoo(const Evaluator& f, const Box& domain, int K, std::int64_t T,
                double rho_max, double nu_max, RngStream& rng);

}  // namespace bandits

#endif  // BANDITS_FUNCOPT_H_
