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
#include <set>

#include <gtest/gtest.h>

#include "bandits/errors.h"
#include "bandits/funcopt.h"
#include "hoo_oracle.h"

namespace bandits {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

TEST(PartitionTest, UnitIntervalHalves) {
  PartitionTree tree(UnitBox(1), 2);
  const int first = tree.Expand(0);
  EXPECT_EQ(tree.cell(first).box.lo[0], 0.0);
  EXPECT_EQ(tree.cell(first).box.hi[0], 0.5);
  EXPECT_EQ(tree.cell(first + 1).box.lo[0], 0.5);
  EXPECT_EQ(tree.cell(first + 1).box.hi[0], 1.0);
  EXPECT_EQ(tree.Representative(0), Point{0.5});
  EXPECT_EQ(tree.cell(first + 1).index, 1);
  EXPECT_EQ(tree.cell(first + 1).depth, 1);
}

TEST(PartitionTest, SquareDepthTwoQuarters) {
  PartitionTree tree(UnitBox(2), 2);
  const int a = tree.Expand(0);
  // First split is along axis 0 (tie), the halves then split along axis 1.
  EXPECT_EQ(tree.cell(a).box.hi[0], 0.5);
  EXPECT_EQ(tree.cell(a).box.hi[1], 1.0);
  tree.Expand(a);
  tree.Expand(a + 1);
  const std::vector<int> leaves = tree.Leaves();
  ASSERT_EQ(leaves.size(), 4u);
  for (int id : leaves) {
    EXPECT_DOUBLE_EQ(tree.cell(id).box.Volume(), 0.25);
    EXPECT_EQ(tree.cell(id).depth, 2);
  }
}

TEST(PartitionTest, LongestSideIsSplit) {
  const Box box{{0.0, 0.0, 0.0}, {1.0, 3.0, 3.0}};
  const std::vector<Box> parts = SplitBox(box, 3);
  for (int c = 0; c < 3; ++c) {
    EXPECT_DOUBLE_EQ(parts[c].lo[1], c);
    EXPECT_DOUBLE_EQ(parts[c].hi[1], c + 1);
    EXPECT_EQ(parts[c].lo[2], 0.0);
    EXPECT_EQ(parts[c].hi[2], 3.0);
  }
  EXPECT_THROW(SplitBox(box, 1), ConfigError);
}

TEST(PartitionTest, DepthTenLeavesTileTheInterval) {
  PartitionTree tree(UnitBox(1), 2);
  for (int id = 0; id < tree.size(); ++id) {
    if (tree.cell(id).depth < 10) tree.Expand(id);
  }
  std::vector<std::pair<double, double>> iv;
  for (int id : tree.Leaves()) {
    iv.push_back({tree.cell(id).box.lo[0], tree.cell(id).box.hi[0]});
  }
  ASSERT_EQ(iv.size(), 1024u);
  std::sort(iv.begin(), iv.end());
  EXPECT_EQ(iv.front().first, 0.0);
  EXPECT_EQ(iv.back().second, 1.0);
  double overlap = 0.0;
  for (size_t i = 0; i + 1 < iv.size(); ++i) {
    // Exact endpoint equality: no gap and no overlap.
    EXPECT_EQ(iv[i].second, iv[i + 1].first);
    overlap += std::max(0.0, iv[i].second - iv[i + 1].first);
  }
  EXPECT_EQ(overlap, 0.0);
}

TEST(PartitionTest, ChildrenPartitionParentProperty) {
  RngStream rng(3, "boxes");
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = 1 + rng.UniformInt(3);
    const int K = 2 + rng.UniformInt(4);
    Box box{Point(dim), Point(dim)};
    for (int d = 0; d < dim; ++d) {
      box.lo[d] = rng.Uniform(-2.0, 1.0);
      box.hi[d] = box.lo[d] + rng.Uniform(0.1, 3.0);
    }
    const std::vector<Box> parts = SplitBox(box, K);
    ASSERT_EQ(static_cast<int>(parts.size()), K);
    double volume = 0.0;
    for (const Box& p : parts) volume += p.Volume();
    EXPECT_NEAR(volume, box.Volume(), 1e-12 * box.Volume());
    int axis = -1;
    for (int d = 0; d < dim; ++d) {
      if (parts[0].hi[d] != box.hi[d]) axis = d;
    }
    ASSERT_GE(axis, 0);
    EXPECT_EQ(parts.front().lo[axis], box.lo[axis]);
    EXPECT_EQ(parts.back().hi[axis], box.hi[axis]);
    for (int c = 0; c + 1 < K; ++c) {
      EXPECT_EQ(parts[c].hi[axis], parts[c + 1].lo[axis]);
      EXPECT_LT(parts[c].lo[axis], parts[c].hi[axis]);
    }
    for (int d = 0; d < dim; ++d) {
      if (d == axis) continue;
      for (const Box& p : parts) {
        EXPECT_EQ(p.lo[d], box.lo[d]);
        EXPECT_EQ(p.hi[d], box.hi[d]);
      }
    }
  }
}

TEST(PartitionTest, RejectsBadInput) {
  EXPECT_THROW(PartitionTree(UnitBox(1), 1), ConfigError);
  EXPECT_THROW(PartitionTree(Box{{0.0}, {0.0}}, 2), ConfigError);
  PartitionTree tree(UnitBox(1), 2);
  tree.Expand(0);
  EXPECT_THROW(tree.Expand(0), InvariantError);
}

TEST(BudgetTest, StopsAtT) {
  EvalBudget budget(3);
  const Evaluator f = [](const Point&) { return 1.0; };
  for (int i = 0; i < 3; ++i) budget.Evaluate(f, {0.0});
  EXPECT_TRUE(budget.exhausted());
  EXPECT_THROW(budget.Evaluate(f, {0.0}), InvariantError);
  EXPECT_EQ(budget.consumed(), 3);
}

TEST(DifficultFunctionTest, Examples) {
  EXPECT_EQ(DifficultFunction(0.5), 0.0);
  EXPECT_DOUBLE_EQ(DifficultFunction(0.75), -0.0625);
  // log2(0.125·√2) = −2.5: frac 0.5 still takes the upper envelope.
  const double u = 0.125 * std::sqrt(2.0);
  EXPECT_DOUBLE_EQ(DifficultFunction(0.5 + u), -u * u);
  // frac(log2 0.3) ≈ 0.26 → s = 1; frac(log2 0.2) ≈ 0.68 → s = 0.
  EXPECT_DOUBLE_EQ(DifficultFunction(0.8), -0.09);
  EXPECT_DOUBLE_EQ(DifficultFunction(0.7), -std::sqrt(0.2));
}

TEST(DifficultFunctionTest, Symmetric) {
  RngStream rng(1, "sym");
  for (int i = 0; i < 1000; ++i) {
    // Dyadic offsets keep 0.5 ± u exact.
    const double u = rng.UniformInt(1 << 20) / static_cast<double>(1 << 21);
    EXPECT_EQ(DifficultFunction(0.5 + u), DifficultFunction(0.5 - u));
  }
}

TEST(DifficultFunctionTest, GridScanMaxAtCenter) {
  const int n = 1000000;
  double best = -kInf;
  int arg = -1;
  for (int i = 0; i <= n; ++i) {
    const double v = DifficultFunction(static_cast<double>(i) / n);
    ASSERT_LE(v, 0.0);
    if (v > best) {
      best = v;
      arg = i;
    }
  }
  EXPECT_EQ(arg, n / 2);
  EXPECT_EQ(best, 0.0);
}

TEST(TestFunctionTest, FixturesPeakWhereDeclared) {
  for (const std::string& name : TestFunctionNames()) {
    const TestFunction tf = LookupTestFunction(name);
    EXPECT_DOUBLE_EQ(tf.f(tf.x_star), tf.f_star) << name;
    for (int i = 0; i <= 1000; ++i) {
      EXPECT_LE(tf.f({i / 1000.0}), tf.f_star + 1e-15) << name;
    }
  }
  EXPECT_THROW(LookupTestFunction("nope"), ConfigError);
}

TEST(NoiseTest, UniformIsBoundedAndCentered) {
  RngStream rng(2, "noise");
  const Evaluator f = MakeNoisy([](const Point&) { return 0.25; },
                                {NoiseKind::kUniform, 0.5}, &rng);
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double r = f({0.0});
    ASSERT_GE(r, -0.25);
    ASSERT_LT(r, 0.75);
    sum += r;
  }
  // sd of the mean: 1/sqrt(12 n).
  EXPECT_NEAR(sum / n, 0.25, 4.0 / std::sqrt(12.0 * n));
}

TEST(NoiseTest, BernoulliMatchesMean) {
  RngStream rng(2, "noise");
  const Evaluator f =
      MakeNoisy([](const Point& x) { return x[0]; }, {NoiseKind::kBernoulli},
                &rng);
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) sum += f({0.3});
  EXPECT_NEAR(sum / n, 0.3, 4.0 * std::sqrt(0.21 / n));
  EXPECT_THROW(f({1.5}), ConfigError);
}

TEST(ProcessOracleTest, RoundTrip) {
  // Echoes the second coordinate back.
  ProcessOracle oracle("while read a b; do echo \"$b\"; done");
  EXPECT_EQ(oracle({0.5, 1.0}), 1.0);
  EXPECT_EQ(oracle({0.25, -0.0625}), -0.0625);
  EXPECT_EQ(oracle({1.0, 0.1}), 0.1);
}

TEST(ProcessOracleTest, FailuresSurface) {
  ProcessOracle bad("while read line; do echo nope; done");
  EXPECT_THROW(bad({0.1}), NumericalError);
  ProcessOracle gone("true");
  EXPECT_THROW(gone({0.1}), NumericalError);
}

TEST(HooTest, UValueExamples) {
  EXPECT_EQ(HooUValue(0.0, 0, 10.0, 1.0, 0.5, 3), kInf);
  EXPECT_DOUBLE_EQ(HooUValue(0.5, 2, std::exp(1.0), 1.0, 0.5, 1), 2.0);
  const double deep = HooUValue(0.5, 2, std::exp(1.0), 1.0, 0.5, 50);
  EXPECT_NEAR(deep, 1.5, 1e-14);
}

TEST(HooTest, FirstStepEvaluatesRoot) {
  Hoo hoo(UnitBox(1), 2, {1.0, 0.5});
  EvalBudget budget(10);
  Point seen;
  hoo.Step([&](const Point& x) {
    seen = x;
    return 0.0;
  }, budget);
  EXPECT_EQ(seen, Point{0.5});
  EXPECT_EQ(hoo.tree().size(), 1);
}

TEST(HooTest, TiesGoToLowerChild) {
  Hoo hoo(UnitBox(1), 2, {1.0, 0.5});
  EvalBudget budget(3);
  std::vector<Point> seen;
  const Evaluator f = [&](const Point& x) {
    seen.push_back(x);
    return 0.0;
  };
  for (int i = 0; i < 3; ++i) hoo.Step(f, budget);
  EXPECT_EQ(seen[1], Point{0.25});
  EXPECT_EQ(seen[2], Point{0.75});
}

TEST(HooTest, MatchesRecursiveReference) {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    RngStream noise(seed, "noise");
    std::vector<double> draws(2000);
    for (double& d : draws) d = noise.Uniform(-0.2, 0.2);
    const TestFunction tf = LookupTestFunction(seed == 0 ? "abs" : "difficult");
    oracles::ReferenceHoo ref(1.0, 0.5 + 0.2 * seed);
    Hoo hoo(tf.domain, 2, {1.0, 0.5 + 0.2 * seed});
    EvalBudget budget(2000);
    for (int t = 0; t < 2000; ++t) {
      ref.Step([&](double x) { return tf.f({x}) + draws[t]; });
      hoo.Step([&](const Point& x) { return tf.f(x) + draws[t]; }, budget);
      ASSERT_EQ(hoo.evaluated()[t][0], ref.points[t]) << seed << " " << t;
    }
  }
}

// The confidence term keeps HOO probing far cells on noiseless input too:
// stray points persist past step 20, but the mass drifts to the peak.
TEST(HooTest, ConcentratesOnAbsPeak) {
  const TestFunction tf = LookupTestFunction("abs");
  Hoo hoo(tf.domain, 2, {1.0, 0.5});
  EvalBudget budget(5000);
  while (!budget.exhausted()) hoo.Step(tf.f, budget);
  double first = 0.0;
  double second = 0.0;
  int strays = 0;
  for (int t = 0; t < 5000; ++t) {
    const double gap = tf.f_star - tf.f(hoo.evaluated()[t]);
    (t < 2500 ? first : second) += gap;
    if (t >= 20 && t < 50 && gap > 0.25) ++strays;
  }
  EXPECT_GT(strays, 0);
  EXPECT_LT(second, first);
  // Uniform sampling would average 0.25.
  EXPECT_LT((first + second) / 5000.0, 0.1);
}

// Every cell's statistics are its own evaluation plus its children's.
TEST(HooTest, PathBookkeepingInvariant) {
  const TestFunction tf = LookupTestFunction("peak");
  RngStream noise(4, "noise");
  const Evaluator f = MakeNoisy(tf.f, {NoiseKind::kUniform, 0.3}, &noise);
  Hoo hoo(tf.domain, 3, {0.7, 0.6});
  EvalBudget budget(400);
  while (!budget.exhausted()) {
    hoo.Step(f, budget);
    const PartitionTree& tree = hoo.tree();
    std::vector<std::int64_t> count(tree.size(), 0);
    std::vector<double> sum(tree.size(), 0.0);
    for (size_t s = 0; s < hoo.evaluated().size(); ++s) {
      const int id = hoo.evaluated_cells()[s];
      ASSERT_EQ(tree.Representative(id), hoo.evaluated()[s]);
      ASSERT_GE(id, 0);
      for (int a = id; a >= 0; a = tree.cell(a).parent) {
        ++count[a];
        sum[a] += hoo.rewards()[s];
      }
    }
    for (int c = 0; c < tree.size(); ++c) {
      ASSERT_EQ(tree.cell(c).count, count[c]);
      ASSERT_NEAR(tree.cell(c).sum, sum[c], 1e-9);
      ASSERT_GE(tree.cell(c).count, 0);
    }
  }
}

TEST(HooTest, BValueInfiniteExactlyForUnvisited) {
  const TestFunction tf = LookupTestFunction("difficult");
  Hoo hoo(tf.domain, 2, {1.0, 0.75});
  EvalBudget budget(300);
  while (!budget.exhausted()) {
    hoo.Step(tf.f, budget);
    const std::vector<double>& b = hoo.RefreshBValues();
    for (int c = 0; c < static_cast<int>(b.size()); ++c) {
      EXPECT_EQ(std::isinf(b[c]), hoo.tree().cell(c).count == 0);
    }
  }
}

TEST(StoSooTest, BValueExamples) {
  EXPECT_EQ(StoSooBValueFromLog(0.3, 2.0, 0), kInf);
  EXPECT_DOUBLE_EQ(StoSooBValueFromLog(0.3, 2.0, 4), 0.8);
  const double w4 = StoSooBValueFromLog(0.0, 3.0, 4);
  const double w16 = StoSooBValueFromLog(0.0, 3.0, 16);
  EXPECT_DOUBLE_EQ(w16, 0.5 * w4);
  // log(Tk/δ) = 2 with T = 1, k = e², δ = 1.
  EXPECT_DOUBLE_EQ(StoSooBValue(0.3, 1, std::exp(2.0), 1.0, 4), 0.8);
}

TEST(StoSooTest, DefaultParameters) {
  const StoSooParams p = ResolveStoSoo(1000, {});
  const double l = std::log(1000.0);
  EXPECT_EQ(p.k, static_cast<std::int64_t>(1000.0 / (l * l * l)));
  EXPECT_EQ(p.k, 3);
  EXPECT_DOUBLE_EQ(p.delta, 1.0 / std::sqrt(1000.0));
  EXPECT_EQ(p.h_max, 18);
  EXPECT_EQ(ResolveStoSoo(10000, {}).k, 12);
}

TEST(StoSooTest, MinimalRunRecommendsBestChild) {
  const TestFunction tf = LookupTestFunction("peak");
  StoSooConfig config;
  config.k = 1;
  const StoSooTrace trace = RunStoSoo(tf.f, tf.domain, 2, 3, config);
  ASSERT_EQ(trace.result.evaluated.size(), 3u);
  EXPECT_EQ(trace.sweep_expansions[1], std::vector<int>{0});
  EXPECT_EQ(trace.tree.size(), 3);
  // Children at 0.25 (f = 0.917) and 0.75 (f = 0.583), root at 0.5.
  EXPECT_EQ(trace.result.recommendation, Point{0.25});
}

TEST(StoSooTest, NoiselessQuadratic) {
  const TestFunction tf = LookupTestFunction("quadratic");
  const StoSooTrace trace = RunStoSoo(tf.f, tf.domain, 2, 3000, {});
  EXPECT_EQ(trace.result.evaluated.size(), 3000u);
  EXPECT_LE(tf.f_star - tf.f(trace.result.recommendation), 0.05);
}

TEST(StoSooTest, SweepInvariants) {
  const TestFunction tf = LookupTestFunction("peak");
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    RngStream noise(seed, "noise");
    const Evaluator f = MakeNoisy(tf.f, {NoiseKind::kBernoulli}, &noise);
    StoSooConfig config;
    config.h_max = 6;
    const StoSooTrace trace = RunStoSoo(f, tf.domain, 2, 2000, config);
    EXPECT_EQ(trace.result.evaluated.size(), 2000u);
    for (const std::vector<int>& sweep : trace.sweep_expansions) {
      std::set<int> depths(sweep.begin(), sweep.end());
      EXPECT_EQ(depths.size(), sweep.size());
      for (int h : sweep) EXPECT_LT(h, 6);
    }
    EXPECT_LE(trace.tree.max_depth(), 6);
    for (int c = 0; c < trace.tree.size(); ++c) {
      const Cell& cell = trace.tree.cell(c);
      EXPECT_EQ(std::isinf(StoSooBValueFromLog(cell.mean(), 1.0, cell.count)),
                cell.count == 0);
    }
  }
}

// The noiseless run lands next to the peak, so a ratio to it is not a
// usable yardstick; the noisy runs are held to log²T/√T instead.
TEST(StoSooTest, BernoulliNoiseAtCorollaryScale) {
  const TestFunction tf = LookupTestFunction("quadratic");
  EXPECT_LT(tf.f_star - tf.f(RunStoSoo(tf.f, tf.domain, 2, 10000, {})
                                  .result.recommendation),
            1e-5);
  double mean[2] = {0.0, 0.0};
  const std::int64_t budgets[2] = {1000, 10000};
  for (int j = 0; j < 2; ++j) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      RngStream rng(seed, "noise");
      const Evaluator f = MakeNoisy(tf.f, {NoiseKind::kBernoulli}, &rng);
      mean[j] += tf.f_star - tf.f(RunStoSoo(f, tf.domain, 2, budgets[j], {})
                                      .result.recommendation);
    }
    mean[j] /= 20.0;
    const double l = std::log(static_cast<double>(budgets[j]));
    EXPECT_LE(mean[j], l * l / std::sqrt(static_cast<double>(budgets[j])));
  }
  EXPECT_LT(mean[1], mean[0]);
}

TEST(PooTest, ScheduleExamples) {
  PooSchedule s = MakePooSchedule(2, 0.9, 1.0, 2);
  EXPECT_NEAR(PooDMax(2, 0.5), 1.0, 1e-15);
  std::vector<SmoothnessParams> grid;
  // N = 2 grid by substitution.
  for (int i = 1; i <= 2; ++i) grid.push_back({1.0, std::pow(0.9, 2.0 / i)});
  EXPECT_NEAR(grid[0].rho, 0.81, 1e-15);
  EXPECT_NEAR(grid[1].rho, 0.9, 1e-15);
  const double d_max = std::log(2.0) / std::log(1.0 / 0.9);
  const double need = 0.5 * d_max * std::log(1e4 / std::log(1e4));
  EXPECT_NEAR(need, 22.99, 0.01);
  s = MakePooSchedule(10000, 0.9, 1.0, 2);
  EXPECT_EQ(s.N, 32);
  ASSERT_EQ(s.instances.size(), 32u);
  EXPECT_DOUBLE_EQ(s.instances.back().rho, 0.9);
  EXPECT_DOUBLE_EQ(s.instances[15].rho, 0.81);
  for (const SmoothnessParams& p : s.instances) EXPECT_EQ(p.nu, 1.0);
  EXPECT_THROW(MakePooSchedule(10, 1.0, 1.0, 2), ConfigError);
}

TEST(PooTest, InstanceCountIsSmallestPowerOfTwo) {
  for (std::int64_t n : {2, 5, 30, 1000, 100000}) {
    for (double rho : {0.3, 0.7, 0.95}) {
      const int N = PooInstanceCount(n, 3, rho);
      const double need = 0.5 * std::log(3.0) / std::log(1.0 / rho) *
                          std::log(n / std::log(static_cast<double>(n)));
      EXPECT_GE(N, need);
      EXPECT_TRUE(N == 1 || N / 2 < need);
      EXPECT_EQ(N & (N - 1), 0);
    }
  }
}

TEST(PooTest, SingleInstanceReducesToHoo) {
  const TestFunction tf = LookupTestFunction("difficult");
  // D_max ln(T/ln T)/2 < 1, so one instance for the whole run.
  const double rho_max = 0.1;
  const std::int64_t T = 200;
  ASSERT_EQ(PooInstanceCount(T, 2, rho_max), 1);
  RngStream noise_a(7, "noise");
  RngStream noise_b(7, "noise");
  RngStream rec_a(7, "rec");
  RngStream rec_b(7, "rec");
  const PooTrace poo =
      RunPoo(MakeNoisy(tf.f, {NoiseKind::kUniform, 0.1}, &noise_a),
             tf.domain, 2, T, rho_max, 1.0, rec_a);
  const OptimizationResult hoo =
      RunHoo(MakeNoisy(tf.f, {NoiseKind::kUniform, 0.1}, &noise_b),
             tf.domain, 2, {1.0, rho_max}, T, rec_b);
  ASSERT_EQ(poo.instances.size(), 1u);
  EXPECT_EQ(poo.result.evaluated, hoo.evaluated);
  EXPECT_EQ(poo.result.rewards, hoo.rewards);
  EXPECT_EQ(poo.result.recommendation, hoo.recommendation);
}

TEST(PooTest, BudgetAndEqualCounts) {
  const TestFunction tf = LookupTestFunction("difficult");
  for (std::int64_t T : {1, 7, 100, 999, 3000}) {
    RngStream noise(1, "noise");
    RngStream rec(1, "rec");
    std::int64_t calls = 0;
    const Evaluator counted = [&](const Point& x) {
      ++calls;
      return tf.f(x) + noise.Uniform(-0.1, 0.1);
    };
    const PooTrace trace = RunPoo(counted, tf.domain, 2, T, 0.9, 1.0, rec);
    EXPECT_EQ(calls, T);
    EXPECT_EQ(trace.calls, T);
    EXPECT_LE(trace.max_count_spread, 1);
    const auto [lo, hi] =
        std::minmax_element(trace.counts.begin(), trace.counts.end());
    EXPECT_LE(*hi - *lo, 1);
    EXPECT_EQ(std::accumulate(trace.counts.begin(), trace.counts.end(),
                              std::int64_t{0}),
              T);
    EXPECT_EQ(trace.best, static_cast<int>(std::max_element(
                              trace.means.begin(), trace.means.end()) -
                          trace.means.begin()));
    EXPECT_EQ(static_cast<int>(trace.instances.size()),
              static_cast<int>(trace.counts.size()));
  }
}

TEST(PooTest, GridAfterDoublingKeepsOldInstances) {
  const TestFunction tf = LookupTestFunction("abs");
  RngStream rec(1, "rec");
  const PooTrace trace = RunPoo(tf.f, tf.domain, 2, 3000, 0.9, 1.0, rec);
  const int N = static_cast<int>(trace.instances.size());
  ASSERT_GT(N, 1);
  for (int i = 1; i <= N; ++i) {
    EXPECT_NEAR(trace.instances[i - 1].rho,
                std::pow(0.9, static_cast<double>(N) / i), 1e-12);
  }
}

TEST(PooTest, RecommendationComesFromBestInstance) {
  const TestFunction tf = LookupTestFunction("peak");
  RngStream noise(5, "noise");
  RngStream rec(5, "rec");
  const PooTrace trace =
      RunPoo(MakeNoisy(tf.f, {NoiseKind::kUniform, 0.2}, &noise), tf.domain,
             2, 2000, 0.9, 1.0, rec);
  std::int64_t offset = 0;
  for (int i = 0; i < trace.best; ++i) offset += trace.counts[i];
  const auto begin = trace.result.evaluated.begin() + offset;
  const auto end = begin + trace.counts[trace.best];
  EXPECT_NE(std::find(begin, end, trace.result.recommendation), end);
}

TEST(PooTest, MedianRegretShrinksWithBudget) {
  const TestFunction tf = LookupTestFunction("difficult");
  std::vector<double> small;
  std::vector<double> large;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    for (std::int64_t T : {200, 3000}) {
      RngStream noise(seed, "noise");
      RngStream rec(seed, "rec");
      const PooTrace trace =
          RunPoo(MakeNoisy(tf.f, {NoiseKind::kUniform, 0.1}, &noise),
                 tf.domain, 2, T, 0.9, 1.0, rec);
      double gap = 0.0;
      std::int64_t offset = 0;
      for (int i = 0; i < trace.best; ++i) offset += trace.counts[i];
      for (std::int64_t s = 0; s < trace.counts[trace.best]; ++s) {
        gap -= tf.f(trace.result.evaluated[offset + s]);
      }
      (T == 200 ? small : large).push_back(gap / trace.counts[trace.best]);
    }
  }
  EXPECT_LT(Median(large), Median(small));
}

}  // namespace
}  // namespace bandits
