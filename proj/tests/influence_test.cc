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
#include <numeric>
#include <sstream>

#include <gtest/gtest.h>

#include "bandits/baselines.h"
#include "bandits/errors.h"
#include "bandits/graph.h"
#include "bandits/influence.h"

namespace bandits {
namespace {

InfluenceMatrix Identity(int n) {
  InfluenceMatrix m(n);
  for (int k = 0; k < n; ++k) m.Set(k, k, 1.0);
  return m;
}

InfluenceMatrix RandomMatrix(int n, RngStream& rng) {
  InfluenceMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m.Set(i, j, rng.Uniform());
  }
  return m;
}

// Brute-force forward scan of the detectable horizon.
DetectableQuantities ScanDetectable(const InfluenceMatrix& m, std::int64_t T) {
  const InfluenceStats s = ComputeInfluenceStats(m);
  const int n = m.n();
  const double l = std::log(static_cast<double>(T) * n);
  for (std::int64_t ts = 1; ts <= T; ++ts) {
    const double delta = 16.0 * std::sqrt(s.r_dual_star * n * l / ts) +
                         144.0 * n * l / ts;
    int d = 0;
    for (double v : s.r_dual) d += s.r_dual_star - v <= delta + 1e-12;
    if (ts * s.r_dual_star >= std::sqrt(d * static_cast<double>(T) *
                                        s.r_dual_star)) {
      return {ts, d, delta, true};
    }
  }
  return {T, n, 0.0, false};
}

TEST(InfluenceMatrixTest, RejectsBadEntries) {
  EXPECT_THROW(InfluenceMatrix(2, {0.1, 1.2, 0.0, 0.0}), ConfigError);
  EXPECT_THROW(InfluenceMatrix(2, {0.1, 0.2, 0.0}), ConfigError);
  EXPECT_THROW(InfluenceMatrix(0), ConfigError);
  InfluenceMatrix m(2);
  EXPECT_THROW(m.Set(0, 1, -0.1), ConfigError);
  EXPECT_THROW(m.Set(2, 0, 0.5), ConfigError);
}

TEST(InfluenceMatrixTest, ReadsCsv) {
  std::istringstream in("# star\n1, 0.5, 0.5\n0.9,1,0\n0.9, 0, 1\n");
  const InfluenceMatrix m = ReadInfluenceCsv(in);
  EXPECT_EQ(m.n(), 3);
  EXPECT_DOUBLE_EQ(m.p(1, 0), 0.9);
  EXPECT_DOUBLE_EQ(m.p(0, 2), 0.5);
  std::istringstream ragged("1,0\n0\n");
  EXPECT_THROW(ReadInfluenceCsv(ragged), ConfigError);
  std::istringstream wide("1,0\n0,1\n1,1\n");
  EXPECT_THROW(ReadInfluenceCsv(wide), ConfigError);
  std::istringstream junk("1,x\n0,1\n");
  EXPECT_THROW(ReadInfluenceCsv(junk), ConfigError);
}

TEST(InfluenceMatrixTest, FromEdgeList) {
  std::istringstream in("0 1 0.3\n2 0 0.7\n");
  const InfluenceMatrix m =
      InfluenceFromGraph(ReadEdgeList(in, /*directed=*/true), 1.0);
  EXPECT_EQ(m.n(), 3);
  EXPECT_DOUBLE_EQ(m.p(0, 1), 0.3);
  EXPECT_DOUBLE_EQ(m.p(1, 0), 0.0);
  EXPECT_DOUBLE_EQ(m.p(2, 0), 0.7);
  EXPECT_DOUBLE_EQ(m.p(1, 1), 1.0);
}

TEST(InfluenceStatsTest, RowAndColumnSums) {
  RngStream rng(1, "stats");
  for (int rep = 0; rep < 10; ++rep) {
    const InfluenceMatrix m = RandomMatrix(7, rng);
    const InfluenceStats s = ComputeInfluenceStats(m);
    for (int k = 0; k < 7; ++k) {
      double row = 0.0;
      double col = 0.0;
      for (int j = 0; j < 7; ++j) {
        row += m.p(k, j);
        col += m.p(j, k);
      }
      EXPECT_NEAR(s.r[k], row, 1e-12);
      EXPECT_NEAR(s.r_dual[k], col, 1e-12);
    }
    EXPECT_EQ(s.r_star, *std::max_element(s.r.begin(), s.r.end()));
    EXPECT_GE(s.eps_star, 0.0);
  }
}

TEST(InfluenceStatsTest, SymmetricMatrixHasEqualInfluences) {
  RngStream rng(2, "stats");
  InfluenceMatrix m(6);
  for (int i = 0; i < 6; ++i) {
    for (int j = i; j < 6; ++j) {
      const double p = rng.Uniform();
      m.Set(i, j, p);
      m.Set(j, i, p);
    }
  }
  ASSERT_TRUE(m.Symmetric());
  const InfluenceStats s = ComputeInfluenceStats(m);
  for (int k = 0; k < 6; ++k) EXPECT_NEAR(s.r[k], s.r_dual[k], 1e-12);
  EXPECT_NEAR(s.eps_star, 0.0, 1e-12);
}

TEST(InfluenceStatsTest, EpsStarOnHandMatrix) {
  // Node 0 is influenced most (column 1.5) but influences little (row .5);
  // node 1 has the largest influence 1.4.
  const InfluenceMatrix m(2, {0.5, 0.0, 1.0, 0.4});
  const InfluenceStats s = ComputeInfluenceStats(m);
  EXPECT_DOUBLE_EQ(s.r_dual_star, 1.5);
  EXPECT_DOUBLE_EQ(s.r_star, 1.4);
  EXPECT_DOUBLE_EQ(s.eps_star, 0.9);
}

TEST(SampleInfluenceTest, IdentityAndZero) {
  RngStream rng(3, "sample");
  const InfluenceMatrix id = Identity(5);
  const InfluenceMatrix zero(5);
  for (int rep = 0; rep < 100; ++rep) {
    const int k = rng.UniformInt(5);
    EXPECT_EQ(SampleInfluence(id, k, rng), std::vector<int>{k});
    EXPECT_TRUE(SampleInfluence(zero, k, rng).empty());
  }
  EXPECT_THROW(SampleInfluence(id, 5, rng), ConfigError);
}

TEST(SampleInfluenceTest, HalfRowMeanSize) {
  const int n = 20;
  const InfluenceMatrix m(n, std::vector<double>(n * n, 0.5));
  RngStream rng(4, "sample");
  const int draws = 100000;
  double sum = 0.0;
  std::vector<int> hits(n, 0);
  for (int i = 0; i < draws; ++i) {
    const std::vector<int> s = SampleInfluence(m, 3, rng);
    ASSERT_TRUE(std::is_sorted(s.begin(), s.end()));
    sum += s.size();
    for (int j : s) ++hits[j];
  }
  const double stderr_size = std::sqrt(n * 0.25 / draws);
  EXPECT_NEAR(sum / draws, n / 2.0, 3.0 * stderr_size);
  for (int c : hits) {
    EXPECT_NEAR(c / static_cast<double>(draws), 0.5,
                4.0 * std::sqrt(0.25 / draws));
  }
}

TEST(DualGapCountTest, Examples) {
  const InfluenceMatrix star = StarInfluence(6, 0.9, 0.2);
  const InfluenceStats s = ComputeInfluenceStats(star);
  // Hub column 1 + 5·0.9 = 5.5, leaf columns 1 + 0.2.
  EXPECT_DOUBLE_EQ(s.r_dual[0], 5.5);
  EXPECT_DOUBLE_EQ(s.r_dual[3], 1.2);
  EXPECT_EQ(DualGapCount(star, 0.0), 1);
  EXPECT_EQ(DualGapCount(star, 4.29), 1);
  EXPECT_EQ(DualGapCount(star, 4.3), 6);
  EXPECT_EQ(DualGapCount(star, s.r_dual_star), 6);
  EXPECT_EQ(DualGapCount(Identity(4), 0.0), 4);
  EXPECT_THROW(DualGapCount(star, -1.0), ConfigError);
}

TEST(DualGapCountTest, NondecreasingAndFullAtTop) {
  RngStream rng(5, "gap");
  for (int rep = 0; rep < 20; ++rep) {
    const InfluenceMatrix m = RandomMatrix(9, rng);
    const InfluenceStats s = ComputeInfluenceStats(m);
    int previous = 0;
    for (double delta = 0.0; delta <= s.r_dual_star + 1.0; delta += 0.05) {
      const int d = DualGapCount(s.r_dual, delta);
      EXPECT_GE(d, std::max(previous, 1));
      previous = d;
      if (delta >= s.r_dual_star) {
        EXPECT_EQ(d, 9);
      }
    }
  }
}

TEST(DetectableTest, GapFormula) {
  const double l = std::log(1000.0 * 10);
  EXPECT_NEAR(DetectableGap(4.0, 10, 1000, 50),
              16.0 * std::sqrt(4.0 * 10 * l / 50) + 144.0 * 10 * l / 50,
              1e-12);
}

TEST(DetectableTest, BisectionMatchesForwardScan) {
  RngStream rng(6, "detect");
  std::vector<InfluenceMatrix> cases = {StarInfluence(20, 0.9, 0.0),
                                        PairsInfluence(20), InfluenceMatrix(5),
                                        Identity(3)};
  for (int rep = 0; rep < 5; ++rep) cases.push_back(RandomMatrix(8, rng));
  for (const InfluenceMatrix& m : cases) {
    for (std::int64_t T : {1, 2, 10, 100, 1000, 100000}) {
      const DetectableQuantities a = ComputeDetectableQuantities(m, T);
      const DetectableQuantities b = ScanDetectable(m, T);
      EXPECT_EQ(a.t_star, b.t_star) << T;
      EXPECT_EQ(a.d_star, b.d_star) << T;
      EXPECT_EQ(a.found, b.found) << T;
    }
  }
}

TEST(DetectableTest, HubStarCollapsesToOne) {
  // Hub column 1 + 19·0.9 = 18.1 against 1 for leaves. The gap formula
  // drops below 17.1 only once T★ is near 10⁴, and before that the
  // D★ = 20 test already holds at T★ ≈ sqrt(1.1 T), so T must be ~10⁹.
  const InfluenceMatrix star = StarInfluence(20, 0.9, 0.0);
  const DetectableQuantities q = ComputeDetectableQuantities(star, 1000000000);
  EXPECT_TRUE(q.found);
  EXPECT_EQ(q.d_star, 1);
  EXPECT_LT(q.delta_star, 17.1);
  EXPECT_LT(q.t_star, 1000000000 / 1000);
}

TEST(DetectableTest, DisconnectedPairsKeepEveryNode) {
  const InfluenceMatrix pairs = PairsInfluence(20);
  for (std::int64_t T : {100, 10000, 1000000, 100000000}) {
    EXPECT_EQ(ComputeDetectableQuantities(pairs, T).d_star, 20) << T;
  }
}

TEST(DetectableTest, StarDimensionNonincreasing) {
  const InfluenceMatrix star = StarInfluence(20, 0.9, 0.0);
  int previous = 21;
  for (std::int64_t T = 100; T <= 1000000000; T *= 10) {
    const int d = ComputeDetectableQuantities(star, T).d_star;
    EXPECT_LE(d, previous) << T;
    previous = d;
  }
  EXPECT_EQ(previous, DualGapCount(star, 0.0));
}

TEST(DetectableTest, HorizonInequalityHolds) {
  RngStream rng(7, "detect");
  for (int rep = 0; rep < 10; ++rep) {
    const InfluenceMatrix m = RandomMatrix(6, rng);
    const InfluenceStats s = ComputeInfluenceStats(m);
    const DetectableQuantities q = ComputeDetectableQuantities(m, 5000);
    ASSERT_TRUE(q.found);
    EXPECT_GE(q.t_star * s.r_dual_star,
              std::sqrt(q.d_star * 5000.0 * s.r_dual_star));
    EXPECT_GE(q.d_star, DualGapCount(m, 0.0));
  }
}

TEST(InfluenceEnvironmentTest, RevealsSetAndScoresSize) {
  InfluenceEnvironment env(StarInfluence(4, 1.0, 1.0));
  RngStream rng(8, "env");
  const Feedback f = env.Respond(0, rng);
  EXPECT_EQ(f.observed, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(f.value, 4.0);
  EXPECT_EQ(env.objective(), Objective::kReward);
  EXPECT_EQ(*env.Means(), (std::vector<double>{4.0, 2.0, 2.0, 2.0}));
}

TEST(BareTest, RejectsBadSetup) {
  EXPECT_THROW(BarePolicy(0, 10), ConfigError);
  EXPECT_THROW(BarePolicy(3, 1), ConfigError);
}

TEST(BareTest, TwoNodesFindTheBetterOne) {
  const InfluenceMatrix m(2, {1.0, 0.5, 0.0, 0.5});
  int correct = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    InfluenceEnvironment env(m);
    BarePolicy bare(2, 5000);
    RunEpisode(bare, env, 5000, RngStream(seed, "bare2"));
    correct += bare.Recommend() == 0;
  }
  EXPECT_GE(correct, 95);
}

TEST(BareTest, AllZeroMatrixHasNoRegret) {
  InfluenceEnvironment env{InfluenceMatrix(7)};
  BarePolicy bare(7, 300);
  const RegretTrace trace = RunEpisode(bare, env, 300, RngStream(9, "zero"));
  EXPECT_EQ(trace.FinalRegret(), 0.0);
  for (const RoundRecord& r : trace.rounds) EXPECT_EQ(r.value, 0.0);
  // Nothing is ever revealed, so exploration never ends.
  EXPECT_TRUE(bare.exploring());
}

TEST(BareTest, PhaseOneChoicesAreUniform) {
  // All-zero influence keeps BARE in its uniform phase for the whole run.
  const int n = 10;
  const std::int64_t T = 10000;
  InfluenceEnvironment env{InfluenceMatrix(n)};
  BarePolicy bare(n, T);
  const RegretTrace trace = RunEpisode(bare, env, T, RngStream(10, "chi"));
  std::vector<double> counts(n, 0.0);
  for (int a : trace.Actions()) counts[a] += 1.0;
  double chi2 = 0.0;
  const double expected = static_cast<double>(T) / n;
  for (double c : counts) chi2 += (c - expected) * (c - expected) / expected;
  // 99th percentile of chi-square with 9 degrees of freedom.
  EXPECT_LT(chi2, 21.666);
}

TEST(BareTest, CutKeepsDHatSortedSurvivors) {
  const InfluenceMatrix star = StarInfluence(30, 1.0, 1.0);
  InfluenceEnvironment env(star);
  BarePolicy bare(30, 2000);
  RunEpisode(bare, env, 2000, RngStream(11, "len"));
  ASSERT_FALSE(bare.exploring());
  EXPECT_GT(bare.phase_one_rounds(), 0);
  EXPECT_EQ(static_cast<int>(bare.survivors().size()), bare.d_hat());
  EXPECT_TRUE(std::is_sorted(bare.survivors().begin(), bare.survivors().end()));
}

TEST(BareTest, SurvivorsAreTopDualCounts) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RngStream rng(seed, "top");
    const InfluenceMatrix m = RandomMatrix(12, rng);
    InfluenceEnvironment env(m);
    BarePolicy bare(12, 20000);
    RunEpisode(bare, env, 20000, rng);
    if (bare.exploring()) continue;
    const auto& c = bare.dual_counts();
    std::int64_t worst_kept = c[bare.survivors()[0]];
    for (int k : bare.survivors()) worst_kept = std::min(worst_kept, c[k]);
    for (int k = 0; k < 12; ++k) {
      const bool kept = std::find(bare.survivors().begin(),
                                  bare.survivors().end(),
                                  k) != bare.survivors().end();
      if (!kept) {
        EXPECT_LE(c[k], worst_kept);
      }
    }
  }
}

TEST(BareTest, PlaysOnlySurvivorsAfterTheCut) {
  const InfluenceMatrix star = StarInfluence(10, 0.8, 0.8);
  InfluenceEnvironment env(star);
  BarePolicy bare(10, 50000);
  const RegretTrace trace = RunEpisode(bare, env, 50000, RngStream(12, "cut"));
  ASSERT_FALSE(bare.exploring());
  const auto& s = bare.survivors();
  for (std::size_t t = bare.phase_one_rounds(); t < trace.rounds.size(); ++t) {
    ASSERT_TRUE(std::find(s.begin(), s.end(), trace.rounds[t].action) !=
                s.end());
  }
  EXPECT_EQ(bare.Recommend(), 0);
}

TEST(BareTest, RegretWithinTrivialBound) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    RngStream rng(seed, "bound");
    const InfluenceMatrix m = RandomMatrix(15, rng);
    InfluenceEnvironment env(m);
    BarePolicy bare(15, 3000);
    const RegretTrace trace = RunEpisode(bare, env, 3000, rng);
    double previous = 0.0;
    for (const RoundRecord& r : trace.rounds) {
      EXPECT_GE(r.cum_regret, previous - 1e-9);
      previous = r.cum_regret;
    }
    EXPECT_LE(trace.FinalRegret(), env.stats().r_star * 3000);
  }
}

TEST(BareTest, BeatsUniformOnLongStarRun) {
  // At T = 5000 the top-D̂ cut still keeps every node, but UCB has time to
  // settle on the hub.
  const InfluenceMatrix star = StarInfluence(50, 1.0, 1.0);
  double bare_sum = 0.0;
  double uniform_sum = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const RngStream rng(seed, "long");
    InfluenceEnvironment env(star);
    BarePolicy bare(50, 5000);
    bare_sum += RunEpisode(bare, env, 5000, rng).FinalRegret();
    UniformPolicy uniform(50);
    uniform_sum += RunEpisode(uniform, env, 5000, rng).FinalRegret();
  }
  EXPECT_LT(bare_sum, 0.5 * uniform_sum);
}

}  // namespace
}  // namespace bandits
