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

#include <cmath>
#include <vector>

#include "bandits/baselines.h"
#include "bandits/episode.h"
#include "bandits/errors.h"
#include "bandits/rng.h"
#include "gtest/gtest.h"

namespace bandits {
namespace {

// Full-information loss table replayed round by round.
class TableEnv : public Environment {
 public:
  explicit TableEnv(std::vector<std::vector<double>> table)
      : table_(std::move(table)) {}
  int num_actions() const override {
    return static_cast<int>(table_.front().size());
  }
  Objective objective() const override { return Objective::kLoss; }
  void BeginRound(std::int64_t t, RngStream&) override {
    row_ = (t - 1) % static_cast<std::int64_t>(table_.size());
  }
  Feedback Respond(int action, RngStream&) override {
    Feedback fb;
    fb.action = action;
    fb.value = table_[row_][action];
    fb.observed = {action};
    fb.signals.assign(num_actions(), 0.0);
    fb.signals[action] = fb.value;
    return fb;
  }
  std::span<const double> RoundValues() const override { return table_[row_]; }

 private:
  std::vector<std::vector<double>> table_;
  std::int64_t row_ = 0;
};

class MeansEnv : public TableEnv {
 public:
  explicit MeansEnv(std::vector<double> means)
      : TableEnv({means}), means_(means) {}
  Objective objective() const override { return Objective::kReward; }
  std::optional<std::vector<double>> Means() const override { return means_; }

 private:
  std::vector<double> means_;
};

class BrokenPolicy : public UniformPolicy {
 public:
  BrokenPolicy() : UniformPolicy(2) {}
  std::optional<std::span<const double>> Distribution() const override {
    return std::span<const double>(bad_);
  }

 private:
  std::vector<double> bad_ = {0.7, 0.7};
};

TEST(RunEpisodeTest, ZeroLossesGiveZeroRegret) {
  TableEnv env({{0.0, 0.0, 0.0}});
  UniformPolicy policy(3);
  const RegretTrace trace = RunEpisode(policy, env, 5, RngStream(1, "t"));
  ASSERT_EQ(trace.rounds.size(), 5u);
  for (const auto& r : trace.rounds) EXPECT_EQ(r.cum_regret, 0.0);
}

TEST(RunEpisodeTest, AlwaysWrongActionAccruesOnePerRound) {
  TableEnv env({{0.0, 1.0}});
  FixedActionPolicy policy(2, 1);
  const RegretTrace trace = RunEpisode(policy, env, 7, RngStream(1, "t"));
  for (const auto& r : trace.rounds) {
    EXPECT_DOUBLE_EQ(r.cum_regret, static_cast<double>(r.round));
  }
  EXPECT_DOUBLE_EQ(trace.FinalRegret(), 7.0);
}

TEST(RunEpisodeTest, RoundIndicesRunFromOneToT) {
  TableEnv env({{0.2, 0.5}, {0.9, 0.1}});
  UniformPolicy policy(2);
  const RegretTrace trace = RunEpisode(policy, env, 33, RngStream(4, "t"));
  ASSERT_EQ(trace.rounds.size(), 33u);
  for (std::size_t i = 0; i < trace.rounds.size(); ++i) {
    EXPECT_EQ(trace.rounds[i].round, static_cast<std::int64_t>(i + 1));
  }
}

TEST(RunEpisodeTest, IdenticalConfigIsReproducible) {
  auto run = [] {
    TableEnv env({{0.2, 0.5, 0.1}, {0.9, 0.1, 0.4}});
    UniformPolicy policy(3);
    return RunEpisode(policy, env, 200, RngStream(99, "rep0"));
  };
  const RegretTrace a = run();
  const RegretTrace b = run();
  ASSERT_EQ(a.rounds.size(), b.rounds.size());
  for (std::size_t i = 0; i < a.rounds.size(); ++i) {
    EXPECT_EQ(a.rounds[i].action, b.rounds[i].action);
    EXPECT_EQ(a.rounds[i].cum_regret, b.rounds[i].cum_regret);
  }
}

TEST(RunEpisodeTest, ActionSpaceMismatchIsConfigError) {
  TableEnv env({{0.0, 1.0}});
  UniformPolicy policy(3);
  EXPECT_THROW(RunEpisode(policy, env, 3, RngStream(1, "t")), ConfigError);
}

TEST(RunEpisodeTest, InvalidDistributionIsInvariantError) {
  TableEnv env({{0.0, 1.0}});
  BrokenPolicy policy;
  EXPECT_THROW(RunEpisode(policy, env, 3, RngStream(1, "t")), InvariantError);
}

TEST(RunEpisodeTest, MeansSwitchToPseudoRegret) {
  MeansEnv env({0.9, 0.1});
  FixedActionPolicy policy(2, 1);
  const RegretTrace trace = RunEpisode(policy, env, 10, RngStream(1, "t"));
  EXPECT_EQ(trace.comparator, Comparator::kBestMean);
  EXPECT_NEAR(trace.FinalRegret(), 8.0, 1e-12);
}

TEST(ValidateTest, Probabilities) {
  EXPECT_NO_THROW(ValidateProbabilities(std::vector<double>{0.25, 0.75}));
  EXPECT_THROW(ValidateProbabilities(std::vector<double>{-0.1, 1.1}),
               InvariantError);
  EXPECT_THROW(ValidateProbabilities(std::vector<double>{0.5, 0.5 + 1e-8}),
               InvariantError);
  EXPECT_NO_THROW(ValidateProbabilities(std::vector<double>{0.5, 0.5 + 1e-10}));
  EXPECT_THROW(ValidateProbabilities(std::vector<double>{NAN, 1.0}),
               InvariantError);
}

TEST(ValidateTest, Losses) {
  EXPECT_NO_THROW(ValidateLosses(std::vector<double>{0.0, 1.0, 0.5}));
  EXPECT_THROW(ValidateLosses(std::vector<double>{1.5}), ConfigError);
}

TEST(HindsightRegretTest, SymmetricLossesGiveZero) {
  std::vector<std::vector<double>> losses = {{0.3, 0.3}, {0.7, 0.7}};
  EXPECT_EQ(HindsightRegret(losses, std::vector<int>{0, 1}), 0.0);
}

TEST(HindsightRegretTest, DirectSum) {
  std::vector<std::vector<double>> losses = {{0, 1}, {0, 1}};
  // Both picks are the second action.
  EXPECT_DOUBLE_EQ(HindsightRegret(losses, std::vector<int>{1, 1}), 2.0);
}

TEST(HindsightRegretTest, MatchesExhaustiveComparatorScan) {
  RngStream rng(7, "hindsight");
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<std::vector<double>> losses(20, std::vector<double>(5));
    std::vector<int> picks(20);
    for (int t = 0; t < 20; ++t) {
      for (auto& l : losses[t]) l = rng.Uniform();
      picks[t] = rng.UniformInt(5);
    }
    double incurred = 0.0;
    for (int t = 0; t < 20; ++t) incurred += losses[t][picks[t]];
    double best = INFINITY;
    for (int i = 0; i < 5; ++i) {
      double total = 0.0;
      for (int t = 0; t < 20; ++t) total += losses[t][i];
      best = std::min(best, total);
    }
    EXPECT_NEAR(HindsightRegret(losses, picks), incurred - best, 1e-12);
  }
}

// Realized regret against a fixed comparator can go below zero when the
// learner switches; only fixed-action play is guaranteed nonnegative.
TEST(HindsightRegretTest, SwitchingCanBeatEveryFixedAction) {
  std::vector<std::vector<double>> losses = {{0, 1}, {1, 0}};
  EXPECT_DOUBLE_EQ(HindsightRegret(losses, std::vector<int>{0, 1}), -1.0);
  RngStream rng(3, "fixed");
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<std::vector<double>> l(10, std::vector<double>(4));
    for (auto& row : l) {
      for (auto& x : row) x = rng.Uniform();
    }
    const std::vector<int> picks(10, rng.UniformInt(4));
    EXPECT_GE(HindsightRegret(l, picks), 0.0);
  }
}

TEST(PseudoRegretTest, Examples) {
  const std::vector<double> equal = {0.4, 0.4, 0.4};
  EXPECT_EQ(PseudoRegret(equal, std::vector<int>{0, 2, 1}), 0.0);
  const std::vector<double> means = {0.9, 0.1};
  EXPECT_NEAR(PseudoRegret(means, std::vector<int>(10, 1)), 8.0, 1e-12);
}

TEST(PseudoRegretTest, MatchesComparatorScanAndIsNonnegative) {
  RngStream rng(11, "pseudo");
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<double> means(6);
    for (auto& m : means) m = rng.Uniform();
    std::vector<int> picks(50);
    for (auto& p : picks) p = rng.UniformInt(6);
    double best = -INFINITY;
    for (double m : means) best = std::max(best, m);
    double expected = 0.0;
    for (int p : picks) expected += best - means[p];
    const double got = PseudoRegret(means, picks);
    EXPECT_NEAR(got, expected, 1e-12);
    EXPECT_GE(got, 0.0);
    EXPECT_GE(PseudoRegret(means, picks, Objective::kLoss), 0.0);
  }
}

TEST(RngStreamTest, SameSeedAndLabelReproduce) {
  RngStream a(5, "run0/env");
  RngStream b(5, "run0/env");
  RngStream c(5, "run0/policy");
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.NextU64();
    EXPECT_EQ(x, b.NextU64());
    differs |= x != c.NextU64();
  }
  EXPECT_TRUE(differs);
  EXPECT_EQ(RngStream(5, "run0").Split("env").NextU64(),
            RngStream(5, "run0/env").NextU64());
}

TEST(RngStreamTest, DrawsHaveTheRightMoments) {
  RngStream rng(17, "moments");
  const int n = 200000;
  double u = 0, e = 0, g = 0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.Uniform();
    ASSERT_GE(x, 0.0);
    ASSERT_LT(x, 1.0);
    u += x;
    e += rng.Exponential();
    g += static_cast<double>(rng.Geometric(0.25));
  }
  EXPECT_NEAR(u / n, 0.5, 0.005);
  EXPECT_NEAR(e / n, 1.0, 0.01);
  EXPECT_NEAR(g / n, 4.0, 0.05);
  EXPECT_EQ(rng.Geometric(1.0), 1);
}

TEST(Ucb1Test, FindsTheBestArm) {
  MeansEnv env({0.2, 0.8, 0.5});
  Ucb1Policy policy(3);
  const RegretTrace trace = RunEpisode(policy, env, 2000, RngStream(2, "u"));
  EXPECT_GT(policy.counts()[1], 1500);
  EXPECT_LT(trace.FinalRegret(), 200.0);
}

}  // namespace
}  // namespace bandits
