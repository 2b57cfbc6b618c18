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

#ifndef BANDITS_INFLUENCE_H_
#define BANDITS_INFLUENCE_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bandits/episode.h"
#include "bandits/rng.h"

namespace bandits {

class WeightedDigraph;

// Dense N×N matrix of influence probabilities; p(k, j) is the chance that
// node k influences node j.
class InfluenceMatrix {
 public:
  explicit InfluenceMatrix(int n);
  // Row-major entries, all in [0, 1].
  InfluenceMatrix(int n, std::vector<double> entries);

  int n() const { return n_; }
  double p(int k, int j) const { return p_[Index(k, j)]; }
  void Set(int k, int j, double p);
  std::span<const double> Row(int k) const;
  bool Symmetric() const;

 private:
  std::size_t Index(int k, int j) const {
    return static_cast<std::size_t>(k) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j);
  }

  int n_;
  std::vector<double> p_;
};

// Node 0 is the hub. Leaves reach the hub with `to_hub`, the hub reaches
// each leaf with `from_hub`, and every node influences itself with
// `self`.
InfluenceMatrix StarInfluence(int n, double to_hub, double from_hub,
                              double self = 1.0);
// n/2 disjoint pairs; each node influences itself and its partner surely.
InfluenceMatrix PairsInfluence(int n);
// Arc weights become probabilities; self-influence is set to `self`.
InfluenceMatrix InfluenceFromGraph(const WeightedDigraph& g, double self = 0.0);
// One row per line, comma separated, `#` comments.
InfluenceMatrix ReadInfluenceCsv(std::istream& in);
InfluenceMatrix ReadInfluenceCsvFile(const std::string& path);

struct InfluenceStats {
  std::vector<double> r;
  std::vector<double> r_dual;
  double r_star = 0.0;
  double r_dual_star = 0.0;
  // r★ − max of r over the nodes with the largest dual influence.
  double eps_star = 0.0;
};

InfluenceStats ComputeInfluenceStats(const InfluenceMatrix& m);

// Each j is in the returned set (ascending) independently with p(k, j).
std::vector<int> SampleInfluence(const InfluenceMatrix& m, int k,
                                 RngStream& rng);

// |{i : max dual − dual_i ≤ Δ}| with a 1e-12 tolerance.
int DualGapCount(std::span<const double> r_dual, double delta);
int DualGapCount(const InfluenceMatrix& m, double delta);

// 16 sqrt(r★∘ N log(TN)/T★) + 144 N log(TN)/T★.
double DetectableGap(double r_dual_star, int n, std::int64_t T,
                     std::int64_t t_star);

struct DetectableQuantities {
  std::int64_t t_star = 0;
  int d_star = 0;
  double delta_star = 0.0;
  bool found = false;
};

// Smallest T★ in 1..T with T★ r★∘ ≥ sqrt(D(Δ★(T★)) T r★∘). Falls back to
// T★ = T and D★ = N when none exists.
DetectableQuantities ComputeDetectableQuantities(
    std::span<const double> r_dual, std::int64_t T);
DetectableQuantities ComputeDetectableQuantities(const InfluenceMatrix& m,
                                                 std::int64_t T);

// Plays node k and reveals the influenced set in `observed`; the value is
// its size.
class InfluenceEnvironment : public Environment {
 public:
  explicit InfluenceEnvironment(InfluenceMatrix m);

  int num_actions() const override { return m_.n(); }
  Objective objective() const override { return Objective::kReward; }
  void BeginRound(std::int64_t, RngStream&) override {}
  Feedback Respond(int action, RngStream& rng) override;
  std::span<const double> RoundValues() const override { return stats_.r; }
  std::optional<std::vector<double>> Means() const override {
    return stats_.r;
  }

  const InfluenceMatrix& matrix() const { return m_; }
  const InfluenceStats& stats() const { return stats_; }

 private:
  InfluenceMatrix m_;
  InfluenceStats stats_;
};

// Two-phase local-influence learner. Phase 1 plays uniform nodes and counts
// how often each node shows up in the revealed sets; it stops at the first
// round where the empirical detectable-horizon test holds, then keeps the
// top-D̂ nodes by count. Phase 2 runs UCB1 on |S|/N over the survivors,
// reusing the phase-1 plays of surviving nodes.
class BarePolicy : public Policy {
 public:
  BarePolicy(int num_nodes, std::int64_t horizon);

  int num_actions() const override { return n_; }
  int Select(std::int64_t t, RngStream& rng) override;
  std::optional<std::span<const double>> Distribution() const override;
  void Update(std::int64_t t, const Feedback& feedback,
              RngStream& rng) override;

  bool exploring() const { return exploring_; }
  std::int64_t phase_one_rounds() const { return phase_one_rounds_; }
  int d_hat() const { return d_hat_; }
  const std::vector<int>& survivors() const { return survivors_; }
  const std::vector<std::int64_t>& dual_counts() const { return dual_counts_; }
  const std::vector<std::int64_t>& plays() const { return plays_; }
  const std::vector<double>& means() const { return means_; }
  // Survivor with the highest empirical influence; before the cut, any node.
  int Recommend() const;

 private:
  void MaybeStopExploring(std::int64_t t);

  int n_;
  std::int64_t horizon_;
  bool exploring_ = true;
  std::int64_t phase_one_rounds_ = 0;
  int d_hat_ = 0;
  std::vector<double> uniform_;
  std::vector<int> survivors_;
  std::vector<std::int64_t> dual_counts_;
  std::vector<std::int64_t> plays_;
  std::vector<double> means_;
};

}  // namespace bandits

#endif  // BANDITS_INFLUENCE_H_
