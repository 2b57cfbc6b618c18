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

#ifndef BANDITS_SIDEOBS_H_
#define BANDITS_SIDEOBS_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "bandits/episode.h"
#include "bandits/graph.h"
#include "bandits/rng.h"

namespace bandits {

// s_{(j,i)} under the own-loss convention: the chosen node always sees
// itself with weight 1, whatever self-loop is stored.
double ObservationWeight(const WeightedDigraph& g, int j, int i);

// Out-neighbors of `chosen` plus `chosen`, ascending.
std::vector<int> ObservedSet(const WeightedDigraph& g, int chosen);

// p_i ∝ exp(−η L̂_i), computed after subtracting the largest exponent.
std::vector<double> ExpWeights(std::span<const double> cumulative_estimates,
                               double eta);

// o_{t,i} = Σ_j p_j s_{(j,i)}, with weights thresholded at `min_weight`.
std::vector<double> ObservationProbabilities(const WeightedDigraph& g,
                                             std::span<const double> p,
                                             double min_weight = 0.0);

// Loss estimates. All return 0 for unobserved components.
double SetEstimate(double loss, double o, bool observed);
double IxEstimate(double loss, double o, double gamma, bool observed);
// c / (Σ_j p_j s_{j,i} + γ).
double BasicEstimate(double c, std::span<const double> p,
                     std::span<const double> s_column, double gamma);
// c·1{s_chosen ≥ ε} / (Σ_j p_j s_{j,i} 1{s_{j,i} ≥ ε} + γ).
double IxtEstimate(double c, std::span<const double> p,
                   std::span<const double> s_column, double s_chosen,
                   double eps, double gamma);
// s_chosen·c / (Σ_j p_j s_{j,i}² + γ).
double WixEstimate(double c, std::span<const double> p,
                   std::span<const double> s_column, double s_chosen,
                   double gamma);
double GrixEstimate(std::int64_t K, bool observed, double loss);

// c_i = s·ℓ_i + (1 − s)·ξ_i with s = ObservationWeight(g, chosen, i).
std::vector<double> NoisyFeedback(const WeightedDigraph& g,
                                  std::span<const double> losses,
                                  std::span<const double> xi, int chosen);

// Learning-rate schedules. `second_moment` is Σ_{s<t} Σ_i p_{s,i} ℓ̂_{s,i}².
double Exp3IxEta(int N, double second_moment);
double WixEta(int N, double R, double second_moment);
double ResEta(int N, double second_moment);

// Exp3-Res surrogate G_{t,i}. `others` holds the observation indicators of
// the other arms; a random permutation of them supplies R(1..N−2) (when more
// than N−2 are given, the first N−2 of the permutation are used).
std::int64_t ResSurrogate(double p_i, std::span<const char> others, int N,
                          RngStream& rng);

// Hard cap on resampling rounds, ceil(log(N/δ)/γ).
std::int64_t ResamplingCap(int N, double delta, double gamma);

// K_i = min({k : copy k observes i} ∪ {U_i}), U_i ~ Geom(γ), for each
// target component. `sampler` returns a fresh 0/1 observation vector. Draws
// stop at `cap` copies.
std::vector<std::int64_t> GeometricResampling(
    const std::function<std::vector<char>(RngStream&)>& sampler,
    std::span<const int> targets, double gamma, std::int64_t cap,
    RngStream& rng);

bool ResAssumptionHolds(double r, std::int64_t T, int N);

enum class Estimator { kSet, kIx, kBasic, kIxt, kWix, kRes };

struct Exp3Config {
  Estimator estimator = Estimator::kIx;
  double R = 0.0;            // noise bound, used by the WIX schedule
  double epsilon = -1.0;     // IXt threshold; < 0: α★ argmin of first graph
  double fixed_eta = 0.0;    // > 0 replaces the adaptive schedule
  double fixed_gamma = -1.0; // ≥ 0 replaces the default γ
};

// Exponential weights with a pluggable loss estimate.
class Exp3Policy : public Policy {
 public:
  Exp3Policy(int num_actions, Exp3Config config);

  int num_actions() const override { return n_; }
  int Select(std::int64_t t, RngStream& rng) override;
  std::optional<std::span<const double>> Distribution() const override {
    return std::span<const double>(probs_);
  }
  void Update(std::int64_t t, const Feedback& feedback,
              RngStream& rng) override;

  double eta() const { return eta_; }
  double gamma() const { return gamma_; }
  double epsilon() const { return config_.epsilon; }
  double second_moment() const { return second_moment_; }
  const std::vector<double>& cumulative_estimates() const { return l_hat_; }
  const std::vector<double>& last_estimates() const { return last_; }

 private:
  void ComputeRates();

  int n_;
  Exp3Config config_;
  std::vector<double> l_hat_;
  std::vector<double> probs_;
  std::vector<double> last_;
  double eta_ = 0.0;
  double gamma_ = 0.0;
  double second_moment_ = 0.0;
};

// Decision sets for FPL: binary vectors over `dim` components, given by
// their supports.
class DecisionSet {
 public:
  virtual ~DecisionSet() = default;
  virtual int dim() const = 0;
  virtual int max_support() const = 0;
  // Support of argmin_{v∈S} vᵀscore, ascending.
  virtual std::vector<int> ArgMin(std::span<const double> score) const = 0;
  virtual bool Contains(std::span<const int> support) const = 0;
};

class UnitVectors : public DecisionSet {
 public:
  explicit UnitVectors(int n);
  int dim() const override { return n_; }
  int max_support() const override { return 1; }
  std::vector<int> ArgMin(std::span<const double> score) const override;
  bool Contains(std::span<const int> support) const override;

 private:
  int n_;
};

// All subsets of exactly m components.
class FixedSizeSubsets : public DecisionSet {
 public:
  FixedSizeSubsets(int n, int m);
  int dim() const override { return n_; }
  int max_support() const override { return m_; }
  std::vector<int> ArgMin(std::span<const double> score) const override;
  bool Contains(std::span<const int> support) const override;

 private:
  int n_;
  int m_;
};

// Assignments of one distinct item to each user; component u·items + f means
// "user u gets item f". Exhaustive search, at most 5×5.
class Matchings : public DecisionSet {
 public:
  Matchings(int users, int items);
  int dim() const override { return users_ * items_; }
  int max_support() const override { return users_; }
  std::vector<int> ArgMin(std::span<const double> score) const override;
  bool Contains(std::span<const int> support) const override;
  int users() const { return users_; }
  int items() const { return items_; }

 private:
  int users_;
  int items_;
  std::vector<std::vector<int>> all_;
};

// Three users, three news feeds; feeds 2 and 3 carry the same content, so
// giving either one to a user reveals that user's click on the other.
struct NewsFeedsInstance {
  Matchings decisions{3, 3};
  WeightedDigraph graph{9, true};
  NewsFeedsInstance();
};

// argmin_{v∈S} vᵀ(η L̂ − Z).
std::vector<int> FplSelect(const DecisionSet& set,
                           std::span<const double> cumulative_estimates,
                           double eta, std::span<const double> perturbation);

struct FplConfig {
  double delta = 0.01;        // resampling cap confidence
  double fixed_rate = 0.0;    // > 0: η = γ fixed
  double alpha_estimate = 0;  // > 0: use in the rate instead of α(G_t)
};

// FPL-IX over components with geometric-resampling loss estimates.
class FplIxLearner {
 public:
  FplIxLearner(std::shared_ptr<const DecisionSet> set, FplConfig config);

  std::vector<int> Select(RngStream& rng);
  // `losses` per component; only observed ones are read.
  void Update(const WeightedDigraph& graph, std::span<const double> losses,
              RngStream& rng);

  double rate() const { return rate_; }
  const std::vector<double>& cumulative_estimates() const { return l_hat_; }
  const std::vector<int>& last_decision() const { return decision_; }
  std::int64_t last_resampling_draws() const { return draws_; }

 private:
  void ComputeRate();

  std::shared_ptr<const DecisionSet> set_;
  FplConfig config_;
  std::vector<double> l_hat_;
  std::vector<int> decision_;
  double alpha_sum_ = 0.0;
  double rate_ = 0.0;
  std::int64_t draws_ = 0;
};

// FPL-IX over unit vectors, i.e. a plain N-armed policy.
class FplIxPolicy : public Policy {
 public:
  FplIxPolicy(int num_actions, FplConfig config);
  int num_actions() const override { return n_; }
  int Select(std::int64_t t, RngStream& rng) override;
  void Update(std::int64_t t, const Feedback& feedback,
              RngStream& rng) override;
  const FplIxLearner& learner() const { return learner_; }

 private:
  int n_;
  FplIxLearner learner_;
};

// Per-round observation systems.
using GraphSource = std::function<std::shared_ptr<const WeightedDigraph>(
    std::int64_t t, RngStream& rng)>;
GraphSource FixedGraph(WeightedDigraph g);
GraphSource ErdosRenyiGraphs(int n, double r);

// Loss table indexed [round][action], replayed cyclically.
using LossScript = std::vector<std::vector<double>>;

// Bernoulli losses drawn once from `seed`: action `best` has mean
// `best_mean`, the rest `mean`.
LossScript BernoulliLossScript(int N, std::int64_t T, double mean,
                               double best_mean, int best,
                               std::uint64_t seed);

// Adversarial side-observation environment. With `noise_R` > 0 (or `noisy`)
// the learner receives c_i for every node, else exact losses on the
// observed set.
class SideObservationEnvironment : public Environment {
 public:
  SideObservationEnvironment(std::shared_ptr<const LossScript> losses,
                             GraphSource graphs, double noise_R = 0.0,
                             bool noisy = false);

  int num_actions() const override { return n_; }
  Objective objective() const override { return Objective::kLoss; }
  void BeginRound(std::int64_t t, RngStream& rng) override;
  Feedback Respond(int action, RngStream& rng) override;
  std::span<const double> RoundValues() const override { return *row_; }

  const WeightedDigraph& graph() const { return *graph_; }
  const std::vector<double>& xi() const { return xi_; }

 private:
  std::shared_ptr<const LossScript> losses_;
  GraphSource graphs_;
  double noise_R_;
  bool noisy_;
  int n_;
  const std::vector<double>* row_ = nullptr;
  std::shared_ptr<const WeightedDigraph> graph_;
  std::vector<double> xi_;
};

// One scripted round: losses and a graph (inline, named, or ER).
struct ScriptRound {
  std::vector<double> losses;
  std::string graph_kind;  // "inline", "complete", "empty", "er"
  std::shared_ptr<const WeightedDigraph> graph;  // inline graphs
  double er_r = 0.0;
};

// Parses the adversary-script JSON (an array of rounds).
std::vector<ScriptRound> ParseAdversaryScript(const std::string& json_text);
std::vector<ScriptRound> LoadAdversaryScript(const std::string& path);

// Environment replaying a parsed adversary script cyclically.
std::unique_ptr<SideObservationEnvironment> MakeScriptedEnvironment(
    const std::vector<ScriptRound>& rounds, double noise_R = 0.0,
    bool noisy = false);

}  // namespace bandits

#endif  // BANDITS_SIDEOBS_H_
