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

#include "bandits/polymatroid.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "bandits/errors.h"

namespace bandits {

namespace {

constexpr double kRankTol = 1e-12;

Subset MaskToSubset(std::uint32_t mask, int L) {
  Subset X(L);
  for (int e = 0; e < L; ++e) X[e] = (mask >> e) & 1u;
  return X;
}

}  // namespace

Polymatroid::Polymatroid(int L, Rank f, std::string name, bool verify,
                         bool unit_gains)
    : L_(L), f_(std::move(f)), name_(std::move(name)), unit_gains_(unit_gains) {
  if (L < 1) throw ConfigError("Polymatroid: empty ground set");
  if (!f_) throw ConfigError("Polymatroid: null rank oracle");
  rank_ = f_(Subset(L, true));
  if (verify) Verify();
}

double Polymatroid::operator()(const Subset& X) const {
  if (static_cast<int>(X.size()) != L_) {
    throw ConfigError("Polymatroid: subset size mismatch");
  }
  return f_(X);
}

void Polymatroid::Verify() const {
  if (L_ > kMaxVerifySize) {
    throw ConfigError("Polymatroid::Verify: ground set larger than 12");
  }
  const std::uint32_t n = 1u << L_;
  std::vector<double> f(n);
  for (std::uint32_t m = 0; m < n; ++m) f[m] = f_(MaskToSubset(m, L_));
  if (std::abs(f[0]) > kRankTol) throw ConfigError(name_ + ": f(empty) != 0");
  for (std::uint32_t m = 0; m < n; ++m) {
    for (int e = 0; e < L_; ++e) {
      const std::uint32_t be = 1u << e;
      if (m & be) continue;
      const double gain = f[m | be] - f[m];
      if (gain < -kRankTol) throw ConfigError(name_ + ": not monotone");
      if (unit_gains_ && gain > 1.0 + kRankTol) {
        throw ConfigError(name_ + ": gain above 1");
      }
      for (int g = e + 1; g < L_; ++g) {
        const std::uint32_t bg = 1u << g;
        if (m & bg) continue;
        if (f[m | be | bg] - f[m | bg] > gain + kRankTol) {
          throw ConfigError(name_ + ": not submodular");
        }
      }
    }
  }
}

double FlowRank(const Subset& X, int L, double K) {
  if (static_cast<int>(X.size()) != L) throw ConfigError("FlowRank: size");
  double total = 0.0;
  for (int i = 0; i + 1 < L; i += 2) {
    total += std::min(static_cast<double>(X[i]) + X[i + 1], 1.5);
  }
  return std::min(total, K);
}

Polymatroid FlowPolymatroid(int L, double K, bool verify) {
  if (L < 2 || L % 2 != 0) throw ConfigError("flow: L must be even");
  const double units = K / 1.5;
  if (!(K > 0.0) || std::abs(units - std::round(units)) > 1e-12) {
    throw ConfigError("flow: K must be a positive multiple of 3/2");
  }
  if (K > 0.75 * L + 1e-12) throw ConfigError("flow: K exceeds 3L/4");
  return Polymatroid(
      L, [L, K](const Subset& X) { return FlowRank(X, L, K); }, "flow",
      verify);
}

std::vector<double> FlowWeights(int L, double K, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ConfigError("flow weights: delta must lie in (0,1)");
  }
  const int cheap = static_cast<int>(std::floor(4.0 * K / 3.0 + 1e-12));
  std::vector<double> w(L);
  for (int e = 0; e < L; ++e) {
    w[e] = e < cheap ? 0.5 - delta / 2.0 : 0.5 + delta / 2.0;
  }
  return w;
}

Polymatroid CoveragePolymatroid(std::vector<std::vector<int>> topics,
                                bool verify) {
  const int L = static_cast<int>(topics.size());
  int num_topics = 0;
  for (const auto& t : topics) {
    if (t.empty()) throw ConfigError("coverage: item with no topic");
    for (int k : t) {
      if (k < 0) throw ConfigError("coverage: negative topic id");
      num_topics = std::max(num_topics, k + 1);
    }
  }
  auto shared = std::make_shared<const std::vector<std::vector<int>>>(
      std::move(topics));
  return Polymatroid(
      L,
      [shared, num_topics](const Subset& X) {
        std::vector<bool> covered(num_topics, false);
        int count = 0;
        for (std::size_t e = 0; e < X.size(); ++e) {
          if (!X[e]) continue;
          for (int k : (*shared)[e]) {
            if (!covered[k]) {
              covered[k] = true;
              ++count;
            }
          }
        }
        return static_cast<double>(count);
      },
      "coverage", verify, /*unit_gains=*/false);
}

Polymatroid MovieCoverage() {
  return CoveragePolymatroid({{0}, {1}, {0, 1}});
}

std::vector<double> MoviePopularity() { return {0.8, 0.5, 0.6}; }

Polymatroid PartitionMatroid(std::vector<int> block_of_item,
                             std::vector<int> capacities, bool verify) {
  const int L = static_cast<int>(block_of_item.size());
  for (int b : block_of_item) {
    if (b < 0 || b >= static_cast<int>(capacities.size())) {
      throw ConfigError("partition: block id out of range");
    }
  }
  for (int c : capacities) {
    if (c < 0) throw ConfigError("partition: negative capacity");
  }
  return Polymatroid(
      L,
      [block_of_item, capacities](const Subset& X) {
        std::vector<int> used(capacities.size(), 0);
        for (std::size_t e = 0; e < X.size(); ++e) {
          if (X[e]) ++used[block_of_item[e]];
        }
        double total = 0.0;
        for (std::size_t b = 0; b < used.size(); ++b) {
          total += std::min(used[b], capacities[b]);
        }
        return total;
      },
      "partition", verify);
}

Polymatroid CardinalityMatroid(int L, int K, bool verify) {
  if (K < 0) throw ConfigError("cardinality: K < 0");
  return Polymatroid(
      L,
      [K](const Subset& X) {
        return static_cast<double>(
            std::min<long>(std::count(X.begin(), X.end(), true), K));
      },
      "cardinality", verify);
}

Basis Greedy(const Polymatroid& M, const std::vector<double>& w) {
  const int L = M.size();
  if (static_cast<int>(w.size()) != L) throw ConfigError("Greedy: size");
  for (double v : w) {
    if (!(v >= 0.0)) throw ConfigError("Greedy: weights must be >= 0");
  }
  std::vector<int> order(L);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return w[a] > w[b]; });
  Basis x(L, 0.0);
  Subset prefix(L, false);
  double prev = 0.0;
  for (int e : order) {
    prefix[e] = true;
    const double cur = M(prefix);
    x[e] = cur - prev;
    prev = cur;
  }
  return x;
}

Basis MinimumBasis(const Polymatroid& M, const std::vector<double>& w) {
  if (w.empty()) throw ConfigError("MinimumBasis: empty weights");
  const double top = *std::max_element(w.begin(), w.end());
  std::vector<double> flipped(w.size());
  for (std::size_t e = 0; e < w.size(); ++e) flipped[e] = top - w[e];
  return Greedy(M, flipped);
}

bool InBasePolyhedron(const Polymatroid& M, const Basis& x, double tol) {
  const int L = M.size();
  if (L > 20) throw ConfigError("InBasePolyhedron: ground set too large");
  if (static_cast<int>(x.size()) != L) return false;
  double sum = 0.0;
  for (double v : x) {
    if (v < -tol) return false;
    sum += v;
  }
  if (std::abs(sum - M.rank()) > tol) return false;
  for (std::uint32_t m = 1; m < (1u << L); ++m) {
    double s = 0.0;
    for (int e = 0; e < L; ++e) {
      if ((m >> e) & 1u) s += x[e];
    }
    if (s > M(MaskToSubset(m, L)) + tol) return false;
  }
  return true;
}

double Dot(const std::vector<double>& w, const Basis& x) {
  if (w.size() != x.size()) throw ConfigError("Dot: size mismatch");
  double s = 0.0;
  for (std::size_t e = 0; e < w.size(); ++e) s += w[e] * x[e];
  return s;
}

OpmLearner::OpmLearner(const Polymatroid& M, OpmConfig config)
    : M_(M),
      config_(config),
      means_(M.size(), 0.0),
      counts_(M.size(), 0) {}

void OpmLearner::Initialize(const std::vector<double>& w0) {
  if (static_cast<int>(w0.size()) != M_.size()) {
    throw ConfigError("OpmLearner: init size");
  }
  means_ = w0;
  std::fill(counts_.begin(), counts_.end(), 1);
  initialized_ = true;
}

double OpmLearner::Radius(std::int64_t t, std::int64_t s) {
  if (s < 1) throw ConfigError("OpmLearner::Radius: s < 1");
  if (t <= 1) return 0.0;
  return std::sqrt(2.0 * std::log(static_cast<double>(t)) / s);
}

Basis OpmLearner::Select(std::int64_t t) const {
  const int L = M_.size();
  if (config_.episode_init && t <= L) {
    std::vector<double> w(L);
    for (int e = 0; e < L; ++e) w[e] = L - e;
    w[t - 1] = L + 1.0;
    return Greedy(M_, w);
  }
  if (!config_.episode_init && !initialized_) {
    throw InvariantError("OpmLearner: not initialized");
  }
  std::vector<double> U(L);
  for (int e = 0; e < L; ++e) {
    if (counts_[e] < 1) throw InvariantError("OpmLearner: unobserved item");
    U[e] = means_[e] + Radius(t - 1, counts_[e]);
  }
  return Greedy(M_, U);
}

void OpmLearner::Observe(const Basis& x, const std::vector<double>& w) {
  for (int e = 0; e < M_.size(); ++e) {
    if (!(x[e] > 0.0)) continue;
    means_[e] = (counts_[e] * means_[e] + w[e]) / (counts_[e] + 1);
    ++counts_[e];
  }
}

RegretTrace RunOpm(const Polymatroid& M, const std::vector<double>& means,
                   bool minimize, std::int64_t T, const RngStream& rng,
                   OpmConfig config) {
  const int L = M.size();
  if (static_cast<int>(means.size()) != L) throw ConfigError("RunOpm: means");
  ValidateLosses(means);
  if (L > 31) throw ConfigError("RunOpm: ground set too large for traces");
  std::vector<double> reward_means(L);
  for (int e = 0; e < L; ++e) {
    reward_means[e] = minimize ? 1.0 - means[e] : means[e];
  }
  const double best = Dot(reward_means, Greedy(M, reward_means));
  RngStream env = rng.Split("env");
  auto draw = [&] {
    std::vector<double> w(L);
    for (int e = 0; e < L; ++e) w[e] = env.Bernoulli(means[e]) ? 1.0 : 0.0;
    return w;
  };
  auto to_reward = [&](std::vector<double> w) {
    if (minimize) {
      for (double& v : w) v = 1.0 - v;
    }
    return w;
  };

  OpmLearner learner(M, config);
  if (!config.episode_init) learner.Initialize(to_reward(draw()));

  RegretTrace trace;
  trace.objective = minimize ? Objective::kLoss : Objective::kReward;
  trace.comparator = Comparator::kBestMean;
  trace.rounds.reserve(static_cast<std::size_t>(T));
  double regret = 0.0;
  for (std::int64_t t = 1; t <= T; ++t) {
    const Basis x = learner.Select(t);
    const std::vector<double> w = draw();
    learner.Observe(x, to_reward(w));
    const double gap = best - Dot(reward_means, x);
    if (gap < -1e-9) throw InvariantError("RunOpm: basis beats the optimum");
    regret += std::max(gap, 0.0);
    int support = 0;
    for (int e = 0; e < L; ++e) {
      if (x[e] > 0.0) support |= 1 << e;
    }
    trace.rounds.push_back({t, support, Dot(w, x), regret});
  }
  return trace;
}

PolymatroidInstance ParsePolymatroidInstance(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "flow") {
      const int L = doc.at("L").get<int>();
      const double K = doc.at("K").get<double>();
      const double delta = doc.value("delta", 0.3);
      return {FlowPolymatroid(L, K), FlowWeights(L, K, delta), true};
    }
    std::vector<double> means;
    if (doc.contains("means")) {
      means = doc.at("means").get<std::vector<double>>();
    }
    const bool minimize = doc.value("minimize", false);
    auto finish = [&](Polymatroid M) {
      if (means.empty()) means.assign(M.size(), 0.5);
      if (static_cast<int>(means.size()) != M.size()) {
        throw ConfigError("polymatroid instance: means size mismatch");
      }
      return PolymatroidInstance{std::move(M), means, minimize};
    };
    if (kind == "coverage") {
      return finish(CoveragePolymatroid(
          doc.at("topics").get<std::vector<std::vector<int>>>()));
    }
    if (kind == "partition") {
      return finish(
          PartitionMatroid(doc.at("blocks").get<std::vector<int>>(),
                           doc.at("capacities").get<std::vector<int>>()));
    }
    if (kind == "cardinality") {
      return finish(
          CardinalityMatroid(doc.at("L").get<int>(), doc.at("K").get<int>()));
    }
    throw ConfigError("polymatroid instance: unknown kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("polymatroid instance: ") + e.what());
  }
}

PolymatroidInstance LoadPolymatroidInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open polymatroid instance " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return ParsePolymatroidInstance(buf.str());
}

}  // namespace bandits
