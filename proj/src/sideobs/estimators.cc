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

#include "bandits/errors.h"
#include "bandits/sideobs.h"

namespace bandits {

double ObservationWeight(const WeightedDigraph& g, int j, int i) {
  if (i == j) return 1.0;
  double w = g.Weight(j, i);
  return w > 0.0 ? w : 0.0;
}

std::vector<int> ObservedSet(const WeightedDigraph& g, int chosen) {
  g.CheckNode(chosen);
  std::vector<int> out;
  for (int i = 0; i < g.n(); ++i) {
    if (i == chosen || g.HasArc(chosen, i)) out.push_back(i);
  }
  return out;
}

std::vector<double> ExpWeights(std::span<const double> cumulative_estimates,
                               double eta) {
  const std::size_t n = cumulative_estimates.size();
  if (n == 0) throw ConfigError("ExpWeights: no actions");
  std::vector<double> p(n);
  double top = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = -eta * cumulative_estimates[i];
    if (!std::isfinite(p[i])) throw NumericalError("ExpWeights: non-finite");
    top = std::max(top, p[i]);
  }
  double total = 0.0;
  for (double& v : p) {
    v = std::exp(v - top);
    total += v;
  }
  for (double& v : p) v /= total;
  return p;
}

std::vector<double> ObservationProbabilities(const WeightedDigraph& g,
                                             std::span<const double> p,
                                             double min_weight) {
  const int n = g.n();
  if (static_cast<int>(p.size()) != n) {
    throw ConfigError("ObservationProbabilities: size mismatch");
  }
  std::vector<double> o(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double s = ObservationWeight(g, j, i);
      if (s > 0.0 && s >= min_weight) o[i] += p[j];
    }
  }
  return o;
}

double SetEstimate(double loss, double o, bool observed) {
  if (!observed) return 0.0;
  if (!(o > 0.0)) {
    throw InvariantError("SetEstimate: observed with zero probability");
  }
  return loss / o;
}

double IxEstimate(double loss, double o, double gamma, bool observed) {
  if (gamma < 0.0) throw ConfigError("IxEstimate: gamma < 0");
  if (!observed) return 0.0;
  if (!(o + gamma > 0.0)) {
    throw InvariantError("IxEstimate: observed with zero probability");
  }
  return loss / (o + gamma);
}

namespace {

void CheckColumn(std::span<const double> p, std::span<const double> s) {
  if (p.size() != s.size()) throw ConfigError("estimate: size mismatch");
}

}  // namespace

double BasicEstimate(double c, std::span<const double> p,
                     std::span<const double> s_column, double gamma) {
  CheckColumn(p, s_column);
  if (gamma < 0.0) throw ConfigError("BasicEstimate: gamma < 0");
  double denom = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) denom += p[j] * s_column[j];
  denom += gamma;
  if (!(denom > 0.0)) throw NumericalError("BasicEstimate: zero denominator");
  return c / denom;
}

double IxtEstimate(double c, std::span<const double> p,
                   std::span<const double> s_column, double s_chosen,
                   double eps, double gamma) {
  CheckColumn(p, s_column);
  if (eps < 0.0 || eps > 1.0) throw ConfigError("IxtEstimate: eps range");
  if (s_chosen < eps) return 0.0;
  double denom = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (s_column[j] >= eps) denom += p[j] * s_column[j];
  }
  denom += gamma;
  if (!(denom > 0.0)) throw NumericalError("IxtEstimate: zero denominator");
  return c / denom;
}

double WixEstimate(double c, std::span<const double> p,
                   std::span<const double> s_column, double s_chosen,
                   double gamma) {
  CheckColumn(p, s_column);
  if (gamma < 0.0) throw ConfigError("WixEstimate: gamma < 0");
  // Binary weights must reproduce IxEstimate exactly.
  if (s_chosen == 0.0) return 0.0;
  double denom = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (s_column[j] > 0.0) denom += p[j] * (s_column[j] * s_column[j]);
  }
  denom += gamma;
  if (!(denom > 0.0)) throw NumericalError("WixEstimate: zero denominator");
  if (s_chosen == 1.0) return c / denom;
  return s_chosen * c / denom;
}

double GrixEstimate(std::int64_t K, bool observed, double loss) {
  if (K < 1) throw ConfigError("GrixEstimate: K < 1");
  return observed ? static_cast<double>(K) * loss : 0.0;
}

std::vector<double> NoisyFeedback(const WeightedDigraph& g,
                                  std::span<const double> losses,
                                  std::span<const double> xi, int chosen) {
  const int n = g.n();
  g.CheckNode(chosen);
  if (static_cast<int>(losses.size()) != n ||
      static_cast<int>(xi.size()) != n) {
    throw ConfigError("NoisyFeedback: size mismatch");
  }
  std::vector<double> c(n);
  for (int i = 0; i < n; ++i) {
    double s = ObservationWeight(g, chosen, i);
    c[i] = s * losses[i] + (1.0 - s) * xi[i];
  }
  return c;
}

double Exp3IxEta(int N, double second_moment) {
  return std::sqrt(std::log(static_cast<double>(N)) / (N + second_moment));
}

double WixEta(int N, double R, double second_moment) {
  return std::sqrt(std::log(static_cast<double>(N)) /
                   (2.0 * (1.0 + R + R * R) * (N + second_moment)));
}

double ResEta(int N, double second_moment) {
  return std::sqrt(std::log(static_cast<double>(N)) /
                   (static_cast<double>(N) * N + second_moment));
}

std::int64_t ResSurrogate(double p_i, std::span<const char> others, int N,
                          RngStream& rng) {
  if (N < 3) throw ConfigError("ResSurrogate: needs N >= 3");
  const int k_max = N - 2;
  if (static_cast<int>(others.size()) < k_max) {
    throw ConfigError("ResSurrogate: too few other arms");
  }
  std::vector<int> sigma(others.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  // Partial Fisher-Yates: only the first N-2 positions are used.
  for (int k = 0; k < k_max; ++k) {
    int pick = k + rng.UniformInt(static_cast<int>(sigma.size()) - k);
    std::swap(sigma[k], sigma[pick]);
    bool hit = rng.Bernoulli(p_i) || others[sigma[k]] != 0;
    if (hit) return k + 1;
  }
  return N - 1;
}

std::int64_t ResamplingCap(int N, double delta, double gamma) {
  if (!(gamma > 0.0)) return std::numeric_limits<std::int64_t>::max() / 2;
  double cap = std::ceil(std::log(N / delta) / gamma);
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(cap));
}

std::vector<std::int64_t> GeometricResampling(
    const std::function<std::vector<char>(RngStream&)>& sampler,
    std::span<const int> targets, double gamma, std::int64_t cap,
    RngStream& rng) {
  if (cap < 1) throw ConfigError("GeometricResampling: cap < 1");
  const std::size_t m = targets.size();
  std::vector<std::int64_t> K(m, 0);
  std::vector<std::int64_t> U(m);
  for (std::size_t a = 0; a < m; ++a) {
    U[a] = gamma > 0.0 ? std::min(rng.Geometric(gamma), cap) : cap;
  }
  std::size_t open = m;
  for (std::int64_t k = 1; open > 0; ++k) {
    std::vector<char> copy = sampler(rng);
    for (std::size_t a = 0; a < m; ++a) {
      if (K[a] != 0) continue;
      if (copy.at(targets[a]) != 0 || U[a] == k) {
        K[a] = k;
        --open;
      }
    }
  }
  return K;
}

bool ResAssumptionHolds(double r, std::int64_t T, int N) {
  if (N < 2) return true;
  return r >= std::log(static_cast<double>(T)) / (2.0 * N - 2.0);
}

}  // namespace bandits
