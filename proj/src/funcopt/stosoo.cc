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

#include "bandits/errors.h"
#include "bandits/funcopt.h"

namespace bandits {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

double StoSooBValueFromLog(double mean, double log_term, std::int64_t n) {
  if (n < 0) throw ConfigError("StoSOO: negative pull count");
  if (n == 0) return kInf;
  return mean + std::sqrt(log_term / (2.0 * n));
}

double StoSooBValue(double mean, std::int64_t T, double k, double delta,
                    std::int64_t n) {
  if (!(delta > 0.0)) throw ConfigError("StoSOO: delta must be > 0");
  return StoSooBValueFromLog(mean, std::log(T * k / delta), n);
}

StoSooParams ResolveStoSoo(std::int64_t T, const StoSooConfig& config) {
  if (T < 2) throw ConfigError("StoSOO: T must be >= 2");
  const double t = static_cast<double>(T);
  StoSooParams p;
  if (config.k > 0.0) {
    p.k = static_cast<std::int64_t>(config.k);
  } else {
    const double l = std::log(t);
    p.k = static_cast<std::int64_t>(std::floor(t / (l * l * l)));
  }
  p.k = std::max<std::int64_t>(p.k, 1);
  p.delta = config.delta > 0.0 ? config.delta : 1.0 / std::sqrt(t);
  p.h_max = config.h_max > 0
                ? config.h_max
                : static_cast<int>(std::floor(std::sqrt(t / p.k)));
  return p;
}

StoSooTrace RunStoSoo(const Evaluator& f, const Box& domain, int K,
                      std::int64_t T, const StoSooConfig& config) {
  StoSooTrace trace;
  trace.params = ResolveStoSoo(T, config);
  if (T < K) throw ConfigError("StoSOO: T must be at least the arity");
  const StoSooParams& p = trace.params;
  const double log_term =
      std::log(static_cast<double>(T) * p.k / p.delta);
  trace.tree = PartitionTree(domain, K);
  PartitionTree& tree = trace.tree;
  EvalBudget budget(T);

  auto evaluate = [&](int id) {
    const Point x = tree.Representative(id);
    const double r = budget.Evaluate(f, x);
    tree.Record(id, r);
    trace.result.evaluated.push_back(x);
    trace.result.rewards.push_back(r);
  };

  while (!budget.exhausted()) {
    double v_max = -kInf;
    bool evaluated = false;
    std::vector<int> expanded;
    const int top = std::min(tree.max_depth(), p.h_max);
    for (int h = 0; h <= top && !budget.exhausted(); ++h) {
      int best = -1;
      double best_b = -kInf;
      for (int id = 0; id < tree.size(); ++id) {
        const Cell& c = tree.cell(id);
        if (!c.leaf() || c.depth != h) continue;
        const double b = StoSooBValueFromLog(c.mean(), log_term, c.count);
        if (best < 0 || b > best_b) {
          best = id;
          best_b = b;
        }
      }
      if (best < 0) continue;
      if (tree.cell(best).count < p.k) {
        evaluate(best);
        evaluated = true;
      } else if (h < p.h_max && best_b >= v_max) {
        tree.Expand(best);
        expanded.push_back(h);
        v_max = best_b;
      }
    }
    trace.sweep_expansions.push_back(std::move(expanded));
    if (!evaluated && trace.sweep_expansions.back().empty() &&
        !budget.exhausted()) {
      // Every reachable leaf is saturated at h_max: keep sampling the most
      // promising one.
      int best = -1;
      double best_b = -kInf;
      for (int id : tree.Leaves()) {
        const Cell& c = tree.cell(id);
        const double b = StoSooBValueFromLog(c.mean(), log_term, c.count);
        if (best < 0 || b > best_b) {
          best = id;
          best_b = b;
        }
      }
      evaluate(best);
    }
  }

  const double threshold = 0.5 * static_cast<double>(p.k);
  int rec = -1;
  for (int id = 0; id < tree.size(); ++id) {
    const Cell& c = tree.cell(id);
    if (c.count == 0 || c.count < threshold) continue;
    if (rec < 0 || c.mean() > tree.cell(rec).mean() ||
        (c.mean() == tree.cell(rec).mean() &&
         c.depth > tree.cell(rec).depth)) {
      rec = id;
    }
  }
  if (rec < 0) rec = 0;
  trace.result.recommendation = tree.Representative(rec);
  return trace;
}

}  // namespace bandits
