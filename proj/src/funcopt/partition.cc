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
#include <utility>

#include "bandits/errors.h"
#include "bandits/funcopt.h"

namespace bandits {

Point Box::Center() const {
  Point c(lo.size());
  for (size_t d = 0; d < lo.size(); ++d) c[d] = 0.5 * (lo[d] + hi[d]);
  return c;
}

double Box::Volume() const {
  double v = 1.0;
  for (size_t d = 0; d < lo.size(); ++d) v *= hi[d] - lo[d];
  return v;
}

bool Box::Contains(const Point& x) const {
  if (x.size() != lo.size()) return false;
  for (size_t d = 0; d < lo.size(); ++d) {
    if (x[d] < lo[d] || x[d] > hi[d]) return false;
  }
  return true;
}

Box UnitBox(int dim) {
  if (dim < 1) throw ConfigError("UnitBox: dimension must be positive");
  return Box{Point(dim, 0.0), Point(dim, 1.0)};
}

std::vector<Box> SplitBox(const Box& box, int K) {
  if (K < 2) throw ConfigError("SplitBox: arity must be at least 2");
  int axis = 0;
  for (int d = 1; d < box.dim(); ++d) {
    if (box.hi[d] - box.lo[d] > box.hi[axis] - box.lo[axis]) axis = d;
  }
  const double lo = box.lo[axis];
  const double width = box.hi[axis] - lo;
  std::vector<Box> parts(K, box);
  for (int c = 0; c < K; ++c) {
    // Shared endpoints are computed once so neighbors meet exactly.
    parts[c].lo[axis] = c == 0 ? lo : lo + width * c / K;
    parts[c].hi[axis] = c == K - 1 ? box.hi[axis] : lo + width * (c + 1) / K;
  }
  return parts;
}

PartitionTree::PartitionTree(Box domain, int K) : K_(K) {
  if (K < 2) throw ConfigError("PartitionTree: arity must be at least 2");
  if (domain.lo.size() != domain.hi.size() || domain.lo.empty()) {
    throw ConfigError("PartitionTree: malformed domain");
  }
  for (int d = 0; d < domain.dim(); ++d) {
    if (!(domain.lo[d] < domain.hi[d])) {
      throw ConfigError("PartitionTree: empty domain side");
    }
  }
  Cell root;
  root.box = std::move(domain);
  cells_.push_back(std::move(root));
}

int PartitionTree::Expand(int id) {
  if (!cells_.at(id).leaf()) throw InvariantError("Expand: not a leaf");
  std::vector<Box> parts = SplitBox(cells_[id].box, K_);
  const int first = size();
  const int depth = cells_[id].depth + 1;
  const std::int64_t index = cells_[id].index;
  for (int c = 0; c < K_; ++c) {
    Cell child;
    child.depth = depth;
    child.index = index * K_ + c;
    child.box = std::move(parts[c]);
    child.parent = id;
    cells_.push_back(std::move(child));
  }
  cells_[id].first_child = first;
  max_depth_ = std::max(max_depth_, depth);
  return first;
}

int PartitionTree::Child(int id, int c) const {
  const Cell& cell = cells_.at(id);
  if (cell.leaf() || c < 0 || c >= K_) {
    throw ConfigError("PartitionTree: no such child");
  }
  return cell.first_child + c;
}

std::vector<int> PartitionTree::Leaves() const {
  std::vector<int> out;
  for (int id = 0; id < size(); ++id) {
    if (cells_[id].leaf()) out.push_back(id);
  }
  return out;
}

void PartitionTree::Record(int id, double reward) {
  Cell& cell = cells_.at(id);
  ++cell.count;
  cell.sum += reward;
}

EvalBudget::EvalBudget(std::int64_t T) : T_(T) {
  if (T < 0) throw ConfigError("EvalBudget: negative budget");
}

double EvalBudget::Evaluate(const Evaluator& f, const Point& x) {
  if (exhausted()) throw InvariantError("EvalBudget: budget exhausted");
  ++consumed_;
  return f(x);
}

double DifficultFunction(double x) {
  const double u = std::abs(x - 0.5);
  if (u == 0.0) return 0.0;
  const double y = std::log2(u);
  const double frac = y - std::floor(y);
  const double s = frac <= 0.5 ? 1.0 : 0.0;
  return s * (std::sqrt(u) - u * u) - std::sqrt(u);
}

TestFunction LookupTestFunction(const std::string& name) {
  TestFunction tf;
  tf.name = name;
  tf.domain = UnitBox(1);
  if (name == "difficult") {
    tf.f = [](const Point& x) { return DifficultFunction(x[0]); };
    tf.f_star = 0.0;
    tf.x_star = {0.5};
  } else if (name == "abs") {
    tf.f = [](const Point& x) { return -std::abs(x[0] - 0.5); };
    tf.f_star = 0.0;
    tf.x_star = {0.5};
  } else if (name == "peak") {
    tf.f = [](const Point& x) { return 1.0 - std::abs(x[0] - 1.0 / 3.0); };
    tf.f_star = 1.0;
    tf.x_star = {1.0 / 3.0};
  } else if (name == "quadratic") {
    tf.f = [](const Point& x) {
      const double d = x[0] - 1.0 / 3.0;
      return 1.0 - d * d;
    };
    tf.f_star = 1.0;
    tf.x_star = {1.0 / 3.0};
  } else {
    throw ConfigError("unknown test function: " + name);
  }
  return tf;
}

std::vector<std::string> TestFunctionNames() {
  return {"abs", "difficult", "peak", "quadratic"};
}

Evaluator MakeNoisy(std::function<double(const Point&)> f, NoiseModel noise,
                    RngStream* rng) {
  if (!f) throw ConfigError("MakeNoisy: null function");
  switch (noise.kind) {
    case NoiseKind::kNone:
      return f;
    case NoiseKind::kUniform:
      if (!(noise.b >= 0.0)) throw ConfigError("MakeNoisy: b must be >= 0");
      if (rng == nullptr) throw ConfigError("MakeNoisy: missing stream");
      return [f = std::move(f), b = noise.b, rng](const Point& x) {
        return f(x) + rng->Uniform(-b, b);
      };
    case NoiseKind::kBernoulli:
      if (rng == nullptr) throw ConfigError("MakeNoisy: missing stream");
      return [f = std::move(f), rng](const Point& x) {
        const double p = f(x);
        if (p < 0.0 || p > 1.0) {
          throw ConfigError("Bernoulli noise needs f(x) in [0, 1]");
        }
        return rng->Bernoulli(p) ? 1.0 : 0.0;
      };
  }
  throw ConfigError("MakeNoisy: unknown noise kind");
}

void ValidateSmoothness(const SmoothnessParams& p) {
  if (!(p.nu > 0.0)) throw ConfigError("smoothness: nu must be > 0");
  if (!(p.rho > 0.0 && p.rho < 1.0)) {
    throw ConfigError("smoothness: rho must lie in (0, 1)");
  }
}

}  // namespace bandits
