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

#ifndef BANDITS_GRAPH_H_
#define BANDITS_GRAPH_H_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bandits/rng.h"

namespace bandits {

struct Arc {
  int src;
  int dst;
  double weight;
};

// Dense weighted graph on nodes 0..n-1 with weights in [0, 1]. Undirected
// graphs keep symmetric arc pairs.
class WeightedDigraph {
 public:
  WeightedDigraph(int n, bool directed);

  static WeightedDigraph Empty(int n, bool directed = true);
  // Every ordered pair of distinct nodes, no self-loops.
  static WeightedDigraph Complete(int n, double weight = 1.0,
                                  bool directed = true);

  int n() const { return n_; }
  bool directed() const { return directed_; }
  std::size_t num_arcs() const { return num_arcs_; }

  // Adds src→dst (and dst→src when undirected). Duplicates and weights
  // outside [0,1] are rejected.
  void AddArc(int src, int dst, double weight = 1.0);

  bool HasArc(int src, int dst) const { return w_[Index(src, dst)] >= 0.0; }
  // Weight of src→dst, 0 when absent.
  double Weight(int src, int dst) const {
    const double w = w_[Index(src, dst)];
    return w >= 0.0 ? w : 0.0;
  }
  std::vector<Arc> Arcs() const;

  // Unweighted graph keeping the arcs whose weight is at least eps.
  WeightedDigraph Threshold(double eps) const;

  void CheckNode(int i) const;

 private:
  std::size_t Index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j);
  }

  int n_;
  bool directed_;
  std::size_t num_arcs_ = 0;
  std::vector<double> w_;  // -1 marks a missing arc
};

struct LaplacianSpectrum {
  Eigen::VectorXd eigenvalues;  // ascending
  Eigen::MatrixXd vectors;      // column i pairs with eigenvalues(i)
};

// L = D − W. Rejects directed graphs.
Eigen::MatrixXd Laplacian(const WeightedDigraph& g);
LaplacianSpectrum Eigendecompose(const Eigen::MatrixXd& L);

struct IndependenceResult {
  int value = 0;
  bool exact = true;  // false: value is an upper bound
};

// Largest set of pairwise non-adjacent nodes, adjacency taken in either
// direction and self-loops ignored. Exact for n ≤ 24; above that a greedy
// clique-cover upper bound.
IndependenceResult IndependenceNumber(const WeightedDigraph& g);
constexpr int kExactIndependenceLimit = 24;

struct EffectiveIndependence {
  double alpha_star = 0.0;
  double epsilon = 1.0;
  bool exact = true;
};

// min over ε in {distinct positive weights} ∪ {1} of α(ε)/ε².
EffectiveIndependence EffectiveIndependenceNumber(const WeightedDigraph& g);

// Directed graph with each ordered pair i≠j present with probability r.
WeightedDigraph ErdosRenyi(int n, double r, RngStream& rng);

std::vector<int> OutNeighborhood(const WeightedDigraph& g, int i);
// Out-neighbors together with their out-neighbors.
std::vector<int> SecondNeighborhood(const WeightedDigraph& g, int i);

// Edge list: one `src dst weight` per line, 0-based ids, `#` comments. The
// node count is max id + 1 unless `n` is given.
WeightedDigraph ReadEdgeList(std::istream& in, bool directed, int n = -1);
WeightedDigraph ReadEdgeListFile(const std::string& path, bool directed,
                                 int n = -1);
void WriteEdgeList(std::ostream& out, const WeightedDigraph& g);

}  // namespace bandits

#endif  // BANDITS_GRAPH_H_
