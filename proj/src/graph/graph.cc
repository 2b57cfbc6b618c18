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

#include "bandits/graph.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "bandits/errors.h"

namespace bandits {

WeightedDigraph::WeightedDigraph(int n, bool directed)
    : n_(n),
      directed_(directed),
      w_(static_cast<std::size_t>(std::max(n, 0)) * std::max(n, 0), -1.0) {
  if (n < 0) throw ConfigError("negative node count");
}

WeightedDigraph WeightedDigraph::Empty(int n, bool directed) {
  return WeightedDigraph(n, directed);
}

WeightedDigraph WeightedDigraph::Complete(int n, double weight,
                                          bool directed) {
  WeightedDigraph g(n, directed);
  for (int i = 0; i < n; ++i) {
    for (int j = directed ? 0 : i + 1; j < n; ++j) {
      if (i != j) g.AddArc(i, j, weight);
    }
  }
  return g;
}

void WeightedDigraph::CheckNode(int i) const {
  if (i < 0 || i >= n_) {
    std::ostringstream msg;
    msg << "node " << i << " outside [0, " << n_ << ")";
    throw ConfigError(msg.str());
  }
}

void WeightedDigraph::AddArc(int src, int dst, double weight) {
  CheckNode(src);
  CheckNode(dst);
  if (!(weight >= 0.0 && weight <= 1.0)) {
    throw ConfigError("arc weight outside [0,1]");
  }
  if (HasArc(src, dst)) {
    std::ostringstream msg;
    msg << "duplicate arc " << src << "->" << dst;
    throw ConfigError(msg.str());
  }
  w_[Index(src, dst)] = weight;
  ++num_arcs_;
  if (!directed_ && src != dst) {
    w_[Index(dst, src)] = weight;
    ++num_arcs_;
  }
}

std::vector<Arc> WeightedDigraph::Arcs() const {
  std::vector<Arc> arcs;
  arcs.reserve(num_arcs_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (HasArc(i, j)) arcs.push_back({i, j, w_[Index(i, j)]});
    }
  }
  return arcs;
}

WeightedDigraph WeightedDigraph::Threshold(double eps) const {
  WeightedDigraph g(n_, true);
  g.directed_ = directed_;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      const double w = w_[Index(i, j)];
      if (w >= 0.0 && w >= eps) {
        g.w_[Index(i, j)] = 1.0;
        ++g.num_arcs_;
      }
    }
  }
  return g;
}

Eigen::MatrixXd Laplacian(const WeightedDigraph& g) {
  if (g.directed()) throw ConfigError("Laplacian needs an undirected graph");
  const int n = g.n();
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double w = g.Weight(i, j);
      L(i, j) = -w;
      L(i, i) += w;
    }
  }
  return L;
}

LaplacianSpectrum Eigendecompose(const Eigen::MatrixXd& L) {
  if (L.rows() != L.cols()) throw ConfigError("matrix is not square");
  const double scale = std::max(1.0, L.cwiseAbs().maxCoeff());
  if ((L - L.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw ConfigError("matrix is not symmetric");
  }
  LaplacianSpectrum out;
  const auto n = L.rows();
  if (L.isZero(0.0)) {
    out.eigenvalues = Eigen::VectorXd::Zero(n);
    out.vectors = Eigen::MatrixXd::Identity(n, n);
    return out;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(L);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigensolver did not converge");
  }
  out.eigenvalues = solver.eigenvalues();  // ascending
  out.vectors = solver.eigenvectors();
  return out;
}

namespace {

// Undirected adjacency masks, self-loops dropped.
std::vector<std::uint32_t> AdjacencyMasks(const WeightedDigraph& g) {
  const int n = g.n();
  std::vector<std::uint32_t> adj(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && (g.HasArc(i, j) || g.HasArc(j, i))) {
        adj[i] |= std::uint32_t{1} << j;
      }
    }
  }
  return adj;
}

int MaxIndependent(std::uint32_t p, const std::vector<std::uint32_t>& adj) {
  if (p == 0) return 0;
  int pivot = -1;
  int pivot_degree = -1;
  for (std::uint32_t rest = p; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    const int d = std::popcount(adj[v] & p);
    if (d <= 1) {
      // A vertex of degree ≤ 1 can always be taken.
      const std::uint32_t bit = std::uint32_t{1} << v;
      return 1 + MaxIndependent(p & ~bit & ~adj[v], adj);
    }
    if (d > pivot_degree) {
      pivot_degree = d;
      pivot = v;
    }
  }
  const std::uint32_t bit = std::uint32_t{1} << pivot;
  const int without = MaxIndependent(p & ~bit, adj);
  const int with = 1 + MaxIndependent(p & ~bit & ~adj[pivot], adj);
  return std::max(without, with);
}

bool Adjacent(const WeightedDigraph& g, int i, int j) {
  return g.HasArc(i, j) || g.HasArc(j, i);
}

}  // namespace

IndependenceResult IndependenceNumber(const WeightedDigraph& g) {
  const int n = g.n();
  if (n <= kExactIndependenceLimit) {
    const auto adj = AdjacencyMasks(g);
    const std::uint32_t all =
        n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    return {MaxIndependent(all, adj), true};
  }
  // Greedy clique cover: an independent set meets each clique at most once.
  std::vector<std::vector<int>> cliques;
  for (int v = 0; v < n; ++v) {
    bool placed = false;
    for (auto& c : cliques) {
      if (std::all_of(c.begin(), c.end(),
                      [&](int u) { return Adjacent(g, u, v); })) {
        c.push_back(v);
        placed = true;
        break;
      }
    }
    if (!placed) cliques.push_back({v});
  }
  return {static_cast<int>(cliques.size()), false};
}

EffectiveIndependence EffectiveIndependenceNumber(const WeightedDigraph& g) {
  std::set<double> candidates = {1.0};
  for (const Arc& a : g.Arcs()) {
    if (a.weight > 0.0) candidates.insert(a.weight);
  }
  EffectiveIndependence best;
  best.alpha_star = INFINITY;
  for (double eps : candidates) {
    const IndependenceResult r = IndependenceNumber(g.Threshold(eps));
    const double value = r.value / (eps * eps);
    if (value < best.alpha_star) {
      best.alpha_star = value;
      best.epsilon = eps;
      best.exact = r.exact;
    }
  }
  return best;
}

WeightedDigraph ErdosRenyi(int n, double r, RngStream& rng) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw ConfigError("ER probability outside [0,1]");
  }
  WeightedDigraph g(n, true);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && rng.Uniform() < r) g.AddArc(i, j, 1.0);
    }
  }
  return g;
}

std::vector<int> OutNeighborhood(const WeightedDigraph& g, int i) {
  g.CheckNode(i);
  std::vector<int> out;
  for (int j = 0; j < g.n(); ++j) {
    if (g.HasArc(i, j)) out.push_back(j);
  }
  return out;
}

std::vector<int> SecondNeighborhood(const WeightedDigraph& g, int i) {
  g.CheckNode(i);
  std::vector<char> mark(g.n(), 0);
  for (int j : OutNeighborhood(g, i)) {
    mark[j] = 1;
    for (int k = 0; k < g.n(); ++k) {
      if (g.HasArc(j, k)) mark[k] = 1;
    }
  }
  std::vector<int> out;
  for (int k = 0; k < g.n(); ++k) {
    if (mark[k]) out.push_back(k);
  }
  return out;
}

WeightedDigraph ReadEdgeList(std::istream& in, bool directed, int n) {
  std::vector<Arc> arcs;
  int max_id = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    Arc a{};
    if (!(fields >> a.src)) continue;  // blank line
    if (!(fields >> a.dst >> a.weight)) {
      std::ostringstream msg;
      msg << "edge list line " << line_no << ": expected `src dst weight`";
      throw ConfigError(msg.str());
    }
    std::string extra;
    if (fields >> extra) {
      std::ostringstream msg;
      msg << "edge list line " << line_no << ": trailing field `" << extra
          << "`";
      throw ConfigError(msg.str());
    }
    if (a.src < 0 || a.dst < 0) {
      std::ostringstream msg;
      msg << "edge list line " << line_no << ": negative node id";
      throw ConfigError(msg.str());
    }
    max_id = std::max({max_id, a.src, a.dst});
    arcs.push_back(a);
  }
  if (n < 0) n = max_id + 1;
  WeightedDigraph g(n, directed);
  for (const Arc& a : arcs) g.AddArc(a.src, a.dst, a.weight);
  return g;
}

WeightedDigraph ReadEdgeListFile(const std::string& path, bool directed,
                                 int n) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open edge list " + path);
  return ReadEdgeList(in, directed, n);
}

void WriteEdgeList(std::ostream& out, const WeightedDigraph& g) {
  out << "# nodes " << g.n() << (g.directed() ? " directed" : " undirected")
      << "\n";
  out.precision(17);
  for (const Arc& a : g.Arcs()) {
    if (!g.directed() && a.dst < a.src) continue;
    out << a.src << ' ' << a.dst << ' ' << a.weight << '\n';
  }
}

}  // namespace bandits
