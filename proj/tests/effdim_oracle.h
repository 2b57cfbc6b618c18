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

#ifndef BANDITS_TESTS_EFFDIM_ORACLE_H_
#define BANDITS_TESTS_EFFDIM_ORACLE_H_

// Brute-force effective dimensions shared by unit and acceptance tests.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace bandits::oracles {

// Exhaustive max of Σ log(1 + t_i/λ_i) over compositions of T.
inline double BruteDNew(const std::vector<double>& eig, int T,
                        double lambda) {
  const int n = static_cast<int>(eig.size());
  std::vector<int> t(n, 0);
  double best = -INFINITY;
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      t[i] = left;
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += std::log1p(t[k] / eig[k]);
      best = std::max(best, s);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      t[i] = a;
      rec(i + 1, left - a);
    }
  };
  rec(0, T);
  return best / std::log1p(T / lambda);
}

// Last k with (k − 1)λ_k ≤ T / log(1 + T/λ), by a full scan.
inline int BruteD(const std::vector<double>& eig, double T, double lambda) {
  int d = 0;
  for (int k = 1; k <= static_cast<int>(eig.size()); ++k) {
    if ((k - 1) * eig[k - 1] <= T / std::log(1 + T / lambda)) d = k;
  }
  return d;
}

}  // namespace bandits::oracles

#endif  // BANDITS_TESTS_EFFDIM_ORACLE_H_
