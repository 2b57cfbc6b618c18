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

#ifndef BANDITS_TESTS_VERTEX_ORACLE_H_
#define BANDITS_TESTS_VERTEX_ORACLE_H_

#include <algorithm>
#include <numeric>
#include <vector>

#include "bandits/polymatroid.h"

namespace bandits::oracles {

// Vertices of B_M: one greedy basis per ordering of the ground set, built
// directly from prefix ranks without calling Greedy. Duplicates removed.
inline std::vector<Basis> EnumerateVertices(const Polymatroid& M) {
  const int L = M.size();
  std::vector<int> order(L);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Basis> out;
  do {
    Basis x(L, 0.0);
    Subset prefix(L, false);
    double prev = 0.0;
    for (int e : order) {
      prefix[e] = true;
      double cur = M(prefix);
      x[e] = cur - prev;
      prev = cur;
    }
    out.push_back(x);
  } while (std::next_permutation(order.begin(), order.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace bandits::oracles

#endif  // BANDITS_TESTS_VERTEX_ORACLE_H_
