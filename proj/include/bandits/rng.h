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

#ifndef BANDITS_RNG_H_
#define BANDITS_RNG_H_

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>

namespace bandits {

// Seeded random stream identified by (seed, label). Two streams built from
// the same pair produce the same draws; Split() derives an independent child
// stream so that components never share a generator.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::string_view label);

  RngStream Split(std::string_view child) const;

  std::uint64_t seed() const { return seed_; }
  const std::string& label() const { return label_; }

  std::uint64_t NextU64() { return engine_(); }
  // Uniform on [0, 1) with 53 random bits.
  double Uniform();
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }
  // Uniform integer in [0, n).
  int UniformInt(int n);
  bool Bernoulli(double p) { return Uniform() < p; }
  // Unit-mean exponential.
  double Exponential();
  // Number of trials up to and including the first success; support {1,...}.
  // p = 0 yields the largest representable count.
  std::int64_t Geometric(double p);
  double Normal() { return normal_(engine_); }
  // Draws an index from a validated distribution. Exact boundary hits go to
  // the lower index.
  int Categorical(std::span<const double> probs);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::uint64_t seed_;
  std::string label_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

// Stable 64-bit mixing of a seed and a label.
std::uint64_t DeriveSeed(std::uint64_t seed, std::string_view label);

}  // namespace bandits

#endif  // BANDITS_RNG_H_
