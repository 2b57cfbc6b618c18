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

#include "bandits/rng.h"

#include <cmath>
#include <limits>

#include "bandits/errors.h"

namespace bandits {
namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t Fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::uint64_t DeriveSeed(std::uint64_t seed, std::string_view label) {
  return SplitMix64(SplitMix64(seed) ^ Fnv1a(label));
}

RngStream::RngStream(std::uint64_t seed, std::string_view label)
    : seed_(seed), label_(label), engine_(DeriveSeed(seed, label)) {}

RngStream RngStream::Split(std::string_view child) const {
  std::string sub = label_;
  sub += '/';
  sub += child;
  return RngStream(seed_, sub);
}

double RngStream::Uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

int RngStream::UniformInt(int n) {
  if (n <= 0) throw ConfigError("UniformInt: n must be positive");
  int k = static_cast<int>(Uniform() * n);
  return k < n ? k : n - 1;
}

double RngStream::Exponential() { return -std::log1p(-Uniform()); }

std::int64_t RngStream::Geometric(double p) {
  if (p >= 1.0) return 1;
  constexpr auto kMax = std::numeric_limits<std::int64_t>::max() / 2;
  if (p <= 0.0) return kMax;
  const double u = Uniform();
  const double k = std::floor(std::log1p(-u) / std::log1p(-p));
  if (!(k < static_cast<double>(kMax))) return kMax;
  return 1 + static_cast<std::int64_t>(k);
}

int RngStream::Categorical(std::span<const double> probs) {
  const double u = Uniform();
  double cum = 0.0;
  int last_positive = -1;
  for (int i = 0; i < static_cast<int>(probs.size()); ++i) {
    if (probs[i] <= 0.0) continue;
    last_positive = i;
    cum += probs[i];
    if (u < cum) return i;
  }
  if (last_positive < 0) throw InvariantError("Categorical: no positive mass");
  return last_positive;
}

}  // namespace bandits
