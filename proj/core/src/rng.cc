// Copyright 2026 The secvne Authors.
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

#include "secvne/rng.h"

#include <cmath>

#include "secvne/types.h"

namespace secvne {

std::uint64_t splitmix64(std::uint64_t x) {
  std::uint64_t z = x + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Pcg32::Pcg32(std::uint64_t init_state, std::uint64_t stream) : inc_((stream << 1u) | 1u) {
  next();
  state_ += init_state;
  next();
}

Pcg32 Pcg32::Substream(std::uint64_t seed, std::uint64_t tag) {
  return Pcg32(splitmix64(seed ^ tag), tag);
}

std::uint32_t Pcg32::next() {
  const std::uint64_t old = state_;
  state_ = old * kMultiplier + inc_;
  const auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
  const auto rot = static_cast<std::uint32_t>(old >> 59u);
  return (xorshifted >> rot) | (xorshifted << ((-rot) & 31u));
}

std::uint64_t Pcg32::next64() {
  const std::uint64_t hi = next();
  return (hi << 32u) | next();
}

double Pcg32::uniform() { return next() / 4294967296.0; }

int Pcg32::uniform_int(int lo, int hi) {
  if (lo > hi) throw InvalidInput("empty integer range");
  const double span = static_cast<double>(hi) - lo + 1.0;
  return lo + static_cast<int>(std::floor(uniform() * span));
}

double Pcg32::exponential(double rate) {
  if (!(rate > 0.0)) throw InvalidInput("exponential rate must be positive");
  return -std::log(1.0 - uniform()) / rate;
}

int Pcg32::weighted(std::span<const double> weights) {
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw InvalidInput("weights must be non-negative");
    total += w;
  }
  if (!(total > 0.0)) throw InvalidInput("weights must not all be zero");
  const double target = uniform() * total;
  double acc = 0.0;
  int last = 0;
  for (int k = 0; k < static_cast<int>(weights.size()); ++k) {
    if (weights[k] <= 0.0) continue;
    acc += weights[k];
    last = k;
    if (target < acc) return k;
  }
  return last;
}

}  // namespace secvne
