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

// Portable random streams. Every draw sequence is fully specified so that
// generated instances and workloads can be reproduced in other languages.

#ifndef SECVNE_RNG_H_
#define SECVNE_RNG_H_

#include <cstdint>
#include <span>

namespace secvne {

// One step of the splitmix64 generator started from state x.
std::uint64_t splitmix64(std::uint64_t x);

// PCG-XSH-RR 64/32 with the reference seeding procedure.
class Pcg32 {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;

  Pcg32(std::uint64_t init_state, std::uint64_t stream);

  // Substream `tag` of `seed`: Pcg32(splitmix64(seed ^ tag), tag).
  static Pcg32 Substream(std::uint64_t seed, std::uint64_t tag);

  std::uint32_t next();
  // Two consecutive outputs, high word first.
  std::uint64_t next64();
  // output / 2^32, in [0, 1).
  double uniform();
  // lo + floor(uniform() * (hi - lo + 1)); requires lo <= hi.
  int uniform_int(int lo, int hi);
  bool bernoulli(double p) { return uniform() < p; }
  // -ln(1 - uniform()) / rate.
  double exponential(double rate);
  // Index drawn with probability proportional to weights (all >= 0, sum > 0).
  int weighted(std::span<const double> weights);

 private:
  std::uint64_t state_ = 0;
  std::uint64_t inc_ = 0;
};

}  // namespace secvne

#endif  // SECVNE_RNG_H_
