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

// Seeded random instances for property suites. Built on std::mt19937_64
// with hand-rolled range reduction so that a seed names the same instance
// on every standard library.

#ifndef SECVNE_TESTS_SUPPORT_INSTANCES_H_
#define SECVNE_TESTS_SUPPORT_INSTANCES_H_

#include <cstdint>
#include <random>

#include "secvne/state.h"
#include "support/fixtures.h"

namespace secvne::testing {

struct InstanceLimits {
  int max_substrate_nodes = 8;
  int max_substrate_links = 12;
  int max_vnodes = 4;
  int max_vlinks = 5;
  // Probability that a virtual node or link asks for one backup.
  double rep_prob = 0.25;
  // Preload another tenant's request so avoidance and residuals matter.
  bool background = true;
};

struct Instance {
  SubstrateParts substrate_parts;
  RequestParts request_parts;
  SubstrateNetwork substrate;
  VnRequest request;
  SubstrateState state;

  // Rebuilds substrate and request from the parts, keeping the state.
  void Rebuild();
};

class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : engine_(seed) {}
  // Uniform on [lo, hi].
  int Int(int lo, int hi);
  double Real();
  bool Chance(double p) { return Real() < p; }

 private:
  std::mt19937_64 engine_;
};

Instance RandomInstance(std::uint64_t seed, const InstanceLimits& limits = {});

}  // namespace secvne::testing

#endif  // SECVNE_TESTS_SUPPORT_INSTANCES_H_
