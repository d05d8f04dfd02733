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

// Seeded random substrates and requests.
//
// Draw order (one Pcg32 substream per call, seeded by `seed`):
//   substrate: per node u: x, y, cpu, sec, trust_req;
//              per pair u < v: link coin, then bw and sec if present.
//   request:   node count; per node: cpu, sec_dem, trust, sensitive, rep;
//              per pair i < j: link coin, then bw, sec_dem, rep if present;
//              per pair i < j: conflict coin.
// Capacities and demands are drawn as integers so that every sum the
// engines compute is exact.

#ifndef SECVNE_GENERATE_H_
#define SECVNE_GENERATE_H_

#include <array>
#include <cstdint>
#include <string>

#include "secvne/types.h"

namespace secvne {

struct IntRange {
  int lo = 0;
  int hi = 0;
};

enum class TopologyKind { kWaxman, kGnp };

struct Topology {
  TopologyKind kind = TopologyKind::kWaxman;
  double waxman_alpha = 0.5;
  double waxman_beta = 0.2;
  double gnp_p = 0.5;
};

enum class CostRule {
  // unit cost = 1 + sec
  kOnePlusSec,
  // unit cost = 1
  kUnit,
};

struct GenSubstrateConfig {
  int n_nodes = 10;
  int n_clouds = 2;
  double private_fraction = 0.5;
  Topology topology;
  IntRange cpu{50, 100};
  IntRange bw{50, 100};
  IntRange sec{0, 3};
  IntRange trust_req{0, 1};
  CostRule cost_rule = CostRule::kOnePlusSec;
};

struct GenRequestConfig {
  IntRange n_nodes{2, 5};
  double link_prob = 0.5;
  IntRange cpu{1, 10};
  IntRange bw{1, 10};
  // Weights of sec demand levels 0..3, for nodes and links alike.
  std::array<double, 4> sec_dem_weights{0.4, 0.3, 0.2, 0.1};
  IntRange trust{0, 3};
  double sensitive_prob = 0.1;
  // Weights of rep 0, 1, 2.
  std::array<double, 3> node_rep_weights{0.8, 0.2, 0.0};
  std::array<double, 3> link_rep_weights{0.8, 0.2, 0.0};
  double conflict_prob = 0.1;
};

// Tenant owning private cloud number k ("t<k>").
std::string tenant_name(int k);

// Clouds are "c<k>"; the first ceil(private_fraction * n_clouds) are private
// and owned by tenant_name(k). Nodes "s<u>" join clouds round-robin.
SubstrateNetwork generate_substrate(const GenSubstrateConfig& config, std::uint64_t seed);

// Nodes are "v<i>"; the request id defaults to "req".
VnRequest generate_request(const GenRequestConfig& config, const std::string& tenant,
                           std::uint64_t seed, const std::string& id = "req");

}  // namespace secvne

#endif  // SECVNE_GENERATE_H_
