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

// Two-stage greedy embedder.
//
// Stage one places copies one at a time, largest cpu demand first, on the
// best-ranked host that passes every per-node constraint. Stage two routes
// each virtual link, largest bandwidth first, along the cheapest residual
// path (Dijkstra on bw * unit cost); backup paths are found the same way
// with the links of the earlier paths of that virtual link removed. Neither
// stage backtracks, so the first failure rejects the request.

#ifndef SECVNE_HEURISTIC_H_
#define SECVNE_HEURISTIC_H_

#include <string>
#include <vector>

#include "secvne/outcome.h"

namespace secvne {

enum class NodeRank {
  // residual cpu times the residual bandwidth of incident links
  kResources,
  // cheapest unit cost first
  kCost,
};

struct HeuristicConfig {
  NodeRank node_rank = NodeRank::kResources;
  // When the disjoint paths of one virtual link cannot all be found, retry
  // up to this many times; retry r forbids the primary the r-th link of the
  // first attempt's primary path.
  int k_disjoint_retries = 3;
};

// Copies placed so far. node_map entries are -1 until placed.
struct PartialPlacement {
  std::vector<std::vector<int>> node_map;

  static PartialPlacement Empty(const ExpandedRequest& expanded);
};

double rank_score(const SubstrateNetwork& substrate, const SubstrateState& state, int u,
                  const HeuristicConfig& config = {});

// Hosts able to take `copy` of `vnode` next to what is already placed,
// best score first, ties by ascending node id.
std::vector<int> candidate_hosts(const SubstrateNetwork& substrate,
                                 const SubstrateState& state,
                                 const ExpandedRequest& expanded, int vnode, int copy,
                                 const PartialPlacement& already_placed,
                                 const HeuristicConfig& config = {});

struct NodeMapResult {
  std::vector<std::vector<int>> node_map;
  // Empty on success.
  std::string rejection;
  bool ok() const { return rejection.empty(); }
};

struct LinkMapResult {
  std::vector<std::vector<Path>> link_map;
  std::string rejection;
  bool ok() const { return rejection.empty(); }
};

NodeMapResult greedy_node_map(const SubstrateNetwork& substrate, const SubstrateState& state,
                              const ExpandedRequest& expanded,
                              const HeuristicConfig& config = {});

LinkMapResult greedy_link_map(const SubstrateNetwork& substrate, const SubstrateState& state,
                              const ExpandedRequest& expanded,
                              const std::vector<std::vector<int>>& node_map,
                              const HeuristicConfig& config = {});

Outcome solve_greedy(const SubstrateNetwork& substrate, const SubstrateState& state,
                     const VnRequest& request, ExpansionPolicy policy = {},
                     const HeuristicConfig& config = {});

}  // namespace secvne

#endif  // SECVNE_HEURISTIC_H_
