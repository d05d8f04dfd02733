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

// Slow reference computations used only by tests. None of them call the
// solvers; they enumerate everything and keep what survives.

#ifndef SECVNE_TESTS_SUPPORT_ORACLES_H_
#define SECVNE_TESTS_SUPPORT_ORACLES_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "secvne/formulation.h"
#include "secvne/model.h"
#include "secvne/state.h"

namespace secvne::testing {

// Cost written out term by term, independent of embedding_cost.
double OracleCost(const SubstrateNetwork& substrate, const VnRequest& request,
                  const Embedding& emb);

// Every simple path (as link indices) between two nodes, ignoring all
// attributes. from == to gives one empty path.
std::vector<Path> OracleSimplePaths(const SubstrateNetwork& substrate, int from, int to);

struct OracleOptimum {
  bool feasible = false;
  double cost = 0.0;
  // Validator-clean embeddings enumerated.
  std::int64_t feasible_count = 0;
  // Every optimal embedding found.
  std::vector<Embedding> optima;
};

// Every host for every copy times every simple path per commodity, checked
// by validate_embedding. on_feasible sees each clean embedding.
OracleOptimum BruteForceOptimum(
    const SubstrateNetwork& substrate, const SubstrateState& state, const VnRequest& request,
    ExpansionPolicy policy = {},
    const std::function<void(const Embedding&)>& on_feasible = nullptr);

// Calls visit(values, objective) for every 0/1 vector satisfying all
// constraints. Returns the number of search nodes. Throws std::runtime_error
// past max_nodes.
std::int64_t EnumerateFeasible(const MipModel& model,
                               const std::function<void(std::span<const int>, double)>& visit,
                               std::int64_t max_nodes = 50'000'000);

// Maps an assignment back to an embedding when every commodity's arcs form a
// single simple path between the primary hosts; nullopt otherwise.
std::optional<Embedding> AssignmentToEmbedding(const SubstrateNetwork& substrate,
                                               const ExpandedRequest& expanded,
                                               const MipModel& model,
                                               std::span<const int> values);

}  // namespace secvne::testing

#endif  // SECVNE_TESTS_SUPPORT_ORACLES_H_
