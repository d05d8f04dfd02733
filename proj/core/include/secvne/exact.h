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

// Minimum-cost embedder by exhaustive depth-first search.
//
// Copies are placed first, in request order, trying hosts by ascending id;
// commodities are then routed in request order over every simple path that
// passes the security and residual bandwidth filters, in lexicographic
// node-id order. Because the search visits complete mappings in
// lexicographic order and only accepts strictly cheaper leaves, the result
// is the lexicographically smallest optimum.

#ifndef SECVNE_EXACT_H_
#define SECVNE_EXACT_H_

#include <cstdint>
#include <vector>

#include "secvne/outcome.h"

namespace secvne {

struct SearchBudget {
  std::int64_t max_partial_states = 10'000'000;
  std::int64_t max_paths_per_pair = 10'000;
};

struct ExactOptions {
  SearchBudget budget;
  // Use the greedy embedder's cost, when it finds one, as the initial upper
  // bound. Does not change the result, only how much is pruned.
  bool seed_with_greedy = true;
};

class PathBudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Every simple path from `from` to `to` whose links have sec >= min_sec and
// residual bandwidth >= min_bw, ordered lexicographically by the node ids
// they visit. from == to yields the single empty path. Throws
// PathBudgetExceeded when more than max_paths paths exist.
std::vector<Path> all_simple_paths(const SubstrateNetwork& substrate,
                                   const SubstrateState& state, int from, int to,
                                   SecurityLevel min_sec, double min_bw,
                                   std::int64_t max_paths = SearchBudget{}.max_paths_per_pair);

Outcome solve_exact(const SubstrateNetwork& substrate, const SubstrateState& state,
                    const VnRequest& request, ExpansionPolicy policy = {},
                    const ExactOptions& options = {});

}  // namespace secvne

#endif  // SECVNE_EXACT_H_
