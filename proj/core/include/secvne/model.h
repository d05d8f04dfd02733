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

// Replication expansion, embeddings, validation and cost accounting.

#ifndef SECVNE_MODEL_H_
#define SECVNE_MODEL_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "secvne/state.h"
#include "secvne/types.h"

namespace secvne {

enum class CrossCloudMode {
  kOff,
  kOn,
  // On iff some virtual node asks for at least one backup copy.
  kAuto,
};

struct ExpansionPolicy {
  CrossCloudMode cross_cloud = CrossCloudMode::kAuto;
};

struct NodeCopy {
  int vnode = 0;
  // 0 is the primary copy.
  int copy = 0;
  friend bool operator==(const NodeCopy&, const NodeCopy&) = default;
};

struct Commodity {
  int vlink = 0;
  // 0 is the primary path.
  int path = 0;
  friend bool operator==(const Commodity&, const Commodity&) = default;
};

// A request with every node copy and link path instance spelled out.
struct ExpandedRequest {
  VnRequest request;
  // Resolved policy: backups must land in clouds distinct from each other
  // and from the primary.
  bool cross_cloud = false;
  std::vector<NodeCopy> copies;
  std::vector<Commodity> commodities;

  int num_copies(int vnode) const { return 1 + request.node(vnode).rep; }
  int num_paths(int vlink) const { return 1 + request.link(vlink).rep; }
  bool cross_cloud_applies(int vnode) const {
    return cross_cloud && request.node(vnode).rep >= 1;
  }
};

ExpandedRequest expand_request(const VnRequest& request, ExpansionPolicy policy = {});

// Substrate links traversed by one routed path, in order.
using Path = std::vector<int>;

// Placement of every copy and a substrate walk per commodity, by index.
struct Embedding {
  // node_map[i][k]: substrate node hosting copy k of virtual node i.
  std::vector<std::vector<int>> node_map;
  // link_map[l][p]: substrate links of path p of virtual link l, ordered
  // from the primary host of the link's first endpoint to the second's.
  std::vector<std::vector<Path>> link_map;
  double cost = 0.0;
  double revenue = 0.0;

  int host(int vnode, int copy = 0) const { return node_map[vnode][copy]; }

  // Compares placements and routes; cost and revenue are derived values.
  bool same_mapping(const Embedding& other) const {
    return node_map == other.node_map && link_map == other.link_map;
  }
  friend bool operator==(const Embedding&, const Embedding&) = default;
};

enum class ViolationCode {
  kNodeCapacity,
  kLinkCapacity,
  kNodeSecurity,
  kTrustHarm,
  kCoHostConflict,
  kPathSecurity,
  kSensitivity,
  kNodeReplication,
  kCrossCloud,
  kLinkReplication,
  kPathConnectivity,
  kTenantAvoidance,
};

inline constexpr ViolationCode kAllViolationCodes[] = {
    ViolationCode::kNodeCapacity,    ViolationCode::kLinkCapacity,
    ViolationCode::kNodeSecurity,    ViolationCode::kTrustHarm,
    ViolationCode::kCoHostConflict,  ViolationCode::kPathSecurity,
    ViolationCode::kSensitivity,     ViolationCode::kNodeReplication,
    ViolationCode::kCrossCloud,      ViolationCode::kLinkReplication,
    ViolationCode::kPathConnectivity, ViolationCode::kTenantAvoidance,
};

std::string_view to_string(ViolationCode code);
std::optional<ViolationCode> parse_violation_code(std::string_view name);

struct Violation {
  ViolationCode code;
  std::string detail;
  friend bool operator==(const Violation&, const Violation&) = default;
};

// Raised by apply_embedding when the embedding does not validate.
class EmbeddingRejected : public Error {
 public:
  explicit EmbeddingRejected(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// True when a workload of `tenant` avoiding `avoid` may not share node u
// with what is already placed there, in either direction.
bool violates_tenant_avoidance(const SubstrateState& state, int u,
                               const std::string& tenant,
                               const std::set<std::string>& avoid);

// First single-copy placement filter that rejects hosting vnode on u, in the
// order NodeSecurity, TrustHarm, Sensitivity, TenantAvoidance. These are the
// checks that depend on nothing but the pair itself and the current state.
std::optional<ViolationCode> placement_filter(const SubstrateNetwork& substrate,
                                              const SubstrateState& state,
                                              const VnRequest& request, int vnode,
                                              int u);

// Substrate node on which path p of virtual link l starts.
inline int path_source(const ExpandedRequest& expanded, const Embedding& emb, int vlink) {
  return emb.host(expanded.request.link_ends(vlink).first);
}
inline int path_target(const ExpandedRequest& expanded, const Embedding& emb, int vlink) {
  return emb.host(expanded.request.link_ends(vlink).second);
}

// Returns every constraint the embedding breaks against the given state.
// Throws UnknownId / InvalidInput when the embedding's shape or indices do
// not match the request and substrate.
std::vector<Violation> validate_embedding(const SubstrateNetwork& substrate,
                                          const SubstrateState& state,
                                          const ExpandedRequest& expanded,
                                          const Embedding& emb);

// Sum of cpu(i) * c(host) over copies plus bw(ij) * c(link) over every link of
// every commodity. Terms are accumulated copy by copy, then commodity by
// commodity with each path's links in ascending link index, which is the
// same order the MIP objective uses.
double embedding_cost(const SubstrateNetwork& substrate, const VnRequest& request,
                      const Embedding& emb);

double request_revenue(const VnRequest& request, double beta = 1.0);

// Applies a validated embedding. On violations throws EmbeddingRejected and
// leaves the state untouched.
void apply_embedding(SubstrateState& state, const SubstrateNetwork& substrate,
                     const ExpandedRequest& expanded, const Embedding& emb);

// Exact inverse of apply_embedding. Throws Error if the request is not
// active or was applied with a different mapping.
void release_embedding(SubstrateState& state, const SubstrateNetwork& substrate,
                       const VnRequest& request, const Embedding& emb);

// Lexicographic order on mappings: node_map by host ids, then link_map by
// the node-id sequence each path visits. Used for deterministic tie-breaks.
bool mapping_less(const SubstrateNetwork& substrate, const VnRequest& request,
                  const Embedding& a, const Embedding& b);

// Node indices visited by a path starting at `source` (source included).
// Returns nullopt if the links do not form a walk from source.
std::optional<std::vector<int>> path_nodes(const SubstrateNetwork& substrate,
                                           int source, const std::vector<int>& links);

}  // namespace secvne

#endif  // SECVNE_MODEL_H_
