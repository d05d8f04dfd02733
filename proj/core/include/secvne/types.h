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

// Substrate and virtual-network domain types.
//
// Both network classes validate their invariants on construction and are
// immutable afterwards, so a single instance can be shared between solver
// calls running on different threads.

#ifndef SECVNE_TYPES_H_
#define SECVNE_TYPES_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace secvne {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A document or domain object breaks a structural invariant.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// An identifier does not resolve against the network it is used with.
class UnknownId : public Error {
 public:
  using Error::Error;
};

// Ordinal protection rank. Larger is stronger; feasibility is offered >= demanded.
struct SecurityLevel {
  int value = 0;

  constexpr SecurityLevel() = default;
  constexpr explicit SecurityLevel(int v) : value(v) {}
  friend constexpr auto operator<=>(SecurityLevel, SecurityLevel) = default;
};

enum class CloudKind { kPrivate, kPublic };

struct Cloud {
  std::string id;
  CloudKind kind = CloudKind::kPublic;
  // Present iff kind == kPrivate.
  std::optional<std::string> owner;

  friend bool operator==(const Cloud&, const Cloud&) = default;
};

struct SubstrateNode {
  std::string id;
  double cpu = 0.0;
  SecurityLevel sec;
  // Minimum trust a hosted workload must present.
  SecurityLevel trust_req;
  std::string cloud;
  double unit_cost = 0.0;

  friend bool operator==(const SubstrateNode&, const SubstrateNode&) = default;
};

struct SubstrateLink {
  // Defaults to "<first>-<second>" when left empty.
  std::string id;
  std::pair<std::string, std::string> endpoints;
  double bw = 0.0;
  SecurityLevel sec;
  double unit_cost = 0.0;

  friend bool operator==(const SubstrateLink&, const SubstrateLink&) = default;
};

// One incident link seen from a node.
struct Incidence {
  int link = 0;
  int neighbor = 0;
};

class SubstrateNetwork {
 public:
  // Throws InvalidInput on duplicate ids, dangling references, negative
  // capacities or costs, self loops and parallel links.
  SubstrateNetwork(std::vector<Cloud> clouds, std::vector<SubstrateNode> nodes,
                   std::vector<SubstrateLink> links);
  SubstrateNetwork() = default;

  const std::vector<Cloud>& clouds() const { return clouds_; }
  const std::vector<SubstrateNode>& nodes() const { return nodes_; }
  const std::vector<SubstrateLink>& links() const { return links_; }

  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int num_links() const { return static_cast<int>(links_.size()); }

  const SubstrateNode& node(int u) const { return nodes_[u]; }
  const SubstrateLink& link(int l) const { return links_[l]; }
  const Cloud& cloud_of(int u) const { return clouds_[node_cloud_[u]]; }
  int cloud_index_of(int u) const { return node_cloud_[u]; }
  // Endpoint indices of link l in the order the link was declared.
  std::pair<int, int> link_ends(int l) const { return link_ends_[l]; }
  std::span<const Incidence> incident(int u) const { return adjacency_[u]; }

  std::optional<int> find_node(std::string_view id) const;
  std::optional<int> find_link(std::string_view id) const;
  std::optional<int> find_cloud(std::string_view id) const;
  // Link joining u and v in either orientation.
  std::optional<int> link_between(int u, int v) const;

  // Throwing lookups (UnknownId).
  int node_index(std::string_view id) const;
  int link_index(std::string_view id) const;

  // Position of node u when all node ids are sorted ascending.
  int node_rank(int u) const { return node_rank_[u]; }

  friend bool operator==(const SubstrateNetwork& a, const SubstrateNetwork& b) {
    return a.clouds_ == b.clouds_ && a.nodes_ == b.nodes_ && a.links_ == b.links_;
  }

 private:
  std::vector<Cloud> clouds_;
  std::vector<SubstrateNode> nodes_;
  std::vector<SubstrateLink> links_;

  std::unordered_map<std::string, int> node_by_id_;
  std::unordered_map<std::string, int> link_by_id_;
  std::unordered_map<std::string, int> cloud_by_id_;
  std::vector<int> node_cloud_;
  std::vector<int> node_rank_;
  std::vector<std::pair<int, int>> link_ends_;
  std::vector<std::vector<Incidence>> adjacency_;
};

struct VirtualNode {
  std::string id;
  double cpu = 0.0;
  SecurityLevel sec_dem;
  SecurityLevel trust;
  bool sensitive = false;
  // Number of backup copies.
  int rep = 0;
  std::set<std::string> conflicts;
  std::set<std::string> avoid_tenants;

  friend bool operator==(const VirtualNode&, const VirtualNode&) = default;
};

struct VirtualLink {
  std::pair<std::string, std::string> endpoints;
  double bw = 0.0;
  SecurityLevel sec_dem;
  // Number of backup paths.
  int rep = 0;

  friend bool operator==(const VirtualLink&, const VirtualLink&) = default;
};

class VnRequest {
 public:
  // Throws InvalidInput on duplicate node ids, dangling or repeated links,
  // self conflicts, unknown conflict targets and negative demands.
  VnRequest(std::string id, std::string tenant, std::vector<VirtualNode> nodes,
            std::vector<VirtualLink> links,
            std::optional<double> arrival = std::nullopt,
            std::optional<double> lifetime = std::nullopt);
  VnRequest() = default;

  const std::string& id() const { return id_; }
  const std::string& tenant() const { return tenant_; }
  const std::vector<VirtualNode>& nodes() const { return nodes_; }
  const std::vector<VirtualLink>& links() const { return links_; }
  std::optional<double> arrival() const { return arrival_; }
  std::optional<double> lifetime() const { return lifetime_; }

  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int num_links() const { return static_cast<int>(links_.size()); }
  const VirtualNode& node(int i) const { return nodes_[i]; }
  const VirtualLink& link(int l) const { return links_[l]; }
  std::pair<int, int> link_ends(int l) const { return link_ends_[l]; }

  std::optional<int> find_node(std::string_view id) const;
  int node_index(std::string_view id) const;
  std::optional<int> find_link(std::string_view a, std::string_view b) const;

  // Symmetric closure of declared conflicts.
  bool in_conflict(int i, int j) const;
  // Conflicting pairs (i < j), in ascending order.
  const std::vector<std::pair<int, int>>& conflict_pairs() const {
    return conflict_pairs_;
  }

  // Copies of this request with a different id / timing, used by the simulator.
  VnRequest with_id(std::string id) const;
  VnRequest with_timing(std::optional<double> arrival,
                        std::optional<double> lifetime) const;

  friend bool operator==(const VnRequest& a, const VnRequest& b) {
    return a.id_ == b.id_ && a.tenant_ == b.tenant_ && a.nodes_ == b.nodes_ &&
           a.links_ == b.links_ && a.arrival_ == b.arrival_ &&
           a.lifetime_ == b.lifetime_;
  }

 private:
  std::string id_;
  std::string tenant_;
  std::vector<VirtualNode> nodes_;
  std::vector<VirtualLink> links_;
  std::optional<double> arrival_;
  std::optional<double> lifetime_;

  std::unordered_map<std::string, int> node_by_id_;
  std::vector<std::pair<int, int>> link_ends_;
  std::vector<std::vector<bool>> conflict_;
  std::vector<std::pair<int, int>> conflict_pairs_;
};

}  // namespace secvne

#endif  // SECVNE_TYPES_H_
