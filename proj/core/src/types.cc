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

#include "secvne/types.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace secvne {
namespace {

void RequireNonNegative(double value, const std::string& what) {
  if (!std::isfinite(value) || value < 0.0) {
    throw InvalidInput(what + " must be a finite non-negative number");
  }
}

std::pair<int, int> Ordered(int a, int b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace

SubstrateNetwork::SubstrateNetwork(std::vector<Cloud> clouds,
                                   std::vector<SubstrateNode> nodes,
                                   std::vector<SubstrateLink> links)
    : clouds_(std::move(clouds)), nodes_(std::move(nodes)), links_(std::move(links)) {
  for (int c = 0; c < static_cast<int>(clouds_.size()); ++c) {
    const Cloud& cloud = clouds_[c];
    if (cloud.id.empty()) throw InvalidInput("cloud id must not be empty");
    if (!cloud_by_id_.emplace(cloud.id, c).second) {
      throw InvalidInput("duplicate cloud id '" + cloud.id + "'");
    }
    if (cloud.kind == CloudKind::kPrivate && !cloud.owner) {
      throw InvalidInput("private cloud '" + cloud.id + "' has no owner");
    }
    if (cloud.kind == CloudKind::kPublic && cloud.owner) {
      throw InvalidInput("public cloud '" + cloud.id + "' must not have an owner");
    }
  }

  node_cloud_.reserve(nodes_.size());
  for (int u = 0; u < num_nodes(); ++u) {
    const SubstrateNode& n = nodes_[u];
    if (n.id.empty()) throw InvalidInput("substrate node id must not be empty");
    if (!node_by_id_.emplace(n.id, u).second) {
      throw InvalidInput("duplicate substrate node id '" + n.id + "'");
    }
    RequireNonNegative(n.cpu, "node '" + n.id + "' field cpu");
    RequireNonNegative(n.unit_cost, "node '" + n.id + "' field unit_cost");
    if (n.sec.value < 0) throw InvalidInput("node '" + n.id + "' field sec is negative");
    if (n.trust_req.value < 0) {
      throw InvalidInput("node '" + n.id + "' field trust_req is negative");
    }
    auto cloud = cloud_by_id_.find(n.cloud);
    if (cloud == cloud_by_id_.end()) {
      throw InvalidInput("node '" + n.id + "' field cloud references unknown cloud '" +
                         n.cloud + "'");
    }
    node_cloud_.push_back(cloud->second);
  }

  std::vector<int> order(nodes_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return nodes_[a].id < nodes_[b].id; });
  node_rank_.assign(nodes_.size(), 0);
  for (int r = 0; r < static_cast<int>(order.size()); ++r) node_rank_[order[r]] = r;

  adjacency_.assign(nodes_.size(), {});
  std::set<std::pair<int, int>> seen_pairs;
  for (int l = 0; l < num_links(); ++l) {
    SubstrateLink& link = links_[l];
    if (link.id.empty()) link.id = link.endpoints.first + "-" + link.endpoints.second;
    auto a = node_by_id_.find(link.endpoints.first);
    auto b = node_by_id_.find(link.endpoints.second);
    if (a == node_by_id_.end() || b == node_by_id_.end()) {
      throw InvalidInput("link '" + link.id + "' field endpoints references unknown node");
    }
    if (a->second == b->second) {
      throw InvalidInput("link '" + link.id + "' is a self loop");
    }
    if (!seen_pairs.insert(Ordered(a->second, b->second)).second) {
      throw InvalidInput("link '" + link.id + "' duplicates an existing node pair");
    }
    if (!link_by_id_.emplace(link.id, l).second) {
      throw InvalidInput("duplicate substrate link id '" + link.id + "'");
    }
    RequireNonNegative(link.bw, "link '" + link.id + "' field bw");
    RequireNonNegative(link.unit_cost, "link '" + link.id + "' field unit_cost");
    if (link.sec.value < 0) throw InvalidInput("link '" + link.id + "' field sec is negative");
    link_ends_.emplace_back(a->second, b->second);
    adjacency_[a->second].push_back({l, b->second});
    adjacency_[b->second].push_back({l, a->second});
  }
}

std::optional<int> SubstrateNetwork::find_node(std::string_view id) const {
  auto it = node_by_id_.find(std::string(id));
  if (it == node_by_id_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> SubstrateNetwork::find_link(std::string_view id) const {
  auto it = link_by_id_.find(std::string(id));
  if (it == link_by_id_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> SubstrateNetwork::find_cloud(std::string_view id) const {
  auto it = cloud_by_id_.find(std::string(id));
  if (it == cloud_by_id_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> SubstrateNetwork::link_between(int u, int v) const {
  for (const Incidence& inc : adjacency_[u]) {
    if (inc.neighbor == v) return inc.link;
  }
  return std::nullopt;
}

int SubstrateNetwork::node_index(std::string_view id) const {
  if (auto u = find_node(id)) return *u;
  throw UnknownId("unknown substrate node '" + std::string(id) + "'");
}

int SubstrateNetwork::link_index(std::string_view id) const {
  if (auto l = find_link(id)) return *l;
  throw UnknownId("unknown substrate link '" + std::string(id) + "'");
}

VnRequest::VnRequest(std::string id, std::string tenant, std::vector<VirtualNode> nodes,
                     std::vector<VirtualLink> links, std::optional<double> arrival,
                     std::optional<double> lifetime)
    : id_(std::move(id)),
      tenant_(std::move(tenant)),
      nodes_(std::move(nodes)),
      links_(std::move(links)),
      arrival_(arrival),
      lifetime_(lifetime) {
  if (id_.empty()) throw InvalidInput("request id must not be empty");
  for (int i = 0; i < num_nodes(); ++i) {
    const VirtualNode& n = nodes_[i];
    if (n.id.empty()) throw InvalidInput("virtual node id must not be empty");
    if (!node_by_id_.emplace(n.id, i).second) {
      throw InvalidInput("duplicate virtual node id '" + n.id + "'");
    }
    RequireNonNegative(n.cpu, "virtual node '" + n.id + "' field cpu");
    if (n.rep < 0) throw InvalidInput("virtual node '" + n.id + "' field rep is negative");
    if (n.sec_dem.value < 0 || n.trust.value < 0) {
      throw InvalidInput("virtual node '" + n.id + "' has a negative level");
    }
  }

  const auto n = nodes_.size();
  conflict_.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < num_nodes(); ++i) {
    for (const std::string& other : nodes_[i].conflicts) {
      auto j = node_by_id_.find(other);
      if (j == node_by_id_.end()) {
        throw InvalidInput("virtual node '" + nodes_[i].id +
                           "' field conflicts names unknown node '" + other + "'");
      }
      if (j->second == i) {
        throw InvalidInput("virtual node '" + nodes_[i].id + "' conflicts with itself");
      }
      conflict_[i][j->second] = conflict_[j->second][i] = true;
    }
  }
  for (int i = 0; i < num_nodes(); ++i) {
    for (int j = i + 1; j < num_nodes(); ++j) {
      if (conflict_[i][j]) conflict_pairs_.emplace_back(i, j);
    }
  }

  std::set<std::pair<int, int>> seen_pairs;
  for (const VirtualLink& link : links_) {
    const std::string label = link.endpoints.first + "-" + link.endpoints.second;
    auto a = node_by_id_.find(link.endpoints.first);
    auto b = node_by_id_.find(link.endpoints.second);
    if (a == node_by_id_.end() || b == node_by_id_.end()) {
      throw InvalidInput("virtual link '" + label + "' has a dangling endpoint");
    }
    if (a->second == b->second) throw InvalidInput("virtual link '" + label + "' is a self loop");
    if (!seen_pairs.insert(Ordered(a->second, b->second)).second) {
      throw InvalidInput("virtual link '" + label + "' duplicates an existing pair");
    }
    RequireNonNegative(link.bw, "virtual link '" + label + "' field bw");
    if (link.rep < 0) throw InvalidInput("virtual link '" + label + "' field rep is negative");
    if (link.sec_dem.value < 0) {
      throw InvalidInput("virtual link '" + label + "' field sec_dem is negative");
    }
    link_ends_.emplace_back(a->second, b->second);
  }

  if (arrival_ && !std::isfinite(*arrival_)) throw InvalidInput("arrival must be finite");
  if (lifetime_ && !(std::isfinite(*lifetime_) && *lifetime_ > 0.0)) {
    throw InvalidInput("lifetime must be positive");
  }
}

std::optional<int> VnRequest::find_node(std::string_view id) const {
  auto it = node_by_id_.find(std::string(id));
  if (it == node_by_id_.end()) return std::nullopt;
  return it->second;
}

int VnRequest::node_index(std::string_view id) const {
  if (auto i = find_node(id)) return *i;
  throw UnknownId("unknown virtual node '" + std::string(id) + "' in request '" + id_ + "'");
}

std::optional<int> VnRequest::find_link(std::string_view a, std::string_view b) const {
  for (int l = 0; l < num_links(); ++l) {
    const auto& [x, y] = links_[l].endpoints;
    if ((x == a && y == b) || (x == b && y == a)) return l;
  }
  return std::nullopt;
}

bool VnRequest::in_conflict(int i, int j) const { return conflict_[i][j]; }

VnRequest VnRequest::with_id(std::string id) const {
  VnRequest copy = *this;
  if (id.empty()) throw InvalidInput("request id must not be empty");
  copy.id_ = std::move(id);
  return copy;
}

VnRequest VnRequest::with_timing(std::optional<double> arrival,
                                 std::optional<double> lifetime) const {
  return VnRequest(id_, tenant_, nodes_, links_, arrival, lifetime);
}

}  // namespace secvne
