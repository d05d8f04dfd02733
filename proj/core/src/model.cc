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

#include "secvne/model.h"

#include <algorithm>
#include <map>
#include <set>

namespace secvne {
namespace {

constexpr std::string_view kCodeNames[] = {
    "NodeCapacity",    "LinkCapacity",   "NodeSecurity",     "TrustHarm",
    "CoHostConflict",  "PathSecurity",   "Sensitivity",      "NodeReplication",
    "CrossCloud",      "LinkReplication", "PathConnectivity", "TenantAvoidance",
};

std::string Describe(const std::vector<Violation>& violations) {
  std::string out = "embedding violates constraints:";
  for (const Violation& v : violations) {
    out += " [";
    out += to_string(v.code);
    out += "] ";
    out += v.detail;
    out += ";";
  }
  return out;
}

std::string CopyLabel(const VnRequest& request, int vnode, int copy) {
  return request.node(vnode).id + "#" + std::to_string(copy);
}

std::string PathLabel(const VnRequest& request, int vlink, int path) {
  const auto& [a, b] = request.link(vlink).endpoints;
  return a + "-" + b + "#" + std::to_string(path);
}

void CheckShape(const SubstrateNetwork& substrate, const ExpandedRequest& expanded,
                const Embedding& emb) {
  const VnRequest& request = expanded.request;
  if (static_cast<int>(emb.node_map.size()) != request.num_nodes()) {
    throw InvalidInput("embedding node_map does not cover request '" + request.id() + "'");
  }
  for (int i = 0; i < request.num_nodes(); ++i) {
    if (static_cast<int>(emb.node_map[i].size()) != expanded.num_copies(i)) {
      throw InvalidInput("embedding has wrong copy count for virtual node '" +
                         request.node(i).id + "'");
    }
    for (int u : emb.node_map[i]) {
      if (u < 0 || u >= substrate.num_nodes()) {
        throw UnknownId("embedding references unknown substrate node index " +
                        std::to_string(u));
      }
    }
  }
  if (static_cast<int>(emb.link_map.size()) != request.num_links()) {
    throw InvalidInput("embedding link_map does not cover request '" + request.id() + "'");
  }
  for (int l = 0; l < request.num_links(); ++l) {
    if (static_cast<int>(emb.link_map[l].size()) != expanded.num_paths(l)) {
      throw InvalidInput("embedding has wrong path count for virtual link " +
                         PathLabel(request, l, 0));
    }
    for (const auto& path : emb.link_map[l]) {
      for (int e : path) {
        if (e < 0 || e >= substrate.num_links()) {
          throw UnknownId("embedding references unknown substrate link index " +
                          std::to_string(e));
        }
      }
    }
  }
}

// True if `links` is a trail from source to target (no repeated link).
bool ConnectsEndpoints(const SubstrateNetwork& substrate, int source, int target,
                       const std::vector<int>& links) {
  if (links.empty()) return source == target;
  std::set<int> used(links.begin(), links.end());
  if (used.size() != links.size()) return false;
  auto nodes = path_nodes(substrate, source, links);
  return nodes && nodes->back() == target;
}

}  // namespace

std::string_view to_string(ViolationCode code) {
  return kCodeNames[static_cast<int>(code)];
}

std::optional<ViolationCode> parse_violation_code(std::string_view name) {
  for (ViolationCode code : kAllViolationCodes) {
    if (to_string(code) == name) return code;
  }
  return std::nullopt;
}

EmbeddingRejected::EmbeddingRejected(std::vector<Violation> violations)
    : Error(Describe(violations)), violations_(std::move(violations)) {}

ExpandedRequest expand_request(const VnRequest& request, ExpansionPolicy policy) {
  ExpandedRequest out;
  out.request = request;
  bool any_backup = std::any_of(request.nodes().begin(), request.nodes().end(),
                                [](const VirtualNode& n) { return n.rep >= 1; });
  switch (policy.cross_cloud) {
    case CrossCloudMode::kOff: out.cross_cloud = false; break;
    case CrossCloudMode::kOn: out.cross_cloud = true; break;
    case CrossCloudMode::kAuto: out.cross_cloud = any_backup; break;
  }
  for (int i = 0; i < request.num_nodes(); ++i) {
    for (int k = 0; k <= request.node(i).rep; ++k) out.copies.push_back({i, k});
  }
  for (int l = 0; l < request.num_links(); ++l) {
    for (int p = 0; p <= request.link(l).rep; ++p) out.commodities.push_back({l, p});
  }
  return out;
}

bool violates_tenant_avoidance(const SubstrateState& state, int u,
                               const std::string& tenant,
                               const std::set<std::string>& avoid) {
  for (const Placement& placed : state.placements(u)) {
    if (avoid.count(placed.tenant) != 0) return true;
    if (placed.avoid_tenants.count(tenant) != 0) return true;
  }
  return false;
}

std::optional<ViolationCode> placement_filter(const SubstrateNetwork& substrate,
                                              const SubstrateState& state,
                                              const VnRequest& request, int vnode,
                                              int u) {
  const VirtualNode& v = request.node(vnode);
  const SubstrateNode& host = substrate.node(u);
  if (host.sec < v.sec_dem) return ViolationCode::kNodeSecurity;
  if (v.trust < host.trust_req) return ViolationCode::kTrustHarm;
  if (v.sensitive) {
    const Cloud& cloud = substrate.cloud_of(u);
    if (cloud.kind != CloudKind::kPrivate || cloud.owner != request.tenant()) {
      return ViolationCode::kSensitivity;
    }
  }
  if (violates_tenant_avoidance(state, u, request.tenant(), v.avoid_tenants)) {
    return ViolationCode::kTenantAvoidance;
  }
  return std::nullopt;
}

std::optional<std::vector<int>> path_nodes(const SubstrateNetwork& substrate, int source,
                                           const std::vector<int>& links) {
  std::vector<int> nodes{source};
  int at = source;
  for (int e : links) {
    auto [a, b] = substrate.link_ends(e);
    if (a == at) {
      at = b;
    } else if (b == at) {
      at = a;
    } else {
      return std::nullopt;
    }
    nodes.push_back(at);
  }
  return nodes;
}

std::vector<Violation> validate_embedding(const SubstrateNetwork& substrate,
                                          const SubstrateState& state,
                                          const ExpandedRequest& expanded,
                                          const Embedding& emb) {
  CheckShape(substrate, expanded, emb);
  const VnRequest& request = expanded.request;
  std::vector<Violation> out;
  auto report = [&](ViolationCode code, std::string detail) {
    out.push_back({code, std::move(detail)});
  };

  // Per-copy host checks.
  for (const NodeCopy& c : expanded.copies) {
    const VirtualNode& v = request.node(c.vnode);
    const int u = emb.host(c.vnode, c.copy);
    const SubstrateNode& host = substrate.node(u);
    const std::string who = CopyLabel(request, c.vnode, c.copy) + " on " + host.id;
    if (host.sec < v.sec_dem) {
      report(ViolationCode::kNodeSecurity, who + ": sec " + std::to_string(host.sec.value) +
                                               " < demand " + std::to_string(v.sec_dem.value));
    }
    if (v.trust < host.trust_req) {
      report(ViolationCode::kTrustHarm, who + ": trust " + std::to_string(v.trust.value) +
                                            " < required " +
                                            std::to_string(host.trust_req.value));
    }
    if (v.sensitive) {
      const Cloud& cloud = substrate.cloud_of(u);
      if (cloud.kind != CloudKind::kPrivate || cloud.owner != request.tenant()) {
        report(ViolationCode::kSensitivity,
               who + ": cloud " + cloud.id + " is not a private cloud of " + request.tenant());
      }
    }
    if (violates_tenant_avoidance(state, u, request.tenant(), v.avoid_tenants)) {
      report(ViolationCode::kTenantAvoidance, who + ": shares host with an avoided tenant");
    }
  }

  // Replication and cross-cloud separation of copies.
  for (int i = 0; i < request.num_nodes(); ++i) {
    const auto& hosts = emb.node_map[i];
    for (std::size_t a = 0; a < hosts.size(); ++a) {
      for (std::size_t b = a + 1; b < hosts.size(); ++b) {
        const std::string pair = CopyLabel(request, i, static_cast<int>(a)) + " and " +
                                 CopyLabel(request, i, static_cast<int>(b));
        if (hosts[a] == hosts[b]) {
          report(ViolationCode::kNodeReplication,
                 pair + " share substrate node " + substrate.node(hosts[a]).id);
        } else if (expanded.cross_cloud_applies(i) &&
                   substrate.cloud_index_of(hosts[a]) == substrate.cloud_index_of(hosts[b])) {
          report(ViolationCode::kCrossCloud,
                 pair + " share cloud " + substrate.cloud_of(hosts[a]).id);
        }
      }
    }
  }

  // Declared conflicts, across every copy of both nodes.
  for (const auto& [i, j] : request.conflict_pairs()) {
    for (int ki = 0; ki < expanded.num_copies(i); ++ki) {
      for (int kj = 0; kj < expanded.num_copies(j); ++kj) {
        if (emb.host(i, ki) == emb.host(j, kj)) {
          report(ViolationCode::kCoHostConflict,
                 CopyLabel(request, i, ki) + " and " + CopyLabel(request, j, kj) +
                     " co-hosted on " + substrate.node(emb.host(i, ki)).id);
        }
      }
    }
  }

  // Node capacity.
  std::map<int, double> cpu_demand;
  for (const NodeCopy& c : expanded.copies) {
    cpu_demand[emb.host(c.vnode, c.copy)] += request.node(c.vnode).cpu;
  }
  for (const auto& [u, demand] : cpu_demand) {
    if (demand > state.residual_cpu(u)) {
      report(ViolationCode::kNodeCapacity,
             substrate.node(u).id + ": demand " + std::to_string(demand) + " > residual " +
                 std::to_string(state.residual_cpu(u)));
    }
  }

  // Paths: security, connectivity, disjointness.
  for (const Commodity& c : expanded.commodities) {
    const VirtualLink& vl = request.link(c.vlink);
    const auto& path = emb.link_map[c.vlink][c.path];
    const std::string who = PathLabel(request, c.vlink, c.path);
    for (int e : path) {
      if (substrate.link(e).sec < vl.sec_dem) {
        report(ViolationCode::kPathSecurity,
               who + ": link " + substrate.link(e).id + " sec " +
                   std::to_string(substrate.link(e).sec.value) + " < demand " +
                   std::to_string(vl.sec_dem.value));
      }
    }
    const int source = path_source(expanded, emb, c.vlink);
    const int target = path_target(expanded, emb, c.vlink);
    if (!ConnectsEndpoints(substrate, source, target, path)) {
      report(ViolationCode::kPathConnectivity,
             who + ": not a trail from " + substrate.node(source).id + " to " +
                 substrate.node(target).id);
    }
  }
  for (int l = 0; l < request.num_links(); ++l) {
    const auto& paths = emb.link_map[l];
    for (std::size_t a = 0; a < paths.size(); ++a) {
      for (std::size_t b = a + 1; b < paths.size(); ++b) {
        for (int e : paths[a]) {
          if (std::find(paths[b].begin(), paths[b].end(), e) != paths[b].end()) {
            report(ViolationCode::kLinkReplication,
                   PathLabel(request, l, static_cast<int>(a)) + " and " +
                       PathLabel(request, l, static_cast<int>(b)) + " share link " +
                       substrate.link(e).id);
            break;
          }
        }
      }
    }
  }

  // Link capacity.
  std::map<int, double> bw_demand;
  for (const Commodity& c : expanded.commodities) {
    for (int e : emb.link_map[c.vlink][c.path]) bw_demand[e] += request.link(c.vlink).bw;
  }
  for (const auto& [e, demand] : bw_demand) {
    if (demand > state.residual_bw(e)) {
      report(ViolationCode::kLinkCapacity,
             substrate.link(e).id + ": demand " + std::to_string(demand) + " > residual " +
                 std::to_string(state.residual_bw(e)));
    }
  }
  return out;
}

double embedding_cost(const SubstrateNetwork& substrate, const VnRequest& request,
                      const Embedding& emb) {
  double cost = 0.0;
  for (int i = 0; i < request.num_nodes(); ++i) {
    for (int u : emb.node_map.at(i)) {
      if (u < 0 || u >= substrate.num_nodes()) {
        throw UnknownId("unknown substrate node index " + std::to_string(u));
      }
      cost += request.node(i).cpu * substrate.node(u).unit_cost;
    }
  }
  for (int l = 0; l < request.num_links(); ++l) {
    for (const auto& path : emb.link_map.at(l)) {
      std::vector<int> sorted = path;
      std::sort(sorted.begin(), sorted.end());
      for (int e : sorted) {
        if (e < 0 || e >= substrate.num_links()) {
          throw UnknownId("unknown substrate link index " + std::to_string(e));
        }
        cost += request.link(l).bw * substrate.link(e).unit_cost;
      }
    }
  }
  return cost;
}

double request_revenue(const VnRequest& request, double beta) {
  double cpu = 0.0;
  for (const VirtualNode& n : request.nodes()) cpu += n.cpu * (1 + n.rep);
  double bw = 0.0;
  for (const VirtualLink& l : request.links()) bw += l.bw * (1 + l.rep);
  return cpu + beta * bw;
}

bool mapping_less(const SubstrateNetwork& substrate, const VnRequest& request,
                  const Embedding& a, const Embedding& b) {
  auto node_key = [&](const Embedding& e) {
    std::vector<int> key;
    for (const auto& hosts : e.node_map) {
      for (int u : hosts) key.push_back(substrate.node_rank(u));
    }
    return key;
  };
  auto ka = node_key(a);
  auto kb = node_key(b);
  if (ka != kb) return ka < kb;
  for (int l = 0; l < request.num_links(); ++l) {
    const int source = a.host(request.link_ends(l).first);
    for (std::size_t p = 0; p < a.link_map[l].size(); ++p) {
      auto to_ranks = [&](const std::vector<int>& links) {
        std::vector<int> ranks;
        if (auto nodes = path_nodes(substrate, source, links)) {
          for (int u : *nodes) ranks.push_back(substrate.node_rank(u));
        }
        return ranks;
      };
      auto ra = to_ranks(a.link_map[l][p]);
      auto rb = to_ranks(b.link_map[l][p]);
      if (ra != rb) return ra < rb;
    }
  }
  return false;
}

}  // namespace secvne
