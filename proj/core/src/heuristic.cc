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

#include "secvne/heuristic.h"

#include <algorithm>
#include <limits>
#include <queue>
#include <tuple>

namespace secvne {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string CopyName(const VnRequest& request, int vnode, int copy) {
  return request.node(vnode).id + "#" + std::to_string(copy);
}

// Link routing for one request. Capacity checks sum the demand on a link in
// the same commodity order the validator uses, so a route accepted here is
// accepted there bit for bit.
class LinkMapper {
 public:
  LinkMapper(const SubstrateNetwork& substrate, const SubstrateState& state,
             const ExpandedRequest& expanded, const std::vector<std::vector<int>>& node_map,
             const HeuristicConfig& config)
      : substrate_(substrate),
        state_(state),
        expanded_(expanded),
        request_(expanded.request),
        node_map_(node_map),
        config_(config) {
    routed_.resize(request_.num_links());
    link_map_.resize(request_.num_links());
    for (int l = 0; l < request_.num_links(); ++l) {
      routed_[l].assign(expanded_.num_paths(l), false);
      link_map_[l].assign(expanded_.num_paths(l), {});
    }
  }

  LinkMapResult Run() {
    std::vector<int> order(request_.num_links());
    for (int l = 0; l < request_.num_links(); ++l) order[l] = l;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const VirtualLink& la = request_.link(a);
      const VirtualLink& lb = request_.link(b);
      if (la.bw != lb.bw) return la.bw > lb.bw;
      return la.endpoints < lb.endpoints;
    });
    for (int l : order) {
      if (auto failure = RouteLink(l)) return {{}, *failure};
    }
    return {std::move(link_map_), {}};
  }

 private:
  std::optional<std::string> RouteLink(int vlink) {
    auto [i, j] = request_.link_ends(vlink);
    const int source = node_map_[i][0];
    const int target = node_map_[j][0];
    const int paths = expanded_.num_paths(vlink);
    if (source == target) {
      for (int p = 0; p < paths; ++p) {
        link_map_[vlink][p].clear();
        routed_[vlink][p] = true;
      }
      return std::nullopt;
    }

    // Attempt r > 0 forbids the primary the (r-1)-th link of the first
    // attempt's primary, so a cheap primary that blocks every backup can be
    // traded for a slightly dearer one.
    Path first_primary;
    for (int attempt = 0; attempt <= config_.k_disjoint_retries; ++attempt) {
      std::vector<bool> banned(substrate_.num_links(), false);
      if (attempt > 0) {
        if (attempt > static_cast<int>(first_primary.size())) break;
        banned[first_primary[attempt - 1]] = true;
      }
      std::vector<bool> excluded(substrate_.num_links(), false);
      int p = 0;
      for (; p < paths; ++p) {
        std::vector<bool> blocked = excluded;
        if (p == 0) blocked = banned;
        auto path = ShortestPath(vlink, p, source, target, blocked);
        if (!path) break;
        link_map_[vlink][p] = *path;
        routed_[vlink][p] = true;
        for (int e : *path) excluded[e] = true;
      }
      if (p == paths) return std::nullopt;

      if (attempt == 0) {
        if (p == 0) break;  // no primary at all; bans cannot help
        first_primary = link_map_[vlink][0];
      }
      for (int q = 0; q < paths; ++q) {
        routed_[vlink][q] = false;
        link_map_[vlink][q].clear();
      }
    }
    const auto& [a, b] = request_.link(vlink).endpoints;
    return "no feasible path set for virtual link " + a + "-" + b;
  }

  // Bandwidth charged on link e if commodity (vlink, p) were routed over it.
  double DemandWith(int e, int vlink, int p) const {
    double demand = 0.0;
    for (const Commodity& c : expanded_.commodities) {
      const double bw = request_.link(c.vlink).bw;
      if (c.vlink == vlink && c.path == p) {
        demand += bw;
        continue;
      }
      if (!routed_[c.vlink][c.path]) continue;
      for (int used : link_map_[c.vlink][c.path]) {
        if (used == e) demand += bw;
      }
    }
    return demand;
  }

  std::optional<Path> ShortestPath(int vlink, int p, int source, int target,
                                   const std::vector<bool>& blocked) const {
    const VirtualLink& vl = request_.link(vlink);
    const int n = substrate_.num_nodes();
    std::vector<double> dist(n, kInf);
    std::vector<int> via(n, -1);
    using Entry = std::tuple<double, int, int>;  // distance, node rank, node
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    dist[source] = 0.0;
    queue.emplace(0.0, substrate_.node_rank(source), source);
    while (!queue.empty()) {
      auto [d, rank, u] = queue.top();
      queue.pop();
      if (d > dist[u]) continue;
      if (u == target) break;
      for (const Incidence& inc : substrate_.incident(u)) {
        const int e = inc.link;
        const SubstrateLink& link = substrate_.link(e);
        if (blocked[e] || link.sec < vl.sec_dem) continue;
        if (DemandWith(e, vlink, p) > state_.residual_bw(e)) continue;
        const double nd = d + vl.bw * link.unit_cost;
        if (nd < dist[inc.neighbor]) {
          dist[inc.neighbor] = nd;
          via[inc.neighbor] = e;
          queue.emplace(nd, substrate_.node_rank(inc.neighbor), inc.neighbor);
        }
      }
    }
    if (dist[target] == kInf) return std::nullopt;
    Path path;
    for (int at = target; at != source;) {
      const int e = via[at];
      path.push_back(e);
      auto [a, b] = substrate_.link_ends(e);
      at = (a == at) ? b : a;
    }
    std::reverse(path.begin(), path.end());
    return path;
  }

  const SubstrateNetwork& substrate_;
  const SubstrateState& state_;
  const ExpandedRequest& expanded_;
  const VnRequest& request_;
  const std::vector<std::vector<int>>& node_map_;
  const HeuristicConfig& config_;
  std::vector<std::vector<bool>> routed_;
  std::vector<std::vector<Path>> link_map_;
};

}  // namespace

PartialPlacement PartialPlacement::Empty(const ExpandedRequest& expanded) {
  PartialPlacement out;
  for (int i = 0; i < expanded.request.num_nodes(); ++i) {
    out.node_map.emplace_back(expanded.num_copies(i), -1);
  }
  return out;
}

double rank_score(const SubstrateNetwork& substrate, const SubstrateState& state, int u,
                  const HeuristicConfig& config) {
  if (config.node_rank == NodeRank::kCost) return -substrate.node(u).unit_cost;
  double bw = 0.0;
  for (const Incidence& inc : substrate.incident(u)) bw += state.residual_bw(inc.link);
  return state.residual_cpu(u) * bw;
}

std::vector<int> candidate_hosts(const SubstrateNetwork& substrate,
                                 const SubstrateState& state,
                                 const ExpandedRequest& expanded, int vnode, int copy,
                                 const PartialPlacement& already_placed,
                                 const HeuristicConfig& config) {
  const VnRequest& request = expanded.request;
  const auto& placed = already_placed.node_map;
  std::vector<int> out;
  for (int u = 0; u < substrate.num_nodes(); ++u) {
    if (placement_filter(substrate, state, request, vnode, u)) continue;

    bool ok = true;
    for (int k = 0; k < expanded.num_copies(vnode) && ok; ++k) {
      const int h = placed[vnode][k];
      if (k == copy || h < 0) continue;
      if (h == u) ok = false;
      if (expanded.cross_cloud_applies(vnode) &&
          substrate.cloud_index_of(h) == substrate.cloud_index_of(u)) {
        ok = false;
      }
    }
    for (int j = 0; j < request.num_nodes() && ok; ++j) {
      if (!request.in_conflict(vnode, j)) continue;
      for (int h : placed[j]) {
        if (h == u) ok = false;
      }
    }
    if (!ok) continue;

    double demand = 0.0;
    for (const NodeCopy& c : expanded.copies) {
      const bool self = c.vnode == vnode && c.copy == copy;
      if (self || placed[c.vnode][c.copy] == u) demand += request.node(c.vnode).cpu;
    }
    if (demand > state.residual_cpu(u)) continue;
    out.push_back(u);
  }

  std::vector<double> score(substrate.num_nodes(), 0.0);
  for (int u : out) score[u] = rank_score(substrate, state, u, config);
  std::sort(out.begin(), out.end(), [&](int a, int b) {
    if (score[a] != score[b]) return score[a] > score[b];
    return substrate.node_rank(a) < substrate.node_rank(b);
  });
  return out;
}

NodeMapResult greedy_node_map(const SubstrateNetwork& substrate, const SubstrateState& state,
                              const ExpandedRequest& expanded,
                              const HeuristicConfig& config) {
  const VnRequest& request = expanded.request;
  std::vector<NodeCopy> order = expanded.copies;
  std::sort(order.begin(), order.end(), [&](const NodeCopy& a, const NodeCopy& b) {
    const VirtualNode& na = request.node(a.vnode);
    const VirtualNode& nb = request.node(b.vnode);
    if (na.cpu != nb.cpu) return na.cpu > nb.cpu;
    if (na.sec_dem != nb.sec_dem) return na.sec_dem > nb.sec_dem;
    if (na.id != nb.id) return na.id < nb.id;
    return a.copy < b.copy;
  });

  PartialPlacement partial = PartialPlacement::Empty(expanded);
  for (const NodeCopy& c : order) {
    auto hosts = candidate_hosts(substrate, state, expanded, c.vnode, c.copy, partial, config);
    if (hosts.empty()) {
      return {{}, "no candidate host for " + CopyName(request, c.vnode, c.copy)};
    }
    partial.node_map[c.vnode][c.copy] = hosts.front();
  }
  return {std::move(partial.node_map), {}};
}

LinkMapResult greedy_link_map(const SubstrateNetwork& substrate, const SubstrateState& state,
                              const ExpandedRequest& expanded,
                              const std::vector<std::vector<int>>& node_map,
                              const HeuristicConfig& config) {
  return LinkMapper(substrate, state, expanded, node_map, config).Run();
}

Outcome solve_greedy(const SubstrateNetwork& substrate, const SubstrateState& state,
                     const VnRequest& request, ExpansionPolicy policy,
                     const HeuristicConfig& config) {
  const ExpandedRequest expanded = expand_request(request, policy);
  NodeMapResult nodes = greedy_node_map(substrate, state, expanded, config);
  if (!nodes.ok()) return Outcome::Rejected(nodes.rejection);
  LinkMapResult links = greedy_link_map(substrate, state, expanded, nodes.node_map, config);
  if (!links.ok()) return Outcome::Rejected(links.rejection);
  Embedding emb;
  emb.node_map = std::move(nodes.node_map);
  emb.link_map = std::move(links.link_map);
  emb.cost = embedding_cost(substrate, request, emb);
  emb.revenue = request_revenue(request);
  return Outcome::Embedded(std::move(emb));
}

}  // namespace secvne
