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

#include "secvne/state.h"

#include <algorithm>

#include "secvne/model.h"

namespace secvne {

SubstrateState::SubstrateState(const SubstrateNetwork& substrate) {
  for (const SubstrateNode& n : substrate.nodes()) capacity_cpu_.push_back(n.cpu);
  for (const SubstrateLink& l : substrate.links()) capacity_bw_.push_back(l.bw);
  residual_cpu_ = capacity_cpu_;
  residual_bw_ = capacity_bw_;
  cpu_charges_.resize(capacity_cpu_.size());
  bw_charges_.resize(capacity_bw_.size());
  placements_.resize(capacity_cpu_.size());
}

void SubstrateState::recompute_node(int u) {
  double used = 0.0;
  for (const auto& [id, amount] : cpu_charges_[u]) used += amount;
  residual_cpu_[u] = capacity_cpu_[u] - used;
}

void SubstrateState::recompute_link(int l) {
  double used = 0.0;
  for (const auto& [id, amount] : bw_charges_[l]) used += amount;
  residual_bw_[l] = capacity_bw_[l] - used;
}

double SubstrateState::node_utilization() const {
  double capacity = 0.0;
  double used = 0.0;
  for (std::size_t u = 0; u < capacity_cpu_.size(); ++u) {
    capacity += capacity_cpu_[u];
    used += capacity_cpu_[u] - residual_cpu_[u];
  }
  return capacity > 0.0 ? used / capacity : 0.0;
}

double SubstrateState::link_utilization() const {
  double capacity = 0.0;
  double used = 0.0;
  for (std::size_t l = 0; l < capacity_bw_.size(); ++l) {
    capacity += capacity_bw_[l];
    used += capacity_bw_[l] - residual_bw_[l];
  }
  return capacity > 0.0 ? used / capacity : 0.0;
}

void apply_embedding(SubstrateState& state, const SubstrateNetwork& substrate,
                     const ExpandedRequest& expanded, const Embedding& emb) {
  const VnRequest& request = expanded.request;
  if (static_cast<int>(state.capacity_cpu_.size()) != substrate.num_nodes() ||
      static_cast<int>(state.capacity_bw_.size()) != substrate.num_links()) {
    throw InvalidInput("state does not belong to this substrate");
  }
  if (state.is_active(request.id())) {
    throw Error("request '" + request.id() + "' is already embedded");
  }
  auto violations = validate_embedding(substrate, state, expanded, emb);
  if (!violations.empty()) throw EmbeddingRejected(std::move(violations));

  // Same accumulation order as the validator's capacity checks.
  std::map<int, double> cpu;
  for (const NodeCopy& c : expanded.copies) {
    cpu[emb.host(c.vnode, c.copy)] += request.node(c.vnode).cpu;
  }
  std::map<int, double> bw;
  for (const Commodity& c : expanded.commodities) {
    for (int e : emb.link_map[c.vlink][c.path]) bw[e] += request.link(c.vlink).bw;
  }

  SubstrateState::ActiveEmbedding active{emb.node_map, emb.link_map, {}, {}};
  for (const auto& [u, amount] : cpu) {
    state.cpu_charges_[u][request.id()] = amount;
    state.recompute_node(u);
    active.nodes.push_back(u);
  }
  for (const auto& [e, amount] : bw) {
    state.bw_charges_[e][request.id()] = amount;
    state.recompute_link(e);
    active.links.push_back(e);
  }
  for (const NodeCopy& c : expanded.copies) {
    const VirtualNode& v = request.node(c.vnode);
    state.placements_[emb.host(c.vnode, c.copy)].push_back(
        {request.tenant(), request.id(), v.id, c.copy, v.avoid_tenants});
  }
  state.active_.emplace(request.id(), std::move(active));
}

void release_embedding(SubstrateState& state, const SubstrateNetwork& substrate,
                       const VnRequest& request, const Embedding& emb) {
  auto it = state.active_.find(request.id());
  if (it == state.active_.end()) {
    throw Error("request '" + request.id() + "' is not embedded");
  }
  if (it->second.node_map != emb.node_map || it->second.link_map != emb.link_map) {
    throw Error("request '" + request.id() + "' was embedded with a different mapping");
  }
  (void)substrate;
  for (int u : it->second.nodes) {
    state.cpu_charges_[u].erase(request.id());
    state.recompute_node(u);
  }
  for (int e : it->second.links) {
    state.bw_charges_[e].erase(request.id());
    state.recompute_link(e);
  }
  for (auto& hosted : state.placements_) {
    std::erase_if(hosted, [&](const Placement& p) { return p.request_id == request.id(); });
  }
  state.active_.erase(it);
}

}  // namespace secvne
