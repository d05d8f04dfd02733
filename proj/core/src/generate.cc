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

#include "secvne/generate.h"

#include <cmath>

#include "secvne/rng.h"

namespace secvne {
namespace {

constexpr std::uint64_t kSubstrateTag = 0x5355425354524154ULL;  // "SUBSTRAT"
constexpr std::uint64_t kRequestTag = 0x5245515545535421ULL;    // "REQUEST!"

void CheckRange(const IntRange& r, const char* what) {
  if (r.lo > r.hi) throw InvalidInput(std::string("empty range for ") + what);
}

void CheckProbability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput(std::string(what) + " must be in [0,1]");
}

}  // namespace

std::string tenant_name(int k) { return "t" + std::to_string(k); }

SubstrateNetwork generate_substrate(const GenSubstrateConfig& config, std::uint64_t seed) {
  if (config.n_nodes < 1 || config.n_clouds < 1) {
    throw InvalidInput("n_nodes and n_clouds must be positive");
  }
  CheckProbability(config.private_fraction, "private_fraction");
  CheckProbability(config.topology.waxman_alpha, "waxman alpha");
  CheckProbability(config.topology.gnp_p, "gnp p");
  if (!(config.topology.waxman_beta > 0.0)) throw InvalidInput("waxman beta must be positive");
  CheckRange(config.cpu, "cpu");
  CheckRange(config.bw, "bw");
  CheckRange(config.sec, "sec");
  CheckRange(config.trust_req, "trust_req");

  Pcg32 rng = Pcg32::Substream(seed, kSubstrateTag);
  const int n_private = static_cast<int>(std::ceil(config.private_fraction * config.n_clouds));
  std::vector<Cloud> clouds;
  for (int k = 0; k < config.n_clouds; ++k) {
    Cloud c;
    c.id = "c" + std::to_string(k);
    if (k < n_private) {
      c.kind = CloudKind::kPrivate;
      c.owner = tenant_name(k);
    }
    clouds.push_back(std::move(c));
  }

  auto cost_of = [&](int sec) {
    return config.cost_rule == CostRule::kOnePlusSec ? 1.0 + sec : 1.0;
  };

  std::vector<SubstrateNode> nodes;
  std::vector<std::pair<double, double>> position;
  for (int u = 0; u < config.n_nodes; ++u) {
    const double x = rng.uniform();
    const double y = rng.uniform();
    position.emplace_back(x, y);
    SubstrateNode n;
    n.id = "s" + std::to_string(u);
    n.cpu = rng.uniform_int(config.cpu.lo, config.cpu.hi);
    n.sec = SecurityLevel(rng.uniform_int(config.sec.lo, config.sec.hi));
    n.trust_req = SecurityLevel(rng.uniform_int(config.trust_req.lo, config.trust_req.hi));
    n.cloud = clouds[u % config.n_clouds].id;
    n.unit_cost = cost_of(n.sec.value);
    nodes.push_back(std::move(n));
  }

  std::vector<SubstrateLink> links;
  const double max_distance = std::sqrt(2.0);
  for (int u = 0; u < config.n_nodes; ++u) {
    for (int v = u + 1; v < config.n_nodes; ++v) {
      double p = config.topology.gnp_p;
      if (config.topology.kind == TopologyKind::kWaxman) {
        const double d = std::hypot(position[u].first - position[v].first,
                                    position[u].second - position[v].second);
        p = config.topology.waxman_alpha *
            std::exp(-d / (config.topology.waxman_beta * max_distance));
      }
      if (!rng.bernoulli(p)) continue;
      SubstrateLink l;
      l.endpoints = {nodes[u].id, nodes[v].id};
      l.id = nodes[u].id + "-" + nodes[v].id;
      l.bw = rng.uniform_int(config.bw.lo, config.bw.hi);
      l.sec = SecurityLevel(rng.uniform_int(config.sec.lo, config.sec.hi));
      l.unit_cost = cost_of(l.sec.value);
      links.push_back(std::move(l));
    }
  }
  return SubstrateNetwork(std::move(clouds), std::move(nodes), std::move(links));
}

VnRequest generate_request(const GenRequestConfig& config, const std::string& tenant,
                           std::uint64_t seed, const std::string& id) {
  CheckRange(config.n_nodes, "n_nodes");
  CheckRange(config.cpu, "cpu");
  CheckRange(config.bw, "bw");
  CheckRange(config.trust, "trust");
  if (config.n_nodes.lo < 1) throw InvalidInput("requests need at least one node");
  CheckProbability(config.link_prob, "link_prob");
  CheckProbability(config.sensitive_prob, "sensitive_prob");
  CheckProbability(config.conflict_prob, "conflict_prob");

  Pcg32 rng = Pcg32::Substream(seed, kRequestTag);
  const int n = rng.uniform_int(config.n_nodes.lo, config.n_nodes.hi);
  std::vector<VirtualNode> nodes;
  for (int i = 0; i < n; ++i) {
    VirtualNode v;
    v.id = "v" + std::to_string(i);
    v.cpu = rng.uniform_int(config.cpu.lo, config.cpu.hi);
    v.sec_dem = SecurityLevel(rng.weighted(config.sec_dem_weights));
    v.trust = SecurityLevel(rng.uniform_int(config.trust.lo, config.trust.hi));
    v.sensitive = rng.bernoulli(config.sensitive_prob);
    v.rep = rng.weighted(config.node_rep_weights);
    nodes.push_back(std::move(v));
  }
  std::vector<VirtualLink> links;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!rng.bernoulli(config.link_prob)) continue;
      VirtualLink l;
      l.endpoints = {nodes[i].id, nodes[j].id};
      l.bw = rng.uniform_int(config.bw.lo, config.bw.hi);
      l.sec_dem = SecurityLevel(rng.weighted(config.sec_dem_weights));
      l.rep = rng.weighted(config.link_rep_weights);
      links.push_back(std::move(l));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.bernoulli(config.conflict_prob)) nodes[i].conflicts.insert(nodes[j].id);
    }
  }
  return VnRequest(id, tenant, std::move(nodes), std::move(links));
}

}  // namespace secvne
