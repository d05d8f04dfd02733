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

#ifndef SECVNE_STATE_H_
#define SECVNE_STATE_H_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "secvne/types.h"

namespace secvne {

struct Embedding;
struct ExpandedRequest;

// A virtual node copy currently resident on a substrate node.
struct Placement {
  std::string tenant;
  std::string request_id;
  std::string vnode;
  int copy = 0;
  std::set<std::string> avoid_tenants;

  friend bool operator==(const Placement&, const Placement&) = default;
};

// Residual capacities and placements of one substrate under a set of active
// embeddings. Single owner; not internally synchronized.
//
// Residuals are a pure function of the active set: each resource keeps the
// per-request charge keyed by request id and the residual is recomputed as
// capacity minus the charges summed in key order. Releasing therefore
// restores the previous residual bit for bit, whatever the interleaving.
class SubstrateState {
 public:
  explicit SubstrateState(const SubstrateNetwork& substrate);
  SubstrateState() = default;

  double residual_cpu(int u) const { return residual_cpu_[u]; }
  double residual_bw(int l) const { return residual_bw_[l]; }
  double capacity_cpu(int u) const { return capacity_cpu_[u]; }
  double capacity_bw(int l) const { return capacity_bw_[l]; }
  const std::vector<double>& residual_cpu() const { return residual_cpu_; }
  const std::vector<double>& residual_bw() const { return residual_bw_; }
  const std::vector<Placement>& placements(int u) const { return placements_[u]; }

  bool is_active(const std::string& request_id) const {
    return active_.count(request_id) != 0;
  }
  std::size_t num_active() const { return active_.size(); }

  // Fraction of total capacity currently charged, 0 when the total is 0.
  double node_utilization() const;
  double link_utilization() const;

  friend bool operator==(const SubstrateState& a, const SubstrateState& b) {
    return a.residual_cpu_ == b.residual_cpu_ && a.residual_bw_ == b.residual_bw_ &&
           a.placements_ == b.placements_ && a.active_ == b.active_;
  }

 private:
  struct ActiveEmbedding {
    std::vector<std::vector<int>> node_map;
    std::vector<std::vector<std::vector<int>>> link_map;
    std::vector<int> nodes;  // charged nodes
    std::vector<int> links;  // charged links
    friend bool operator==(const ActiveEmbedding&, const ActiveEmbedding&) = default;
  };

  void recompute_node(int u);
  void recompute_link(int l);

  std::vector<double> capacity_cpu_;
  std::vector<double> capacity_bw_;
  std::vector<double> residual_cpu_;
  std::vector<double> residual_bw_;
  std::vector<std::map<std::string, double>> cpu_charges_;
  std::vector<std::map<std::string, double>> bw_charges_;
  std::vector<std::vector<Placement>> placements_;
  std::map<std::string, ActiveEmbedding> active_;

  friend void apply_embedding(SubstrateState&, const SubstrateNetwork&,
                              const ExpandedRequest&, const Embedding&);
  friend void release_embedding(SubstrateState&, const SubstrateNetwork&,
                                const VnRequest&, const Embedding&);
};

}  // namespace secvne

#endif  // SECVNE_STATE_H_
