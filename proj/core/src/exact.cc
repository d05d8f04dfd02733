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

#include "secvne/exact.h"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <tuple>

#include "secvne/heuristic.h"

namespace secvne {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct BudgetHit {};

class PathEnumerator {
 public:
  PathEnumerator(const SubstrateNetwork& substrate, const SubstrateState& state, int to,
                 SecurityLevel min_sec, double min_bw, std::int64_t max_paths)
      : substrate_(substrate),
        state_(state),
        to_(to),
        min_sec_(min_sec),
        min_bw_(min_bw),
        max_paths_(max_paths),
        on_path_(substrate.num_nodes(), false) {
    neighbors_.resize(substrate.num_nodes());
    for (int u = 0; u < substrate.num_nodes(); ++u) {
      for (const Incidence& inc : substrate.incident(u)) {
        const SubstrateLink& link = substrate.link(inc.link);
        if (link.sec < min_sec_ || state_.residual_bw(inc.link) < min_bw_) continue;
        neighbors_[u].push_back(inc);
      }
      std::sort(neighbors_[u].begin(), neighbors_[u].end(),
                [&](const Incidence& a, const Incidence& b) {
                  return substrate.node_rank(a.neighbor) < substrate.node_rank(b.neighbor);
                });
    }
  }

  std::vector<Path> Run(int from) {
    if (from == to_) return {Path{}};
    from_ = from;
    on_path_[from] = true;
    Visit(from);
    return std::move(out_);
  }

 private:
  void Visit(int u) {
    for (const Incidence& inc : neighbors_[u]) {
      if (on_path_[inc.neighbor]) continue;
      current_.push_back(inc.link);
      if (inc.neighbor == to_) {
        if (static_cast<std::int64_t>(out_.size()) >= max_paths_) {
          throw PathBudgetExceeded("more than " + std::to_string(max_paths_) +
                                   " simple paths from " + substrate_.node(from_).id +
                                   " to " + substrate_.node(to_).id);
        }
        out_.push_back(current_);
      } else {
        on_path_[inc.neighbor] = true;
        Visit(inc.neighbor);
        on_path_[inc.neighbor] = false;
      }
      current_.pop_back();
    }
  }

  const SubstrateNetwork& substrate_;
  const SubstrateState& state_;
  int from_ = 0;
  int to_;
  SecurityLevel min_sec_;
  double min_bw_;
  std::int64_t max_paths_;
  std::vector<std::vector<Incidence>> neighbors_;
  std::vector<bool> on_path_;
  Path current_;
  std::vector<Path> out_;
};

struct PathSet {
  std::vector<Path> paths;
  std::vector<double> costs;
  double min_cost = kInf;
};

class ExactSearch {
 public:
  ExactSearch(const SubstrateNetwork& substrate, const SubstrateState& state,
              const ExpandedRequest& expanded, const SearchBudget& budget, double upper_bound)
      : substrate_(substrate),
        state_(state),
        expanded_(expanded),
        request_(expanded.request),
        budget_(budget),
        bound_(upper_bound) {}

  Outcome Run() {
    if (auto reason = Precheck()) return Outcome::Rejected(*reason);
    host_.resize(request_.num_nodes());
    for (int i = 0; i < request_.num_nodes(); ++i) {
      host_[i].assign(expanded_.num_copies(i), -1);
    }
    link_map_.resize(request_.num_links());
    for (int l = 0; l < request_.num_links(); ++l) link_map_[l].resize(expanded_.num_paths(l));
    cpu_used_.assign(substrate_.num_nodes(), 0.0);
    bw_used_.assign(substrate_.num_links(), 0.0);
    link_taken_.assign(request_.num_links(), std::vector<bool>(substrate_.num_links(), false));

    node_suffix_.assign(expanded_.copies.size() + 1, 0.0);
    for (int c = static_cast<int>(expanded_.copies.size()) - 1; c >= 0; --c) {
      node_suffix_[c] = node_suffix_[c + 1] + min_copy_cost_[expanded_.copies[c].vnode];
    }

    try {
      PlaceCopy(0, 0.0);
    } catch (const BudgetHit&) {
      return Outcome::BudgetExceeded("search exceeded " +
                                     std::to_string(budget_.max_partial_states) +
                                     " partial states");
    } catch (const PathBudgetExceeded& e) {
      return Outcome::BudgetExceeded(e.what());
    }
    if (!have_best_) return Outcome::Rejected("no embedding satisfies all constraints");
    best_.cost = best_cost_;
    best_.revenue = request_revenue(request_);
    return Outcome::Embedded(std::move(best_));
  }

 private:
  // Rejects early when some candidate set is empty, naming the filter that
  // emptied it.
  std::optional<std::string> Precheck() {
    candidates_.assign(request_.num_nodes(), {});
    min_copy_cost_.assign(request_.num_nodes(), kInf);
    std::vector<int> by_rank(substrate_.num_nodes());
    std::iota(by_rank.begin(), by_rank.end(), 0);
    std::sort(by_rank.begin(), by_rank.end(), [&](int a, int b) {
      return substrate_.node_rank(a) < substrate_.node_rank(b);
    });

    for (int i = 0; i < request_.num_nodes(); ++i) {
      const VirtualNode& v = request_.node(i);
      std::vector<int> remaining = by_rank;
      auto narrow = [&](ViolationCode code, auto keep) -> std::optional<std::string> {
        std::erase_if(remaining, [&](int u) { return !keep(u); });
        if (remaining.empty()) {
          return "no feasible host for " + v.id + " (" + std::string(to_string(code)) + ")";
        }
        return std::nullopt;
      };
      auto filter = [&](ViolationCode code) {
        return [&, code](int u) {
          auto failed = placement_filter(substrate_, state_, request_, i, u);
          return !failed || *failed != code;
        };
      };
      if (auto r = narrow(ViolationCode::kNodeSecurity, filter(ViolationCode::kNodeSecurity))) return r;
      if (auto r = narrow(ViolationCode::kTrustHarm, filter(ViolationCode::kTrustHarm))) return r;
      if (auto r = narrow(ViolationCode::kSensitivity, filter(ViolationCode::kSensitivity))) return r;
      if (auto r = narrow(ViolationCode::kTenantAvoidance,
                          [&](int u) { return !placement_filter(substrate_, state_, request_, i, u); })) {
        return r;
      }
      if (auto r = narrow(ViolationCode::kNodeCapacity,
                          [&](int u) { return v.cpu <= state_.residual_cpu(u); })) {
        return r;
      }
      if (static_cast<int>(remaining.size()) < expanded_.num_copies(i)) {
        return "not enough distinct hosts for the copies of " + v.id + " (NodeReplication)";
      }
      if (expanded_.cross_cloud_applies(i)) {
        std::set<int> clouds;
        for (int u : remaining) clouds.insert(substrate_.cloud_index_of(u));
        if (static_cast<int>(clouds.size()) < expanded_.num_copies(i)) {
          return "not enough distinct clouds for the copies of " + v.id + " (CrossCloud)";
        }
      }
      for (int u : remaining) {
        min_copy_cost_[i] = std::min(min_copy_cost_[i], v.cpu * substrate_.node(u).unit_cost);
      }
      candidates_[i] = std::move(remaining);
    }

    static_link_bound_.assign(request_.num_links(), 0.0);
    for (int l = 0; l < request_.num_links(); ++l) {
      const VirtualLink& vl = request_.link(l);
      auto [i, j] = request_.link_ends(l);
      bool secure_link = false;
      double cheapest = kInf;
      for (int e = 0; e < substrate_.num_links(); ++e) {
        if (substrate_.link(e).sec < vl.sec_dem) continue;
        secure_link = true;
        if (state_.residual_bw(e) < vl.bw) continue;
        cheapest = std::min(cheapest, vl.bw * substrate_.link(e).unit_cost);
      }
      bool may_colocate = false;
      if (!request_.in_conflict(i, j)) {
        for (int u : candidates_[i]) {
          if (std::find(candidates_[j].begin(), candidates_[j].end(), u) != candidates_[j].end()) {
            may_colocate = true;
            break;
          }
        }
      }
      if (may_colocate) continue;
      if (cheapest == kInf) {
        return "no feasible path for virtual link " + vl.endpoints.first + "-" +
               vl.endpoints.second + " (" + (secure_link ? "LinkCapacity" : "PathSecurity") + ")";
      }
      static_link_bound_[l] = cheapest;
    }
    return std::nullopt;
  }

  const PathSet& Paths(int vlink, int from, int to) {
    const VirtualLink& vl = request_.link(vlink);
    auto key = std::make_tuple(from, to, vl.sec_dem.value, vl.bw);
    auto it = path_cache_.find(key);
    if (it != path_cache_.end()) return it->second;
    PathSet set;
    set.paths = all_simple_paths(substrate_, state_, from, to, vl.sec_dem, vl.bw,
                                 budget_.max_paths_per_pair);
    for (const Path& path : set.paths) {
      Path sorted = path;
      std::sort(sorted.begin(), sorted.end());
      double cost = 0.0;
      for (int e : sorted) cost += vl.bw * substrate_.link(e).unit_cost;
      set.costs.push_back(cost);
      set.min_cost = std::min(set.min_cost, cost);
    }
    return path_cache_.emplace(key, std::move(set)).first->second;
  }

  void Tick() {
    if (++states_ > budget_.max_partial_states) throw BudgetHit{};
  }

  bool Prune(double lower_bound) const {
    return have_best_ ? lower_bound >= best_cost_ : lower_bound > bound_;
  }

  double LinkBoundDuringPlacement() {
    double sum = 0.0;
    for (const Commodity& c : expanded_.commodities) {
      auto [i, j] = request_.link_ends(c.vlink);
      if (host_[i][0] >= 0 && host_[j][0] >= 0) {
        if (host_[i][0] == host_[j][0]) continue;
        sum += Paths(c.vlink, host_[i][0], host_[j][0]).min_cost;
      } else {
        sum += static_link_bound_[c.vlink];
      }
    }
    return sum;
  }

  bool CanHost(int vnode, int copy, int u) const {
    for (int k = 0; k < copy; ++k) {
      if (host_[vnode][k] == u) return false;
      if (expanded_.cross_cloud_applies(vnode) &&
          substrate_.cloud_index_of(host_[vnode][k]) == substrate_.cloud_index_of(u)) {
        return false;
      }
    }
    for (int j = 0; j < request_.num_nodes(); ++j) {
      if (!request_.in_conflict(vnode, j)) continue;
      for (int h : host_[j]) {
        if (h == u) return false;
      }
    }
    return cpu_used_[u] + request_.node(vnode).cpu <= state_.residual_cpu(u);
  }

  void PlaceCopy(std::size_t idx, double acc) {
    Tick();
    if (idx == expanded_.copies.size()) {
      StartRouting(acc);
      return;
    }
    const auto [vnode, copy] = expanded_.copies[idx];
    const double cpu = request_.node(vnode).cpu;
    for (int u : candidates_[vnode]) {
      if (!CanHost(vnode, copy, u)) continue;
      const double before = cpu_used_[u];
      host_[vnode][copy] = u;
      cpu_used_[u] = before + cpu;
      const double next = acc + cpu * substrate_.node(u).unit_cost;
      if (!Prune(next + node_suffix_[idx + 1] + LinkBoundDuringPlacement())) {
        PlaceCopy(idx + 1, next);
      }
      cpu_used_[u] = before;
      host_[vnode][copy] = -1;
    }
  }

  void StartRouting(double acc) {
    const std::size_t n = expanded_.commodities.size();
    route_suffix_.assign(n + 1, 0.0);
    for (int c = static_cast<int>(n) - 1; c >= 0; --c) {
      const Commodity& com = expanded_.commodities[c];
      auto [i, j] = request_.link_ends(com.vlink);
      route_suffix_[c] = route_suffix_[c + 1] + Paths(com.vlink, host_[i][0], host_[j][0]).min_cost;
    }
    if (Prune(acc + route_suffix_[0])) return;
    RouteCommodity(0, acc);
  }

  void RouteCommodity(std::size_t idx, double acc) {
    Tick();
    if (idx == expanded_.commodities.size()) {
      Leaf();
      return;
    }
    const auto [vlink, p] = expanded_.commodities[idx];
    auto [i, j] = request_.link_ends(vlink);
    const double bw = request_.link(vlink).bw;
    const PathSet& set = Paths(vlink, host_[i][0], host_[j][0]);
    std::vector<bool>& taken = link_taken_[vlink];
    for (std::size_t k = 0; k < set.paths.size(); ++k) {
      const Path& path = set.paths[k];
      const double next = acc + set.costs[k];
      if (Prune(next + route_suffix_[idx + 1])) continue;
      bool ok = true;
      for (int e : path) {
        if (taken[e] || bw_used_[e] + bw > state_.residual_bw(e)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      std::vector<double> saved;
      saved.reserve(path.size());
      for (int e : path) {
        saved.push_back(bw_used_[e]);
        bw_used_[e] += bw;
        taken[e] = true;
      }
      link_map_[vlink][p] = path;
      RouteCommodity(idx + 1, next);
      for (std::size_t s = 0; s < path.size(); ++s) {
        bw_used_[path[s]] = saved[s];
        taken[path[s]] = false;
      }
    }
    link_map_[vlink][p].clear();
  }

  void Leaf() {
    Embedding emb;
    emb.node_map = host_;
    emb.link_map = link_map_;
    const double cost = embedding_cost(substrate_, request_, emb);
    const bool better = have_best_ ? cost < best_cost_ : cost <= bound_;
    if (!better) return;
    best_ = std::move(emb);
    best_cost_ = cost;
    have_best_ = true;
  }

  const SubstrateNetwork& substrate_;
  const SubstrateState& state_;
  const ExpandedRequest& expanded_;
  const VnRequest& request_;
  SearchBudget budget_;
  double bound_;

  std::vector<std::vector<int>> candidates_;
  std::vector<double> min_copy_cost_;
  std::vector<double> static_link_bound_;
  std::vector<double> node_suffix_;
  std::vector<double> route_suffix_;
  std::map<std::tuple<int, int, int, double>, PathSet> path_cache_;

  std::vector<std::vector<int>> host_;
  std::vector<std::vector<Path>> link_map_;
  std::vector<double> cpu_used_;
  std::vector<double> bw_used_;
  std::vector<std::vector<bool>> link_taken_;

  std::int64_t states_ = 0;
  bool have_best_ = false;
  double best_cost_ = kInf;
  Embedding best_;
};

}  // namespace

std::vector<Path> all_simple_paths(const SubstrateNetwork& substrate,
                                   const SubstrateState& state, int from, int to,
                                   SecurityLevel min_sec, double min_bw,
                                   std::int64_t max_paths) {
  if (from < 0 || from >= substrate.num_nodes() || to < 0 || to >= substrate.num_nodes()) {
    throw UnknownId("path endpoints out of range");
  }
  return PathEnumerator(substrate, state, to, min_sec, min_bw, max_paths).Run(from);
}

Outcome solve_exact(const SubstrateNetwork& substrate, const SubstrateState& state,
                    const VnRequest& request, ExpansionPolicy policy,
                    const ExactOptions& options) {
  const ExpandedRequest expanded = expand_request(request, policy);
  double bound = kInf;
  if (options.seed_with_greedy) {
    Outcome greedy = solve_greedy(substrate, state, request, policy);
    if (greedy.embedded()) bound = greedy.embedding.cost;
  }
  return ExactSearch(substrate, state, expanded, options.budget, bound).Run();
}

}  // namespace secvne
