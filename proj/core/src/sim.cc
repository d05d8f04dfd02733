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

#include "secvne/sim.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "secvne/rng.h"

namespace secvne {
namespace {

struct ActiveRequest {
  ExpandedRequest expanded;
  Embedding embedding;
};

Outcome Solve(const SubstrateNetwork& substrate, const SubstrateState& state,
              const VnRequest& request, const SimConfig& config, Engine engine) {
  if (engine == Engine::kExact) {
    return solve_exact(substrate, state, request, config.policy, config.exact);
  }
  return solve_greedy(substrate, state, request, config.policy, config.heuristic);
}

}  // namespace

void SimConfig::check() const {
  if (!(duration > 0.0)) throw InvalidInput("duration must be positive");
  if (!(arrival_rate > 0.0)) throw InvalidInput("arrival rate must be positive");
  if (!(mean_lifetime > 0.0)) throw InvalidInput("mean lifetime must be positive");
  if (n_tenants < 1) throw InvalidInput("n_tenants must be positive");
  if (!(beta >= 0.0)) throw InvalidInput("beta must be non-negative");
}

bool event_before(const SimEvent& a, const SimEvent& b) {
  if (a.time != b.time) return a.time < b.time;
  if (a.kind != b.kind) return a.kind == EventKind::kDeparture;
  if (a.request_id != b.request_id) return a.request_id < b.request_id;
  return a.seq < b.seq;
}

std::string request_id_for(std::uint64_t seq) { return "r" + std::to_string(seq); }

std::vector<SimEvent> generate_workload(const SimConfig& config,
                                        const SubstrateNetwork& substrate) {
  config.check();
  (void)substrate;
  std::vector<SimEvent> events;
  Pcg32 arrivals = Pcg32::Substream(config.seed, kArrivalStream);
  double t = 0.0;
  for (std::uint64_t seq = 0;; ++seq) {
    t += arrivals.exponential(config.arrival_rate);
    if (t > config.duration) break;
    Pcg32 own = Pcg32::Substream(config.seed, kRequestStreamBase + seq);
    const int tenant = own.uniform_int(0, config.n_tenants - 1);
    double lifetime = own.exponential(1.0 / config.mean_lifetime);
    if (!(lifetime > 0.0)) lifetime = std::numeric_limits<double>::min();
    const std::uint64_t content_seed = own.next64();
    const std::string id = request_id_for(seq);
    VnRequest request = generate_request(config.workload, tenant_name(tenant), content_seed, id)
                            .with_timing(t, lifetime);
    events.push_back({t, EventKind::kArrival, seq, std::move(request), id});
    events.push_back({t + lifetime, EventKind::kDeparture, seq, std::nullopt, id});
  }
  std::stable_sort(events.begin(), events.end(), event_before);
  return events;
}

void MetricsAccumulator::add(const TraceRow& row) {
  if (!metrics_.trace.empty() && row.time < last_time_) {
    throw InvalidInput("trace time goes backwards at request " + row.request_id);
  }
  if (!(row.time >= 0.0)) throw InvalidInput("trace time must be non-negative");
  node_area_ += node_util_ * (row.time - last_time_);
  link_area_ += link_util_ * (row.time - last_time_);
  last_time_ = row.time;
  node_util_ = row.node_utilization;
  link_util_ = row.link_utilization;

  if (row.event == EventKind::kArrival) {
    ++metrics_.arrived;
    switch (row.status) {
      case TraceStatus::kAccepted:
        if (!active_.insert(row.request_id).second) {
          throw InvalidInput("request " + row.request_id + " accepted twice");
        }
        ++metrics_.accepted;
        metrics_.total_revenue += row.revenue;
        metrics_.total_cost += row.cost;
        break;
      case TraceStatus::kRejected:
        ++metrics_.rejected;
        break;
      case TraceStatus::kBudgetExceeded:
        ++metrics_.rejected;
        ++metrics_.budget_exceeded;
        break;
      case TraceStatus::kReleased:
        throw InvalidInput("arrival row of " + row.request_id + " marked released");
    }
  } else {
    if (row.status != TraceStatus::kReleased || active_.erase(row.request_id) == 0) {
      throw InvalidInput("departure row of " + row.request_id + " without a live embedding");
    }
  }
  metrics_.trace.push_back(row);
}

Metrics MetricsAccumulator::finish() const {
  Metrics out = metrics_;
  out.acceptance_ratio =
      out.arrived > 0 ? static_cast<double>(out.accepted) / static_cast<double>(out.arrived) : 0.0;
  out.revenue_cost_ratio = out.total_cost > 0.0 ? out.total_revenue / out.total_cost : 0.0;
  out.avg_node_utilization = last_time_ > 0.0 ? node_area_ / last_time_ : 0.0;
  out.avg_link_utilization = last_time_ > 0.0 ? link_area_ / last_time_ : 0.0;
  return out;
}

Metrics summarize_metrics(const std::vector<TraceRow>& trace) {
  MetricsAccumulator acc;
  for (const TraceRow& row : trace) acc.add(row);
  return acc.finish();
}

SimResult run_simulation_with_state(const SubstrateNetwork& substrate,
                                    const SimConfig& config) {
  const std::vector<SimEvent> events = generate_workload(config, substrate);
  SubstrateState state(substrate);
  std::map<std::string, ActiveRequest> active;
  MetricsAccumulator acc;

  for (const SimEvent& event : events) {
    TraceRow row;
    row.time = event.time;
    row.event = event.kind;
    row.request_id = event.request_id;
    if (event.kind == EventKind::kArrival) {
      const VnRequest& request = *event.request;
      Outcome outcome = Solve(substrate, state, request, config, config.engine);
      if (outcome.embedded()) {
        ExpandedRequest expanded = expand_request(request, config.policy);
        apply_embedding(state, substrate, expanded, outcome.embedding);
        row.status = TraceStatus::kAccepted;
        row.cost = outcome.embedding.cost;
        row.revenue = request_revenue(request, config.beta);
        active.emplace(request.id(),
                       ActiveRequest{std::move(expanded), std::move(outcome.embedding)});
      } else {
        row.status = outcome.kind == OutcomeKind::kBudgetExceeded ? TraceStatus::kBudgetExceeded
                                                                  : TraceStatus::kRejected;
      }
    } else {
      auto it = active.find(event.request_id);
      if (it == active.end()) continue;  // the arrival was rejected
      release_embedding(state, substrate, it->second.expanded.request, it->second.embedding);
      active.erase(it);
      row.status = TraceStatus::kReleased;
    }
    row.node_utilization = state.node_utilization();
    row.link_utilization = state.link_utilization();
    acc.add(row);
  }
  return {acc.finish(), std::move(state)};
}

Metrics run_simulation(const SubstrateNetwork& substrate, const SimConfig& config) {
  return run_simulation_with_state(substrate, config).metrics;
}

std::vector<ReplayRow> replay_compare(const SubstrateNetwork& substrate,
                                      const SimConfig& config) {
  const std::vector<SimEvent> events = generate_workload(config, substrate);
  SubstrateState state(substrate);
  std::map<std::string, ActiveRequest> active;
  std::vector<ReplayRow> rows;

  for (const SimEvent& event : events) {
    if (event.kind == EventKind::kDeparture) {
      auto it = active.find(event.request_id);
      if (it == active.end()) continue;
      release_embedding(state, substrate, it->second.expanded.request, it->second.embedding);
      active.erase(it);
      continue;
    }
    const VnRequest& request = *event.request;
    Outcome exact = Solve(substrate, state, request, config, Engine::kExact);
    Outcome greedy = Solve(substrate, state, request, config, Engine::kGreedy);
    ReplayRow row;
    row.request_id = request.id();
    row.exact = exact.kind;
    row.greedy = greedy.kind;
    if (exact.embedded()) row.exact_cost = exact.embedding.cost;
    if (greedy.embedded()) row.greedy_cost = greedy.embedding.cost;
    if (exact.kind == OutcomeKind::kBudgetExceeded) {
      row.inconclusive = true;
    } else if (greedy.embedded()) {
      row.dominance_holds = exact.embedded() && exact.embedding.cost <= greedy.embedding.cost;
    }
    rows.push_back(row);

    if (exact.embedded()) {
      ExpandedRequest expanded = expand_request(request, config.policy);
      apply_embedding(state, substrate, expanded, exact.embedding);
      active.emplace(request.id(), ActiveRequest{std::move(expanded), std::move(exact.embedding)});
    }
  }
  return rows;
}

}  // namespace secvne
