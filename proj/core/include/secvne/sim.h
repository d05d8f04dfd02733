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

// Online arrival/departure simulation.
//
// Random streams: arrival times come from Substream(seed, kArrivalStream);
// request n (0-based) owns Substream(seed, kRequestStreamBase + n), from
// which its tenant index, lifetime and content seed are drawn in that order.
// Extending the duration therefore never changes earlier requests.

#ifndef SECVNE_SIM_H_
#define SECVNE_SIM_H_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "secvne/exact.h"
#include "secvne/generate.h"
#include "secvne/heuristic.h"

namespace secvne {

enum class Engine { kExact, kGreedy };

inline constexpr std::uint64_t kArrivalStream = 0x4152524956414c53ULL;  // "ARRIVALS"
inline constexpr std::uint64_t kRequestStreamBase = 0x1000000ULL;

struct SimConfig {
  std::uint64_t seed = 1;
  double duration = 10000.0;
  double arrival_rate = 0.04;
  double mean_lifetime = 1000.0;
  Engine engine = Engine::kGreedy;
  GenRequestConfig workload;
  // Requests draw their tenant uniformly from tenant_name(0..n_tenants-1).
  int n_tenants = 2;
  double beta = 1.0;
  ExpansionPolicy policy;
  ExactOptions exact;
  HeuristicConfig heuristic;

  // Throws InvalidInput unless rates, duration and tenant count are positive.
  void check() const;
};

enum class EventKind { kArrival, kDeparture };

struct SimEvent {
  double time = 0.0;
  EventKind kind = EventKind::kArrival;
  // Arrival index of the request the event belongs to.
  std::uint64_t seq = 0;
  // Set for arrivals; departures carry only the id.
  std::optional<VnRequest> request;
  std::string request_id;

  friend bool operator==(const SimEvent&, const SimEvent&) = default;
};

// Time, then departures before arrivals, then request id.
bool event_before(const SimEvent& a, const SimEvent& b);

std::string request_id_for(std::uint64_t seq);

// Arrivals with their departures, sorted by event_before.
std::vector<SimEvent> generate_workload(const SimConfig& config,
                                        const SubstrateNetwork& substrate);

enum class TraceStatus { kAccepted, kRejected, kBudgetExceeded, kReleased };

struct TraceRow {
  double time = 0.0;
  EventKind event = EventKind::kArrival;
  std::string request_id;
  TraceStatus status = TraceStatus::kRejected;
  // Populated for accepted arrivals.
  double cost = 0.0;
  double revenue = 0.0;
  // Utilization right after the event.
  double node_utilization = 0.0;
  double link_utilization = 0.0;

  friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

struct Metrics {
  std::int64_t arrived = 0;
  std::int64_t accepted = 0;
  // Includes budget-exceeded arrivals.
  std::int64_t rejected = 0;
  std::int64_t budget_exceeded = 0;
  double acceptance_ratio = 0.0;
  double total_revenue = 0.0;
  double total_cost = 0.0;
  // total_revenue / total_cost, 0 when nothing was charged.
  double revenue_cost_ratio = 0.0;
  // Utilization integrated over [0, time of last event].
  double avg_node_utilization = 0.0;
  double avg_link_utilization = 0.0;
  std::vector<TraceRow> trace;

  friend bool operator==(const Metrics&, const Metrics&) = default;
};

// Folds trace rows into aggregates; the online run and summarize_metrics
// share it.
class MetricsAccumulator {
 public:
  // Throws InvalidInput on time going backwards or an inconsistent release.
  void add(const TraceRow& row);
  Metrics finish() const;

 private:
  Metrics metrics_;
  double last_time_ = 0.0;
  double node_area_ = 0.0;
  double link_area_ = 0.0;
  double node_util_ = 0.0;
  double link_util_ = 0.0;
  std::set<std::string> active_;
};

Metrics summarize_metrics(const std::vector<TraceRow>& trace);

struct SimResult {
  Metrics metrics;
  // Residual state after every departure has been processed.
  SubstrateState final_state;
};

SimResult run_simulation_with_state(const SubstrateNetwork& substrate,
                                    const SimConfig& config);
Metrics run_simulation(const SubstrateNetwork& substrate, const SimConfig& config);

// Per-arrival comparison of both engines on the exact engine's state
// trajectory.
struct ReplayRow {
  std::string request_id;
  OutcomeKind exact = OutcomeKind::kRejected;
  OutcomeKind greedy = OutcomeKind::kRejected;
  double exact_cost = 0.0;
  double greedy_cost = 0.0;
  // greedy accepted => exact accepted with cost <= greedy cost.
  bool dominance_holds = true;
  // The exact engine ran out of budget, so dominance was not checked.
  bool inconclusive = false;
};

std::vector<ReplayRow> replay_compare(const SubstrateNetwork& substrate,
                                      const SimConfig& config);

}  // namespace secvne

#endif  // SECVNE_SIM_H_
