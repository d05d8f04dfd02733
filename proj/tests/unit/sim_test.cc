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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "secvne/io.h"
#include "secvne/sim.h"

namespace secvne {
namespace {

SubstrateNetwork SmallSubstrate(std::uint64_t seed = 5) {
  GenSubstrateConfig config;
  config.n_nodes = 10;
  config.n_clouds = 3;
  config.cpu = {20, 40};
  config.bw = {20, 40};
  return generate_substrate(config, seed);
}

SimConfig BusyConfig(std::uint64_t seed = 9) {
  SimConfig config;
  config.seed = seed;
  config.duration = 2000;
  config.arrival_rate = 0.08;
  config.mean_lifetime = 400;
  config.n_tenants = 3;
  return config;
}

TEST(Config, Check) {
  SimConfig config;
  EXPECT_NO_THROW(config.check());
  config.arrival_rate = 0;
  EXPECT_THROW(config.check(), InvalidInput);
  config = SimConfig();
  config.duration = -1;
  EXPECT_THROW(config.check(), InvalidInput);
  config = SimConfig();
  config.mean_lifetime = 0;
  EXPECT_THROW(config.check(), InvalidInput);
  config = SimConfig();
  config.n_tenants = 0;
  EXPECT_THROW(config.check(), InvalidInput);
}

TEST(Events, TieBreaks) {
  SimEvent dep{5.0, EventKind::kDeparture, 7, std::nullopt, "r7"};
  SimEvent arr{5.0, EventKind::kArrival, 3, std::nullopt, "r3"};
  EXPECT_TRUE(event_before(dep, arr));
  EXPECT_FALSE(event_before(arr, dep));
  SimEvent early{4.0, EventKind::kArrival, 9, std::nullopt, "r9"};
  EXPECT_TRUE(event_before(early, dep));
  // Same time and kind: request id order, which is string order.
  SimEvent a10{6.0, EventKind::kArrival, 10, std::nullopt, "r10"};
  SimEvent a2{6.0, EventKind::kArrival, 2, std::nullopt, "r2"};
  EXPECT_TRUE(event_before(a10, a2));
  EXPECT_EQ(request_id_for(12), "r12");
}

TEST(Workload, ShapeAndOrder) {
  const auto s = SmallSubstrate();
  const auto config = BusyConfig();
  const auto events = generate_workload(config, s);
  ASSERT_FALSE(events.empty());
  EXPECT_TRUE(std::is_sorted(events.begin(), events.end(), event_before));
  std::map<std::string, int> arrivals, departures;
  for (const auto& e : events) {
    if (e.kind == EventKind::kArrival) {
      ASSERT_TRUE(e.request.has_value());
      EXPECT_EQ(e.request->id(), e.request_id);
      EXPECT_EQ(e.request->arrival(), e.time);
      EXPECT_LE(e.time, config.duration);
      ++arrivals[e.request_id];
    } else {
      EXPECT_FALSE(e.request.has_value());
      ++departures[e.request_id];
    }
  }
  EXPECT_EQ(arrivals, departures);
  for (const auto& [id, n] : arrivals) EXPECT_EQ(n, 1) << id;
}

TEST(Workload, ArrivalCountMatchesRate) {
  const auto s = SmallSubstrate();
  SimConfig config;
  config.duration = 100000;
  config.arrival_rate = 0.05;
  const auto events = generate_workload(config, s);
  const auto n = std::count_if(events.begin(), events.end(),
                               [](const SimEvent& e) { return e.kind == EventKind::kArrival; });
  // Poisson(5000): five standard deviations.
  EXPECT_NEAR(static_cast<double>(n), 5000.0, 5 * std::sqrt(5000.0));
}

TEST(Workload, LongerRunKeepsThePrefix) {
  const auto s = SmallSubstrate();
  auto config = BusyConfig();
  const auto short_events = generate_workload(config, s);
  config.duration *= 2;
  const auto long_events = generate_workload(config, s);
  const double horizon = config.duration / 2;
  auto prefix = [&](const std::vector<SimEvent>& events) {
    std::vector<SimEvent> out;
    for (const auto& e : events) {
      if (e.time <= horizon) out.push_back(e);
    }
    return out;
  };
  EXPECT_EQ(prefix(short_events), prefix(long_events));
  EXPECT_GT(long_events.size(), short_events.size());
}

TEST(Simulation, Deterministic) {
  const auto s = SmallSubstrate();
  const auto a = run_simulation(s, BusyConfig());
  const auto b = run_simulation(s, BusyConfig());
  EXPECT_EQ(a, b);
  EXPECT_EQ(write_metrics_csv(a), write_metrics_csv(b));
  EXPECT_NE(a, run_simulation(s, BusyConfig(10)));
}

TEST(Simulation, TracePrefixSurvivesLongerRun) {
  const auto s = SmallSubstrate();
  auto config = BusyConfig();
  const auto short_run = run_simulation(s, config);
  config.duration *= 2;
  const auto long_run = run_simulation(s, config);
  const double horizon = config.duration / 2;
  auto prefix = [&](const Metrics& m) {
    std::vector<TraceRow> out;
    for (const auto& row : m.trace) {
      if (row.time <= horizon) out.push_back(row);
    }
    return out;
  };
  EXPECT_EQ(prefix(short_run), prefix(long_run));
}

TEST(Simulation, ConservationAndDrain) {
  for (Engine engine : {Engine::kGreedy, Engine::kExact}) {
    SCOPED_TRACE(engine == Engine::kGreedy ? "greedy" : "exact");
    const auto s = SmallSubstrate();
    auto config = BusyConfig();
    config.engine = engine;
    if (engine == Engine::kExact) {
      config.duration = 600;
      config.workload.n_nodes = {2, 3};
    }
    const auto result = run_simulation_with_state(s, config);
    const Metrics& m = result.metrics;
    EXPECT_GT(m.arrived, 0);
    EXPECT_GT(m.accepted, 0);
    EXPECT_EQ(m.arrived, m.accepted + m.rejected);
    EXPECT_LE(m.budget_exceeded, m.rejected);
    const auto released = std::count_if(m.trace.begin(), m.trace.end(), [](const TraceRow& r) {
      return r.status == TraceStatus::kReleased;
    });
    EXPECT_EQ(released, m.accepted);
    EXPECT_EQ(static_cast<std::int64_t>(m.trace.size()), m.arrived + m.accepted);
    for (const auto& row : m.trace) {
      EXPECT_GE(row.node_utilization, 0.0);
      EXPECT_LE(row.node_utilization, 1.0);
      EXPECT_GE(row.link_utilization, 0.0);
      EXPECT_LE(row.link_utilization, 1.0);
    }
    // Bit-exact: residuals go back to capacities.
    EXPECT_EQ(result.final_state, SubstrateState(s));
    for (int u = 0; u < s.num_nodes(); ++u) {
      EXPECT_EQ(result.final_state.residual_cpu(u), s.node(u).cpu);
    }
    for (int l = 0; l < s.num_links(); ++l) {
      EXPECT_EQ(result.final_state.residual_bw(l), s.link(l).bw);
    }
    EXPECT_EQ(m.trace.back().node_utilization, 0.0);
    EXPECT_EQ(m.trace.back().link_utilization, 0.0);
  }
}

TEST(Simulation, ZeroDemandAcceptsEverything) {
  GenSubstrateConfig sconfig;
  sconfig.n_nodes = 8;
  sconfig.trust_req = {0, 0};
  const auto s = generate_substrate(sconfig, 3);
  auto config = BusyConfig();
  config.workload.cpu = {0, 0};
  config.workload.bw = {0, 0};
  config.workload.sec_dem_weights = {1, 0, 0, 0};
  config.workload.trust = {0, 0};
  config.workload.sensitive_prob = 0;
  config.workload.node_rep_weights = {1, 0, 0};
  config.workload.link_rep_weights = {1, 0, 0};
  config.workload.conflict_prob = 0;
  const auto m = run_simulation(s, config);
  EXPECT_GT(m.arrived, 0);
  EXPECT_EQ(m.acceptance_ratio, 1.0);
}

TEST(Summary, MatchesOnlineRun) {
  const auto s = SmallSubstrate();
  const auto m = run_simulation(s, BusyConfig());
  EXPECT_EQ(summarize_metrics(m.trace), m);
}

TEST(Summary, Aggregates) {
  std::vector<TraceRow> trace = {
      {0, EventKind::kArrival, "r0", TraceStatus::kAccepted, 4, 6, 0.5, 0.25},
      {2, EventKind::kArrival, "r1", TraceStatus::kBudgetExceeded, 0, 0, 0.5, 0.25},
      {4, EventKind::kDeparture, "r0", TraceStatus::kReleased, 0, 0, 0, 0},
  };
  const auto m = summarize_metrics(trace);
  EXPECT_EQ(m.arrived, 2);
  EXPECT_EQ(m.accepted, 1);
  EXPECT_EQ(m.rejected, 1);
  EXPECT_EQ(m.budget_exceeded, 1);
  EXPECT_EQ(m.acceptance_ratio, 0.5);
  EXPECT_EQ(m.revenue_cost_ratio, 1.5);
  // 0.5 held over [0, 4] of a 4-unit run.
  EXPECT_DOUBLE_EQ(m.avg_node_utilization, 0.5);
  EXPECT_DOUBLE_EQ(m.avg_link_utilization, 0.25);
}

TEST(Summary, EmptyAndMalformed) {
  EXPECT_EQ(summarize_metrics({}), Metrics{});
  std::vector<TraceRow> backwards = {
      {3, EventKind::kArrival, "r0", TraceStatus::kRejected, 0, 0, 0, 0},
      {1, EventKind::kArrival, "r1", TraceStatus::kRejected, 0, 0, 0, 0},
  };
  EXPECT_THROW(summarize_metrics(backwards), InvalidInput);
  std::vector<TraceRow> stray = {
      {1, EventKind::kDeparture, "r0", TraceStatus::kReleased, 0, 0, 0, 0},
  };
  EXPECT_THROW(summarize_metrics(stray), InvalidInput);
}

TEST(Replay, GreedyNeverBeatsExact) {
  const auto s = SmallSubstrate(7);
  auto config = BusyConfig(4);
  config.duration = 800;
  config.workload.n_nodes = {2, 4};
  const auto rows = replay_compare(s, config);
  ASSERT_FALSE(rows.empty());
  int exact_accepts = 0;
  for (const auto& row : rows) {
    SCOPED_TRACE(row.request_id);
    if (row.inconclusive) continue;
    EXPECT_TRUE(row.dominance_holds);
    if (row.greedy == OutcomeKind::kEmbedded) {
      EXPECT_EQ(row.exact, OutcomeKind::kEmbedded);
      EXPECT_LE(row.exact_cost, row.greedy_cost + 1e-9);
    }
    exact_accepts += row.exact == OutcomeKind::kEmbedded;
  }
  EXPECT_GT(exact_accepts, 0);
}

}  // namespace
}  // namespace secvne
