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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <set>
#include <sstream>
#include <string>

#include "secvne/exact.h"
#include "secvne/formulation.h"
#include "secvne/generate.h"
#include "secvne/heuristic.h"
#include "secvne/io.h"
#include "secvne/sim.h"
#include "support/fixtures.h"
#include "support/instances.h"
#include "support/oracles.h"
#include "support/violation_matrix.h"

namespace secvne {
namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  // Records the first few failures; later ones only flip the verdict.
  void Fail(const std::string& what) {
    if (pass || failures < 3) detail << (failures ? "; " : "") << what;
    pass = false;
    ++failures;
  }
  int failures = 0;
};

int g_failed = 0;

void Report(int n, const Verdict& v, const std::string& summary) {
  std::printf("AC%d %s: %s%s%s\n", n, v.pass ? "PASS" : "FAIL", summary.c_str(),
              v.pass ? "" : " | ", v.pass ? "" : v.detail.str().c_str());
  std::fflush(stdout);
  g_failed += !v.pass;
}

std::string Num(double x) {
  std::ostringstream s;
  s.precision(3);
  s << x;
  return s.str();
}

// Criteria 1 and 3 share the suite.
void SoundnessAndDominance() {
  const auto start = Clock::now();
  Verdict sound, dominance;
  int exact_accepts = 0, greedy_accepts = 0, budget = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const testing::Instance inst = testing::RandomInstance(seed);
    const auto expanded = expand_request(inst.request);
    const Outcome exact = solve_exact(inst.substrate, inst.state, inst.request);
    const Outcome greedy = solve_greedy(inst.substrate, inst.state, inst.request);
    for (const Outcome* out : {&exact, &greedy}) {
      if (!out->embedded()) continue;
      const auto violations =
          validate_embedding(inst.substrate, inst.state, expanded, out->embedding);
      if (!violations.empty()) {
        sound.Fail("seed " + std::to_string(seed) + " " +
                   std::string(to_string(violations[0].code)));
      }
    }
    exact_accepts += exact.embedded();
    greedy_accepts += greedy.embedded();
    if (exact.kind == OutcomeKind::kBudgetExceeded) {
      ++budget;
      continue;
    }
    if (greedy.embedded() && !exact.embedded()) {
      dominance.Fail("seed " + std::to_string(seed) + ": greedy accepted, exact rejected");
    } else if (greedy.embedded() && exact.embedding.cost > greedy.embedding.cost) {
      dominance.Fail("seed " + std::to_string(seed) + ": exact " + Num(exact.embedding.cost) +
                     " > greedy " + Num(greedy.embedding.cost));
    }
  }
  const double elapsed = SecondsSince(start);
  if (elapsed >= 60) sound.Fail("took " + Num(elapsed) + " s");
  Report(1, sound,
         "200 instances, exact accepted " + std::to_string(exact_accepts) + ", greedy " +
             std::to_string(greedy_accepts) + ", all validator-clean, " + Num(elapsed) + " s");
  Report(3, dominance,
         "greedy accept implies exact accept at no higher cost on " +
             std::to_string(200 - budget) + " decided instances");
}

void OracleEquivalence() {
  const auto start = Clock::now();
  Verdict v;
  testing::InstanceLimits limits;
  limits.max_substrate_nodes = 4;
  limits.max_substrate_links = 5;
  limits.max_vnodes = 3;
  limits.max_vlinks = 2;
  limits.rep_prob = 0.15;
  int feasible = 0;
  std::int64_t roundtrips = 0;
  for (std::uint64_t seed = 1000; seed < 1050; ++seed) {
    const testing::Instance inst = testing::RandomInstance(seed, limits);
    const auto expanded = expand_request(inst.request);
    const MipModel model = build_model(inst.substrate, inst.state, expanded);
    double best = std::numeric_limits<double>::infinity();
    testing::EnumerateFeasible(model, [&](std::span<const int> values, double objective) {
      best = std::min(best, objective);
      const auto emb = testing::AssignmentToEmbedding(inst.substrate, expanded, model, values);
      if (!emb) return;
      ++roundtrips;
      if (!validate_embedding(inst.substrate, inst.state, expanded, *emb).empty()) {
        v.Fail("seed " + std::to_string(seed) + ": path-shaped assignment fails validation");
      }
    });
    const Outcome exact = solve_exact(inst.substrate, inst.state, inst.request);
    if (exact.kind == OutcomeKind::kBudgetExceeded) {
      v.Fail("seed " + std::to_string(seed) + ": exact out of budget");
    } else if (exact.embedded() != std::isfinite(best)) {
      v.Fail("seed " + std::to_string(seed) + ": feasibility disagrees");
    } else if (exact.embedded() && exact.embedding.cost != best) {
      v.Fail("seed " + std::to_string(seed) + ": exact " + Num(exact.embedding.cost) +
             " vs MIP " + Num(best));
    }
    feasible += exact.embedded();
  }
  const double elapsed = SecondsSince(start);
  if (elapsed >= 300) v.Fail("took " + Num(elapsed) + " s");
  Report(2, v,
         "50 tiny instances (" + std::to_string(feasible) + " feasible), MIP minimum equals "
         "exact cost, " + std::to_string(roundtrips) + " path-shaped assignments validated, " +
             Num(elapsed) + " s");
}

void Monotonicity() {
  Verdict v;
  testing::TestRng rng(4);
  int flips = 0, raised = 0, decided = 0;
  for (std::uint64_t seed = 2000; seed < 2050; ++seed) {
    testing::Instance inst = testing::RandomInstance(seed);
    const Outcome before = solve_exact(inst.substrate, inst.state, inst.request);
    auto& req = inst.request_parts;
    const int slots = static_cast<int>(req.nodes.size() + req.links.size());
    const int pick = rng.Int(0, slots - 1);
    if (pick < static_cast<int>(req.nodes.size())) {
      req.nodes[pick].sec_dem.value += 1;
    } else {
      req.links[pick - req.nodes.size()].sec_dem.value += 1;
    }
    inst.Rebuild();
    const Outcome after = solve_exact(inst.substrate, inst.state, inst.request);
    if (before.kind == OutcomeKind::kBudgetExceeded ||
        after.kind == OutcomeKind::kBudgetExceeded) {
      continue;
    }
    ++decided;
    if (after.embedded() && !before.embedded()) {
      v.Fail("seed " + std::to_string(seed) + ": reject became accept");
    } else if (after.embedded() && after.embedding.cost < before.embedding.cost) {
      v.Fail("seed " + std::to_string(seed) + ": cost fell");
    }
    flips += before.embedded() && !after.embedded();
    raised += before.embedded() && after.embedded() &&
              after.embedding.cost > before.embedding.cost;
  }
  if (decided < 50) v.Fail(std::to_string(50 - decided) + " instances out of budget");
  Report(4, v,
         "50 sec_dem bumps, " + std::to_string(flips) + " accept->reject, " +
             std::to_string(raised) + " cost increases, none in the wrong direction");
}

bool EdgeDisjoint(const std::vector<Path>& paths) {
  std::set<int> used;
  for (const Path& p : paths) {
    for (int l : p) {
      if (!used.insert(l).second) return false;
    }
  }
  return true;
}

void SecurityFixtures() {
  Verdict v;
  std::set<ViolationCode> seen;
  for (const auto& f : testing::ViolationMatrix()) {
    const auto got = validate_embedding(f.substrate, f.state, f.expanded, f.embedding);
    if (got.size() != 1 || got[0].code != f.code) {
      v.Fail(std::string(to_string(f.code)) + " fixture yields " + std::to_string(got.size()) +
             " violations");
    }
    if (!seen.insert(f.code).second) v.Fail("duplicate fixture for " + std::string(to_string(f.code)));
  }
  if (seen.size() != std::size(kAllViolationCodes)) v.Fail("matrix misses a code");

  const SubstrateNetwork s = testing::Cf1();
  const SubstrateState idle(s);
  using Solver = std::function<Outcome(const VnRequest&, ExpansionPolicy)>;
  const std::vector<std::pair<std::string, Solver>> engines = {
      {"exact", [&](const VnRequest& r, ExpansionPolicy p) { return solve_exact(s, idle, r, p); }},
      {"greedy",
       [&](const VnRequest& r, ExpansionPolicy p) { return solve_greedy(s, idle, r, p); }},
  };
  for (const auto& [name, solve] : engines) {
    // CF-2: the sensitive node must sit in t1's private cloud.
    const Outcome cf2 = solve(testing::R1Sensitive(), {});
    if (!cf2.embedded()) {
      v.Fail("CF-2 " + name + " rejected");
    } else {
      const Cloud& cloud = s.cloud_of(cf2.embedding.host(0));
      if (cloud.kind != CloudKind::kPrivate || cloud.owner != "t1") {
        v.Fail("CF-2 " + name + " placed a outside t1's private cloud");
      }
    }
    // CF-3: both copies of a, in distinct clouds.
    const Outcome cf3 = solve(testing::R1Replicated(), testing::Policy(CrossCloudMode::kOn));
    if (!cf3.embedded() || cf3.embedding.node_map[0].size() != 2) {
      v.Fail("CF-3 " + name + " did not place two copies");
    } else if (s.cloud_index_of(cf3.embedding.host(0, 0)) ==
               s.cloud_index_of(cf3.embedding.host(0, 1))) {
      v.Fail("CF-3 " + name + " copies share a cloud");
    }
    // A replicated link between separated hosts.
    auto parts = testing::R1Parts();
    parts.nodes[0].conflicts = {"b"};
    parts.links[0].sec_dem = SecurityLevel(0);
    parts.links[0].rep = 1;
    const VnRequest rep_link = parts.Build();
    const Outcome routed = solve(rep_link, {});
    if (!routed.embedded()) {
      v.Fail("replicated link " + name + " rejected");
    } else {
      const auto& paths = routed.embedding.link_map[0];
      const int from = routed.embedding.host(0), to = routed.embedding.host(1);
      bool ok = paths.size() == 2 && EdgeDisjoint(paths);
      for (const Path& p : paths) {
        const auto nodes = path_nodes(s, from, p);
        ok = ok && !p.empty() && nodes && nodes->back() == to;
      }
      if (!ok) v.Fail("replicated link " + name + " paths are not two disjoint routes");
    }
  }
  Report(5, v,
         "12 fixtures each trigger exactly their code; CF-2 private placement, CF-3 "
         "cross-cloud copies and disjoint backup paths hold for both engines");
}

SimConfig ConservationConfig() {
  SimConfig config;
  config.seed = 2026;
  config.arrival_rate = 0.1;
  config.mean_lifetime = 200;
  config.duration = 5200;
  config.n_tenants = 3;
  return config;
}

void Conservation() {
  Verdict v;
  GenSubstrateConfig sconfig;
  sconfig.n_nodes = 20;
  sconfig.n_clouds = 3;
  const SubstrateNetwork s = generate_substrate(sconfig, 11);
  const SimConfig config = ConservationConfig();
  const std::size_t events = generate_workload(config, s).size();
  if (events < 1000) v.Fail("only " + std::to_string(events) + " events");

  const SimResult run = run_simulation_with_state(s, config);
  bool exact_residuals = run.final_state.num_active() == 0;
  for (int u = 0; u < s.num_nodes(); ++u) {
    exact_residuals = exact_residuals && run.final_state.residual_cpu(u) == s.node(u).cpu;
  }
  for (int l = 0; l < s.num_links(); ++l) {
    exact_residuals = exact_residuals && run.final_state.residual_bw(l) == s.link(l).bw;
  }
  if (!exact_residuals) v.Fail("residuals differ from capacities after drain");
  if (run.metrics.accepted == 0) v.Fail("nothing was accepted, conservation is vacuous");
  if (run.metrics.arrived != run.metrics.accepted + run.metrics.rejected) {
    v.Fail("arrived != accepted + rejected");
  }

  const std::string csv = write_metrics_csv(run.metrics);
  if (csv != write_metrics_csv(run_simulation(s, config))) v.Fail("metrics CSV differs");

  GenSubstrateConfig zconfig = sconfig;
  zconfig.trust_req = {0, 0};
  const SubstrateNetwork zs = generate_substrate(zconfig, 12);
  SimConfig zero = ConservationConfig();
  zero.duration = 1000;
  zero.workload.cpu = {0, 0};
  zero.workload.bw = {0, 0};
  zero.workload.sec_dem_weights = {1, 0, 0, 0};
  zero.workload.trust = {0, 0};
  zero.workload.sensitive_prob = 0;
  zero.workload.node_rep_weights = {1, 0, 0};
  zero.workload.link_rep_weights = {1, 0, 0};
  zero.workload.conflict_prob = 0;
  const Metrics zm = run_simulation(zs, zero);
  if (zm.arrived == 0 || zm.acceptance_ratio != 1.0) {
    v.Fail("zero-demand acceptance ratio " + Num(zm.acceptance_ratio));
  }
  Report(6, v,
         std::to_string(events) + " events, " + std::to_string(run.metrics.accepted) +
             " accepted, residuals bit-equal after drain, CSV byte-identical over two runs, "
             "zero-demand ratio " + Num(zm.acceptance_ratio));
}

void Goldens() {
  Verdict v;
  const SubstrateNetwork s = testing::Cf1();
  const SubstrateState idle(s);
  const auto expanded = expand_request(testing::R1());
  const std::string lp = export_lp(build_model(s, idle, expanded));
  if (lp != testing::ReadText(testing::DataPath("cf1.lp"))) v.Fail("cf1.lp differs");
  if (lp != export_lp(build_model(s, idle, expanded))) v.Fail("LP export not stable");
  const std::string outcome = write_outcome(s, testing::R1(), solve_exact(s, idle, testing::R1()));
  if (outcome != testing::ReadText(testing::DataPath("cf1_outcome.json"))) {
    v.Fail("cf1_outcome.json differs");
  }
  if (outcome != write_outcome(s, testing::R1(), solve_exact(s, idle, testing::R1()))) {
    v.Fail("outcome not stable");
  }
  Report(7, v, "cf1.lp and CF-1 outcome.json match the checked-in bytes");
}

void ScaleSmoke() {
  Verdict v;
  GenSubstrateConfig sconfig;
  sconfig.n_nodes = 100;
  sconfig.n_clouds = 4;
  sconfig.topology.kind = TopologyKind::kWaxman;
  const SubstrateNetwork s = generate_substrate(sconfig, 100);
  SimConfig config;
  config.seed = 8;
  config.engine = Engine::kGreedy;
  config.arrival_rate = 0.05;
  config.mean_lifetime = 500;
  config.workload.n_nodes = {10, 10};
  config.n_tenants = 4;
  // Stretch the horizon until the workload holds 500 arrivals.
  config.duration = 500 / config.arrival_rate;
  auto arrivals = [&] {
    const auto events = generate_workload(config, s);
    return std::count_if(events.begin(), events.end(),
                         [](const SimEvent& e) { return e.kind == EventKind::kArrival; });
  };
  while (arrivals() < 500) config.duration *= 1.05;

  const auto start = Clock::now();
  const Metrics m = run_simulation(s, config);
  const double elapsed = SecondsSince(start);
  if (elapsed >= 30) v.Fail("took " + Num(elapsed) + " s");
  if (m.arrived < 500) v.Fail("only " + std::to_string(m.arrived) + " arrivals");

  // A single embedding on the idle substrate stays under a second.
  const VnRequest big = generate_request(config.workload, tenant_name(1), 99);
  const auto one = Clock::now();
  solve_greedy(s, SubstrateState(s), big);
  const double single = SecondsSince(one);
  if (single >= 1) v.Fail("single request took " + Num(single) + " s");
  Report(8, v,
         "100-node Waxman, " + std::to_string(s.num_links()) + " links, " +
             std::to_string(m.arrived) + " arrivals of 10-node requests, " +
             std::to_string(m.accepted) + " accepted, " + Num(elapsed) + " s");
}

}  // namespace
}  // namespace secvne

int main() {
  using namespace secvne;
  const auto guard = [](int n, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      std::printf("AC%d FAIL: exception: %s\n", n, e.what());
      ++g_failed;
    }
  };
  guard(1, SoundnessAndDominance);
  guard(2, OracleEquivalence);
  guard(4, Monotonicity);
  guard(5, SecurityFixtures);
  guard(6, Conservation);
  guard(7, Goldens);
  guard(8, ScaleSmoke);
  return g_failed == 0 ? 0 : 1;
}
