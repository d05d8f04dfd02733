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

#include <cstdint>

#include "benchmark/benchmark.h"
#include "secvne/exact.h"
#include "secvne/formulation.h"
#include "secvne/generate.h"
#include "secvne/heuristic.h"
#include "secvne/sim.h"

namespace secvne {
namespace {

SubstrateNetwork Substrate(int nodes) {
  GenSubstrateConfig config;
  config.n_nodes = nodes;
  config.n_clouds = 4;
  return generate_substrate(config, 17);
}

VnRequest Request(int nodes, std::uint64_t seed) {
  GenRequestConfig config;
  config.n_nodes = {nodes, nodes};
  return generate_request(config, tenant_name(1), seed);
}

void BM_GreedyEmbed(benchmark::State& state) {
  const SubstrateNetwork s = Substrate(static_cast<int>(state.range(0)));
  const SubstrateState idle(s);
  const VnRequest r = Request(static_cast<int>(state.range(1)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(solve_greedy(s, idle, r));
}
BENCHMARK(BM_GreedyEmbed)->Args({20, 4})->Args({100, 10})->Args({200, 10});

void BM_ExactEmbed(benchmark::State& state) {
  const SubstrateNetwork s = Substrate(static_cast<int>(state.range(0)));
  const SubstrateState idle(s);
  const VnRequest r = Request(static_cast<int>(state.range(1)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(solve_exact(s, idle, r));
}
BENCHMARK(BM_ExactEmbed)->Args({6, 3})->Args({8, 4})->Unit(benchmark::kMicrosecond);

void BM_BuildAndExportLp(benchmark::State& state) {
  const SubstrateNetwork s = Substrate(static_cast<int>(state.range(0)));
  const SubstrateState idle(s);
  const ExpandedRequest e = expand_request(Request(4, 7));
  for (auto _ : state) benchmark::DoNotOptimize(export_lp(build_model(s, idle, e)));
}
BENCHMARK(BM_BuildAndExportLp)->Arg(10)->Arg(40)->Unit(benchmark::kMicrosecond);

void BM_Simulation(benchmark::State& state) {
  const SubstrateNetwork s = Substrate(50);
  SimConfig config;
  config.duration = static_cast<double>(state.range(0));
  config.arrival_rate = 0.1;
  config.mean_lifetime = 200;
  for (auto _ : state) benchmark::DoNotOptimize(run_simulation(s, config));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(config.duration * 0.1));
}
BENCHMARK(BM_Simulation)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace secvne

BENCHMARK_MAIN();
