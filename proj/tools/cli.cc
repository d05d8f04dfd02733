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

#include "cli.h"

#include <fstream>
#include <future>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "secvne/exact.h"
#include "secvne/formulation.h"
#include "secvne/generate.h"
#include "secvne/heuristic.h"
#include "secvne/io.h"
#include "secvne/sim.h"

namespace secvne::cli {
namespace {

using Json = nlohmann::ordered_json;

// Flags shared by several subcommands.
struct Options {
  std::string substrate;
  std::string request;
  std::string embedding;
  std::string out;
  std::string engine = "greedy";
  std::string cross_cloud = "auto";
  std::uint64_t seed = 1;
  double duration = 10000.0;
  double lambda = 0.04;
  double lifetime = 1000.0;
  double beta = 1.0;
  std::int64_t budget_states = 10'000'000;
  int tenants = 2;
  int sweep = 0;

  // generate
  std::string kind;
  std::string topology = "waxman";
  int nodes = 0;
  int clouds = 2;
  double private_fraction = 0.5;
  double gnp_p = 0.5;
  std::string tenant = "t0";
  std::string id = "req";
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void Emit(const Options& opt, const std::string& text, std::ostream& out) {
  if (opt.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) throw InvalidInput("cannot write '" + opt.out + "'");
  file << text;
}

ExpansionPolicy Policy(const Options& opt) {
  ExpansionPolicy policy;
  if (opt.cross_cloud == "on") policy.cross_cloud = CrossCloudMode::kOn;
  if (opt.cross_cloud == "off") policy.cross_cloud = CrossCloudMode::kOff;
  return policy;
}

ExactOptions Exact(const Options& opt) {
  ExactOptions exact;
  exact.budget.max_partial_states = opt.budget_states;
  return exact;
}

Outcome Solve(const Options& opt, Engine engine, const SubstrateNetwork& substrate,
              const VnRequest& request) {
  const SubstrateState state(substrate);
  Outcome outcome = engine == Engine::kExact
                        ? solve_exact(substrate, state, request, Policy(opt), Exact(opt))
                        : solve_greedy(substrate, state, request, Policy(opt));
  if (outcome.embedded()) outcome.embedding.revenue = request_revenue(request, opt.beta);
  return outcome;
}

int ExitFor(const Outcome& outcome) {
  switch (outcome.kind) {
    case OutcomeKind::kEmbedded:
      return kExitOk;
    case OutcomeKind::kRejected:
      return kExitRejected;
    case OutcomeKind::kBudgetExceeded:
      return kExitBudget;
  }
  return kExitUsage;
}

SimConfig Simulation(const Options& opt) {
  SimConfig config;
  config.seed = opt.seed;
  config.duration = opt.duration;
  config.arrival_rate = opt.lambda;
  config.mean_lifetime = opt.lifetime;
  config.engine = opt.engine == "exact" ? Engine::kExact : Engine::kGreedy;
  config.n_tenants = opt.tenants;
  config.beta = opt.beta;
  config.policy = Policy(opt);
  config.exact = Exact(opt);
  config.check();
  return config;
}

int Generate(const Options& opt, std::ostream& out) {
  if (opt.kind == "substrate") {
    GenSubstrateConfig config;
    if (opt.nodes > 0) config.n_nodes = opt.nodes;
    config.n_clouds = opt.clouds;
    config.private_fraction = opt.private_fraction;
    config.topology.kind = opt.topology == "gnp" ? TopologyKind::kGnp : TopologyKind::kWaxman;
    config.topology.gnp_p = opt.gnp_p;
    Emit(opt, write_substrate(generate_substrate(config, opt.seed)), out);
  } else {
    GenRequestConfig config;
    if (opt.nodes > 0) config.n_nodes = {opt.nodes, opt.nodes};
    Emit(opt, write_request(generate_request(config, opt.tenant, opt.seed, opt.id)), out);
  }
  return kExitOk;
}

int SolveCommand(const Options& opt, std::ostream& out) {
  const SubstrateNetwork substrate = parse_substrate(ReadFile(opt.substrate));
  const VnRequest request = parse_request(ReadFile(opt.request));
  const Engine engine = opt.engine == "exact" ? Engine::kExact : Engine::kGreedy;
  const Outcome outcome = Solve(opt, engine, substrate, request);
  Emit(opt, write_outcome(substrate, request, outcome), out);
  return ExitFor(outcome);
}

int ExportLp(const Options& opt, std::ostream& out) {
  const SubstrateNetwork substrate = parse_substrate(ReadFile(opt.substrate));
  const VnRequest request = parse_request(ReadFile(opt.request));
  const SubstrateState state(substrate);
  const MipModel model = build_model(substrate, state, expand_request(request, Policy(opt)));
  Emit(opt, export_lp(model), out);
  return kExitOk;
}

int Validate(const Options& opt, std::ostream& out) {
  const SubstrateNetwork substrate = parse_substrate(ReadFile(opt.substrate));
  const VnRequest request = parse_request(ReadFile(opt.request));
  const Outcome outcome = parse_outcome(ReadFile(opt.embedding), substrate, request);
  if (!outcome.embedded()) throw InvalidInput("embedding document has no mapping to validate");
  const SubstrateState state(substrate);
  const auto violations = validate_embedding(substrate, state, expand_request(request, Policy(opt)),
                                             outcome.embedding);
  Emit(opt, write_violations(violations), out);
  return violations.empty() ? kExitOk : kExitRejected;
}

int Simulate(const Options& opt, std::ostream& out, std::ostream& err) {
  const SubstrateNetwork substrate = parse_substrate(ReadFile(opt.substrate));
  const SimConfig base = Simulation(opt);
  if (opt.sweep <= 0) {
    Emit(opt, write_metrics_csv(run_simulation(substrate, base)), out);
    return kExitOk;
  }
  if (opt.out.empty()) throw InvalidInput("--sweep needs --out as a file name prefix");
  // Independent seeds, one task each; outputs are written in seed order.
  std::vector<std::future<std::string>> runs;
  for (int k = 0; k < opt.sweep; ++k) {
    SimConfig config = base;
    config.seed = base.seed + static_cast<std::uint64_t>(k);
    runs.push_back(std::async(std::launch::async, [&substrate, config] {
      return write_metrics_csv(run_simulation(substrate, config));
    }));
  }
  for (int k = 0; k < opt.sweep; ++k) {
    Options file = opt;
    file.out = opt.out + "-seed" + std::to_string(base.seed + static_cast<std::uint64_t>(k)) + ".csv";
    Emit(file, runs[k].get(), out);
    err << "wrote " << file.out << "\n";
  }
  return kExitOk;
}

Json EngineJson(const Outcome& outcome) {
  Json j;
  j["status"] = std::string(to_string(outcome.kind));
  if (outcome.embedded()) {
    j["cost"] = outcome.embedding.cost;
  } else {
    j["reason"] = outcome.reason;
  }
  return j;
}

int Compare(const Options& opt, std::ostream& out) {
  const SubstrateNetwork substrate = parse_substrate(ReadFile(opt.substrate));
  Json verdict;
  verdict["format"] = kFormatVersion;
  bool violated = false;

  if (!opt.request.empty()) {
    const VnRequest request = parse_request(ReadFile(opt.request));
    const Outcome exact = Solve(opt, Engine::kExact, substrate, request);
    const Outcome greedy = Solve(opt, Engine::kGreedy, substrate, request);
    const SubstrateState state(substrate);
    const ExpandedRequest expanded = expand_request(request, Policy(opt));
    const bool inconclusive = exact.kind == OutcomeKind::kBudgetExceeded;
    Json props;
    props["acceptance_dominance"] = inconclusive || !greedy.embedded() || exact.embedded();
    props["cost_dominance"] = inconclusive || !greedy.embedded() || !exact.embedded() ||
                              exact.embedding.cost <= greedy.embedding.cost;
    props["exact_valid"] =
        !exact.embedded() ||
        validate_embedding(substrate, state, expanded, exact.embedding).empty();
    props["greedy_valid"] =
        !greedy.embedded() ||
        validate_embedding(substrate, state, expanded, greedy.embedding).empty();
    for (const auto& [name, ok] : props.items()) violated = violated || !ok.get<bool>();
    verdict["mode"] = "single";
    verdict["request"] = request.id();
    verdict["exact"] = EngineJson(exact);
    verdict["greedy"] = EngineJson(greedy);
    verdict["properties"] = std::move(props);
    verdict["verdict"] = violated ? "violated" : inconclusive ? "inconclusive" : "holds";
  } else {
    const auto rows = replay_compare(substrate, Simulation(opt));
    int violations = 0;
    int inconclusive = 0;
    Json list = Json::array();
    for (const ReplayRow& row : rows) {
      if (!row.dominance_holds) ++violations;
      if (row.inconclusive) ++inconclusive;
      Json j;
      j["request"] = row.request_id;
      j["exact"] = std::string(to_string(row.exact));
      j["greedy"] = std::string(to_string(row.greedy));
      if (row.exact == OutcomeKind::kEmbedded) j["exact_cost"] = row.exact_cost;
      if (row.greedy == OutcomeKind::kEmbedded) j["greedy_cost"] = row.greedy_cost;
      j["dominance"] = row.inconclusive ? "inconclusive" : row.dominance_holds ? "holds" : "violated";
      list.push_back(std::move(j));
    }
    violated = violations > 0;
    verdict["mode"] = "replay";
    verdict["arrivals"] = rows.size();
    verdict["violations"] = violations;
    verdict["inconclusive"] = inconclusive;
    verdict["verdict"] = violated ? "violated" : inconclusive > 0 ? "inconclusive" : "holds";
    verdict["rows"] = std::move(list);
  }
  Emit(opt, verdict.dump(2) + "\n", out);
  return violated ? kExitDominance : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Secure and dependable virtual network embedding toolkit", "secvne"};
  app.require_subcommand(1, 1);

  const std::vector<std::string> engines{"exact", "greedy"};
  const std::vector<std::string> modes{"on", "off", "auto"};
  auto add_io = [&](CLI::App* cmd, bool request) {
    cmd->add_option("--substrate", opt.substrate, "substrate.json path")
        ->required()
        ->check(CLI::ExistingFile);
    if (request) {
      cmd->add_option("--request", opt.request, "request.json path")
          ->required()
          ->check(CLI::ExistingFile);
    }
    cmd->add_option("--out", opt.out, "write the result here instead of standard output");
  };
  auto add_policy = [&](CLI::App* cmd) {
    cmd->add_option("--policy-cross-cloud", opt.cross_cloud,
                    "backups in distinct clouds; auto = on iff some node has rep >= 1")
        ->check(CLI::IsMember(modes))
        ->capture_default_str();
  };
  auto add_engine = [&](CLI::App* cmd) {
    cmd->add_option("--engine", opt.engine, "embedding engine")
        ->check(CLI::IsMember(engines))
        ->capture_default_str();
  };
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget-states", opt.budget_states,
                    "partial states the exact engine may expand")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  auto add_beta = [&](CLI::App* cmd) {
    cmd->add_option("--beta", opt.beta, "revenue weight of bandwidth")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
  };
  auto add_sim = [&](CLI::App* cmd) {
    cmd->add_option("--seed", opt.seed, "workload seed")->capture_default_str();
    cmd->add_option("--duration", opt.duration, "simulated time horizon")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--lambda", opt.lambda, "arrival rate per time unit")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--lifetime", opt.lifetime, "mean request lifetime")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--tenants", opt.tenants, "number of tenants t0..tN-1")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  CLI::App* generate = app.add_subcommand("generate", "write a random substrate or request");
  generate->add_option("--kind", opt.kind, "what to generate")
      ->required()
      ->check(CLI::IsMember({"substrate", "request"}));
  generate->add_option("--seed", opt.seed, "generator seed")->capture_default_str();
  generate->add_option("--nodes", opt.nodes, "node count (default 10 substrate, 2-5 request)")
      ->check(CLI::PositiveNumber);
  generate->add_option("--clouds", opt.clouds, "substrate clouds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  generate->add_option("--private-fraction", opt.private_fraction, "share of private clouds")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  generate->add_option("--topology", opt.topology, "substrate topology")
      ->check(CLI::IsMember({"waxman", "gnp"}))
      ->capture_default_str();
  generate->add_option("--gnp-p", opt.gnp_p, "link probability for gnp")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  generate->add_option("--tenant", opt.tenant, "request tenant")->capture_default_str();
  generate->add_option("--id", opt.id, "request id")->capture_default_str();
  generate->add_option("--out", opt.out, "write the result here instead of standard output");

  CLI::App* solve = app.add_subcommand("solve", "embed one request into an idle substrate");
  add_io(solve, true);
  add_engine(solve);
  add_policy(solve);
  add_budget(solve);
  add_beta(solve);

  CLI::App* lp = app.add_subcommand("export-lp", "write the binary program in CPLEX LP format");
  add_io(lp, true);
  add_policy(lp);

  CLI::App* validate = app.add_subcommand("validate", "check an embedding against every rule");
  add_io(validate, true);
  validate->add_option("--embedding", opt.embedding, "outcome.json with the mapping")
      ->required()
      ->check(CLI::ExistingFile);
  add_policy(validate);

  CLI::App* simulate = app.add_subcommand("simulate", "online run, metrics as CSV");
  add_io(simulate, false);
  add_engine(simulate);
  add_policy(simulate);
  add_budget(simulate);
  add_beta(simulate);
  add_sim(simulate);
  simulate->add_option("--sweep", opt.sweep,
                       "run N consecutive seeds concurrently into <out>-seed<k>.csv")
      ->check(CLI::PositiveNumber);

  CLI::App* compare = app.add_subcommand(
      "compare", "check that exact dominates greedy; one request or a replayed workload");
  compare->add_option("--substrate", opt.substrate, "substrate.json path")
      ->required()
      ->check(CLI::ExistingFile);
  compare->add_option("--request", opt.request, "single request; omit to replay a workload")
      ->check(CLI::ExistingFile);
  compare->add_option("--out", opt.out, "write the verdict here instead of standard output");
  add_policy(compare);
  add_budget(compare);
  add_beta(compare);
  add_sim(compare);

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (generate->parsed()) return Generate(opt, out);
    if (solve->parsed()) return SolveCommand(opt, out);
    if (lp->parsed()) return ExportLp(opt, out);
    if (validate->parsed()) return Validate(opt, out);
    if (simulate->parsed()) return Simulate(opt, out, err);
    if (compare->parsed()) return Compare(opt, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace secvne::cli
