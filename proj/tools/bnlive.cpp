// Copyright 2026 The bnlive Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// bnlive: liveness and fair-liveness checking for broadcast networks.
//
// Exit codes: 0 = YES (or success), 1 = NO (or invalid witness), 2 = error.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bnlive/error.hpp"
#include "bnlive/fair.hpp"
#include "bnlive/generate.hpp"
#include "bnlive/json_io.hpp"
#include "bnlive/liveness.hpp"
#include "bnlive/oracle.hpp"
#include "bnlive/textio.hpp"

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct CheckArgs {
  std::string file;
  bool fair = false;
  std::string witness_path;
  bool concretize = false;
  bool json = false;
  std::size_t cap_clients = bnlive::kDefaultClientCap;
};

int cmd_check(const CheckArgs& args) {
  const auto t0 = Clock::now();
  const bnlive::BroadcastNetwork net = bnlive::load_network(args.file);
  bnlive::RunReport report;
  report.parse_ms = millis_since(t0);
  report.fair = args.fair;

  bnlive::CheckOptions options;
  options.emit_witness = !args.witness_path.empty();
  options.concretize = args.concretize;
  options.cap_clients = args.cap_clients;

  bnlive::Verdict verdict;
  const bnlive::BroadcastNetwork* witness_net = &net;
  std::optional<bnlive::FairVerdict> fair;
  if (args.fair) {
    fair = bnlive::check_fair_liveness(net, options);
    verdict = fair->verdict;
    witness_net = &fair->instrumented.net;
  } else {
    verdict = bnlive::check_liveness(net, options);
  }
  report.verdict = verdict.answer;
  report.stats = verdict.stats;
  if (args.concretize && verdict.yes()) report.concretization = verdict.concretization_capped ? "capped" : "ok";

  if (verdict.witness && !args.witness_path.empty()) {
    std::ofstream out(args.witness_path);
    if (!out) throw bnlive::Error("cannot write '" + args.witness_path + "'");
    out << bnlive::witness_to_json(*witness_net, *verdict.witness, verdict.concrete).dump(2) << '\n';
    report.witness_path = args.witness_path;
  }
  report.total_ms = millis_since(t0);

  if (args.json) {
    std::cout << bnlive::report_to_json(report).dump(2) << '\n';
  } else {
    std::cout << (args.fair ? "fair liveness: " : "liveness: ") << (verdict.yes() ? "YES" : "NO") << '\n'
              << "  seeds: " << verdict.stats.seed_count << ", kleene steps: " << verdict.stats.kleene_steps << '\n'
              << "  time: " << report.total_ms << " ms (parse " << report.parse_ms << ", coverability "
              << verdict.stats.coverability_ms << ", fixed point " << verdict.stats.fixed_point_ms << ", witness "
              << verdict.stats.witness_ms << ")\n";
    if (verdict.witness) std::cout << "  witness length: " << verdict.witness->length() << '\n';
    if (report.concretization == "capped") std::cout << "  concretization skipped: client cap exceeded\n";
    if (report.witness_path) std::cout << "  witness written to " << *report.witness_path << '\n';
  }
  return verdict.yes() ? kYes : kNo;
}

int cmd_oracle(const std::string& file, std::size_t clients, bool fair, std::size_t cap) {
  if (clients == 0) throw bnlive::Error("--clients must be at least 1");
  const bnlive::BroadcastNetwork net = bnlive::load_network(file);
  const bool yes = fair ? bnlive::oracle_fair(net, clients, cap) : bnlive::oracle_liveness(net, clients, cap);
  std::cout << (fair ? "oracle fair liveness" : "oracle liveness") << " with " << clients
            << " clients: " << (yes ? "YES" : "NO") << '\n';
  return yes ? kYes : kNo;
}

int cmd_instrument(const std::string& file) {
  const bnlive::BroadcastNetwork net = bnlive::load_network(file);
  std::cout << bnlive::serialize_network(bnlive::instrument(net).net);
  return 0;
}

int cmd_gen(const bnlive::GenParams& params, std::uint64_t seed) {
  std::cout << bnlive::serialize_network(bnlive::random_network(params, seed));
  return 0;
}

int cmd_bench(const std::vector<std::size_t>& sizes, std::size_t per_size, std::uint64_t seed,
              std::size_t density, std::size_t messages) {
  std::cout << "states,transitions,millis,iterations\n";
  for (std::size_t n : sizes) {
    for (std::size_t r = 0; r < per_size; ++r) {
      bnlive::GenParams params;
      params.states = n;
      params.messages = messages;
      params.transitions = density * n;
      const auto net = bnlive::random_network(params, seed + n * 1000003U + r);
      const auto t0 = Clock::now();
      const auto verdict = bnlive::check_liveness(net);
      const double ms = millis_since(t0);
      std::cout << net.num_states() << ',' << net.transitions().size() << ',' << ms << ','
                << verdict.stats.kleene_steps << '\n';
    }
  }
  return 0;
}

int cmd_validate_witness(const std::string& net_file, const std::string& witness_file, bool fair) {
  const bnlive::BroadcastNetwork base = bnlive::load_network(net_file);
  const bnlive::BroadcastNetwork net = fair ? bnlive::instrument(base).net : base;
  std::ifstream in(witness_file);
  if (!in) throw bnlive::Error("cannot open '" + witness_file + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw bnlive::Error(std::string("invalid JSON: ") + e.what());
  }
  const auto doc = bnlive::witness_from_json(net, j);

  std::string why;
  if (!bnlive::validate_witness(net, doc.witness, &why)) {
    std::cout << "invalid symbolic witness: " << why << '\n';
    return kNo;
  }
  if (doc.concrete) {
    const auto end = bnlive::replay_computation(net, *doc.concrete);
    if (!end) {
      std::cout << "invalid concrete computation: illegal step\n";
      return kNo;
    }
    if (*end != doc.concrete->start || doc.concrete->steps.empty()) {
      std::cout << "invalid concrete computation: not a cycle\n";
      return kNo;
    }
    bnlive::StateSet seeds(net.num_states());
    for (auto s : doc.witness.seeds) seeds.insert(s);
    if (!(bnlive::support(net, doc.concrete->start) == seeds)) {
      std::cout << "invalid concrete computation: start states differ from the seeds\n";
      return kNo;
    }
  }
  std::cout << "witness valid (length " << doc.witness.length() << (doc.concrete ? ", concrete cycle checked" : "")
            << ")\n";
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bnlive - liveness verification for broadcast networks"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "decide liveness (or fair liveness with --fair)");
  auto* check_fair_cmd = app.add_subcommand("check-fair", "decide fair liveness");
  for (auto* cmd : {check_cmd, check_fair_cmd}) {
    cmd->add_option("file", check.file, "network file (.bn)")->required();
    cmd->add_option("--witness", check.witness_path, "write a JSON witness on YES");
    cmd->add_flag("--concretize", check.concretize, "also build a concrete cyclic computation");
    cmd->add_flag("--json", check.json, "print a JSON report");
    cmd->add_option("--cap-clients", check.cap_clients, "client cap for concretization");
  }
  check_cmd->add_flag("--fair", check.fair, "check fair liveness instead");

  std::string file;
  std::size_t clients = 1;
  bool oracle_fair = false;
  std::size_t cap = bnlive::kDefaultOracleCap;
  auto* oracle_cmd = app.add_subcommand("oracle", "explicit-state check with a fixed number of clients");
  oracle_cmd->add_option("file", file, "network file (.bn)")->required();
  oracle_cmd->add_option("--clients,-k", clients, "number of clients")->required();
  oracle_cmd->add_flag("--fair", oracle_fair, "look for a good cycle");
  oracle_cmd->add_option("--cap", cap, "maximum explored configurations");

  auto* instrument_cmd = app.add_subcommand("instrument", "print the fairness instrumentation of a network");
  instrument_cmd->add_option("file", file, "network file (.bn)")->required();

  bnlive::GenParams gen;
  std::uint64_t seed = 1;
  auto* gen_cmd = app.add_subcommand("gen", "print a pseudo-random network");
  gen_cmd->add_option("--states", gen.states, "number of states")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--messages", gen.messages, "number of messages")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--trans", gen.transitions, "number of drawn transitions");
  gen_cmd->add_option("--seed", seed, "random seed");

  std::vector<std::size_t> sizes{100, 200, 400, 800};
  std::size_t per_size = 3;
  std::size_t density = 5;
  std::size_t bench_messages = 8;
  auto* bench_cmd = app.add_subcommand("bench", "time liveness checks on generated networks (CSV)");
  bench_cmd->add_option("--sizes", sizes, "state counts")->delimiter(',');
  bench_cmd->add_option("--per-size", per_size, "instances per size");
  bench_cmd->add_option("--seed", seed, "random seed");
  bench_cmd->add_option("--density", density, "drawn transitions per state");
  bench_cmd->add_option("--messages", bench_messages, "number of messages")->check(CLI::PositiveNumber);

  std::string witness_file;
  bool witness_fair = false;
  auto* vw_cmd = app.add_subcommand("validate-witness", "re-check a JSON witness against a network");
  vw_cmd->add_option("file", file, "network file (.bn)")->required();
  vw_cmd->add_option("witness", witness_file, "witness JSON")->required();
  vw_cmd->add_flag("--fair", witness_fair, "the witness refers to the fairness instrumentation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (check_cmd->parsed()) return cmd_check(check);
    if (check_fair_cmd->parsed()) {
      check.fair = true;
      return cmd_check(check);
    }
    if (oracle_cmd->parsed()) return cmd_oracle(file, clients, oracle_fair, cap);
    if (instrument_cmd->parsed()) return cmd_instrument(file);
    if (gen_cmd->parsed()) return cmd_gen(gen, seed);
    if (bench_cmd->parsed()) return cmd_bench(sizes, per_size, seed, density, bench_messages);
    if (vw_cmd->parsed()) return cmd_validate_witness(file, witness_file, witness_fair);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
