// Copyright 2026 The FedPoP Authors
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

#include <iostream>

#include "CLI11.hpp"
#include "fedpop/cli/commands.h"

int main(int argc, char** argv) {
  using namespace fedpop::cli;
  CLI::App app{"Proof-of-participation rounds: setup, generate, prove and benchmark"};
  app.require_subcommand(1);

  SetupArgs setup;
  auto* setup_cmd = app.add_subcommand("setup", "Create a key store");
  setup_cmd->add_option("--n", setup.n, "Number of clients")->capture_default_str();
  setup_cmd->add_option("--ndrop", setup.ndrop, "Tolerated dropouts; t = n - ndrop")
      ->capture_default_str();
  setup_cmd->add_option("--dim", setup.dim, "Model dimension")->capture_default_str();
  setup_cmd->add_option("--seed", setup.seed, "Master seed")->capture_default_str();
  setup_cmd->add_option("--out", setup.out, "Store directory")->capture_default_str();

  GenerateArgs generate;
  auto* gen_cmd = app.add_subcommand("generate", "Run one training round");
  gen_cmd->add_option("--store", generate.store, "Store directory")->capture_default_str();
  gen_cmd->add_option("--dropout-rate", generate.dropout_rate, "Fraction of clients that drop")
      ->check(CLI::Range(0.0, 0.999999))
      ->capture_default_str();
  gen_cmd->add_option("--trainer", generate.trainer, "synthetic or linear")
      ->check(CLI::IsMember({"synthetic", "linear"}))
      ->capture_default_str();
  gen_cmd->add_flag("--alt-witness", generate.alt_witness,
                    "Derive the group witness from client contributions");
  gen_cmd->add_option("--round", generate.round, "Round id")->capture_default_str();
  gen_cmd->add_option("--drop-step", generate.drop_step,
                      "before-protect, after-protect or before-sign")
      ->check(CLI::IsMember({"before-protect", "after-protect", "before-sign"}))
      ->capture_default_str();
  gen_cmd->add_flag("--retain-model", generate.retain_model,
                    "Keep the aggregate model in each bundle");

  ProveArgs prove;
  auto* prove_cmd = app.add_subcommand("prove", "Prove participation to a service provider");
  prove_cmd->add_option("--bundle", prove.bundle, "Client proof bundle")->required();
  prove_cmd->add_option("--token", prove.token, "Global verification token")->required();
  prove_cmd->add_option("--model", prove.model, "Revealed model (default: next to token)");
  prove_cmd->add_option("--transcript", prove.transcript, "Write the Prove transcript");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time rounds over a grid of scenarios");
  bench_cmd->add_option("--grid-file", bench.grid_file, "JSON grid");
  bench_cmd->add_option("--reps", bench.reps, "Repetitions per scenario")->capture_default_str();
  bench_cmd->add_option("--csv", bench.csv, "Output CSV (default: stdout)");
  bench_cmd->add_option("--seed", bench.seed, "Base seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (*setup_cmd) return CmdSetup(setup, std::cout, std::cerr);
  if (*gen_cmd) return CmdGenerate(generate, std::cout, std::cerr);
  if (*prove_cmd) return CmdProve(prove, std::cout, std::cerr);
  return CmdBench(bench, std::cout, std::cerr);
}
