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

#ifndef FEDPOP_CLI_COMMANDS_H_
#define FEDPOP_CLI_COMMANDS_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "fedpop/cli/config.h"

namespace fedpop::cli {

struct SetupArgs {
  uint32_t n = 10;
  uint32_t ndrop = 1;
  uint32_t dim = 16;
  uint64_t seed = 1;
  std::filesystem::path out = "fedpop-store";
};
// Writes config.json and the round-1 keys.
int CmdSetup(const SetupArgs& args, std::ostream& out, std::ostream& err);

struct GenerateArgs {
  std::filesystem::path store = "fedpop-store";
  double dropout_rate = 0.0;
  std::string trainer = "synthetic";
  bool alt_witness = false;
  uint64_t round = 1;
  std::string drop_step = "before-protect";
  bool retain_model = false;
};
// Runs one round and writes bundles, token, model and transcript under
// rounds/round-<l>/. A round is generated at most once.
int CmdGenerate(const GenerateArgs& args, std::ostream& out, std::ostream& err);

struct ProveArgs {
  std::filesystem::path bundle;
  std::filesystem::path token;
  // Revealed model; defaults to model.json next to the token.
  std::optional<std::filesystem::path> model;
  std::optional<std::filesystem::path> transcript;
};
// Exit 0 on accept, 10 on reject, 2 on unreadable input.
int CmdProve(const ProveArgs& args, std::ostream& out, std::ostream& err);

struct BenchArgs {
  std::optional<std::filesystem::path> grid_file;
  uint32_t reps = 10;
  std::optional<std::filesystem::path> csv;  // stdout when unset
  uint64_t seed = 1;
};
int CmdBench(const BenchArgs& args, std::ostream& out, std::ostream& err);

}  // namespace fedpop::cli

#endif  // FEDPOP_CLI_COMMANDS_H_
