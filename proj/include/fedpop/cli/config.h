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

#ifndef FEDPOP_CLI_CONFIG_H_
#define FEDPOP_CLI_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <optional>

#include "fedpop/protocol/codec.h"
#include "fedpop/protocol/setup.h"

namespace fedpop::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRoundFailed = 3;
inline constexpr int kExitReject = 10;

// Deployment parameters persisted in <store>/config.json.
struct RunConfig {
  uint32_t n = 10;
  uint32_t n_drop = 1;
  uint32_t dim = 16;
  uint64_t seed = 1;
  std::optional<uint32_t> degree;
  sa::EncodingParams encoding;

  protocol::SetupParams setup_params() const;
  protocol::codec::Json ToJson() const;
  static RunConfig FromJson(const protocol::codec::Json& j);
};

// Key material for round `round`, derived from the configuration seed. Every
// round gets fresh keys.
protocol::SetupResult KeysForRound(const RunConfig& config, uint64_t round);

// Seed of the dropout sample for `round`.
uint64_t DropoutSeed(const RunConfig& config, uint64_t round);

// On-disk layout of a store directory.
struct StoreLayout {
  std::filesystem::path root;

  std::filesystem::path config() const { return root / "config.json"; }
  std::filesystem::path keys(uint64_t round) const;
  std::filesystem::path round_dir(uint64_t round) const;
  std::filesystem::path bundle(uint64_t round, uint32_t client) const;
};

void WriteKeys(const StoreLayout& store, uint64_t round, const protocol::SetupResult& keys);
protocol::SetupResult ReadKeys(const StoreLayout& store, uint64_t round);

}  // namespace fedpop::cli

#endif  // FEDPOP_CLI_CONFIG_H_
