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

#include "fedpop/cli/config.h"

#include "fedpop/status.h"

namespace fedpop::cli {

namespace fs = std::filesystem;
using protocol::codec::Json;

protocol::SetupParams RunConfig::setup_params() const {
  protocol::SetupParams p;
  p.n = n;
  p.n_drop = n_drop;
  p.degree = degree;
  p.encoding = encoding;
  return p;
}

Json RunConfig::ToJson() const {
  Json j{{"n", n},
         {"ndrop", n_drop},
         {"dim", dim},
         {"seed", seed},
         {"frac_bits", encoding.frac_bits},
         {"clamp", encoding.clamp}};
  if (degree) j["degree"] = *degree;
  return j;
}

RunConfig RunConfig::FromJson(const Json& j) {
  try {
    RunConfig c;
    c.n = j.at("n").get<uint32_t>();
    c.n_drop = j.at("ndrop").get<uint32_t>();
    c.dim = j.at("dim").get<uint32_t>();
    c.seed = j.at("seed").get<uint64_t>();
    c.encoding.frac_bits = j.value("frac_bits", c.encoding.frac_bits);
    c.encoding.clamp = j.value("clamp", c.encoding.clamp);
    if (j.contains("degree")) c.degree = j.at("degree").get<uint32_t>();
    return c;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("config: ") + e.what());
  }
}

protocol::SetupResult KeysForRound(const RunConfig& config, uint64_t round) {
  crypto::Rng rng = crypto::Rng::FromSeed(config.seed).Fork("keys/" + std::to_string(round));
  return protocol::SetupPhase(config.setup_params(), rng);
}

uint64_t DropoutSeed(const RunConfig& config, uint64_t round) {
  return crypto::Rng::FromSeed(config.seed).Fork("dropout/" + std::to_string(round)).NextU64();
}

fs::path StoreLayout::keys(uint64_t round) const {
  return root / "keys" / ("round-" + std::to_string(round));
}

fs::path StoreLayout::round_dir(uint64_t round) const {
  return root / "rounds" / ("round-" + std::to_string(round));
}

fs::path StoreLayout::bundle(uint64_t round, uint32_t client) const {
  return round_dir(round) / "bundles" / ("client-" + std::to_string(client) + ".json");
}

void WriteKeys(const StoreLayout& store, uint64_t round, const protocol::SetupResult& keys) {
  const fs::path dir = store.keys(round);
  fs::create_directories(dir);
  for (const auto& c : keys.clients) {
    protocol::codec::WriteJsonFile(dir / ("client-" + std::to_string(c.id) + ".json"),
                                   protocol::codec::ClientKeysToJson(c));
  }
  protocol::codec::WriteJsonFile(dir / "server.json",
                                 protocol::codec::ServerKeysToJson(keys.server));
}

protocol::SetupResult ReadKeys(const StoreLayout& store, uint64_t round) {
  const fs::path dir = store.keys(round);
  protocol::SetupResult keys;
  try {
    keys.server = protocol::codec::ServerKeysFromJson(
        protocol::codec::ReadJsonFile(dir / "server.json"));
    for (uint32_t i = 1; i <= keys.server.n; ++i) {
      keys.clients.push_back(protocol::codec::ClientKeysFromJson(
          protocol::codec::ReadJsonFile(dir / ("client-" + std::to_string(i) + ".json"))));
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("key store: ") + e.what());
  }
  return keys;
}

}  // namespace fedpop::cli
