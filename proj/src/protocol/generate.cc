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

#include "fedpop/protocol/generate.h"

#include <memory>

#include "fedpop/status.h"

namespace fedpop::protocol {

GenerateResult GeneratePhase(std::vector<ClientKeyMaterial>& clients,
                             const ServerKeyMaterial& server,
                             const sim::DropoutSchedule& schedule,
                             const GenerateOptions& options) {
  if (clients.size() != server.n) {
    throw Error(ErrorCode::kParameter, "client key material does not match the server");
  }
  crypto::Rng root = crypto::Rng::FromSeed(options.seed);

  std::vector<std::unique_ptr<ClientParty>> client_parties;
  std::vector<sim::Party*> parties;
  for (ClientKeyMaterial& keys : clients) {
    ClientOptions co;
    co.trainer = options.trainer;
    co.alt_witness = options.alt_witness;
    co.retain_model = options.retain_model;
    co.corrupt_partial = options.corrupt_partials.contains(keys.id);
    co.update_override = options.update_override;
    client_parties.push_back(std::make_unique<ClientParty>(
        keys, options.round, std::move(co), root.Fork("client/" + std::to_string(keys.id))));
    parties.push_back(client_parties.back().get());
  }

  ServerOptions so;
  so.global_model = options.global_model;
  so.dimension = options.trainer.dimension;
  so.alt_witness = options.alt_witness;
  FlServerParty fl(server, options.round, std::move(so), root.Fork("fl-server"));

  sim::Transport transport(options.order, options.transport_seed);
  GenerateResult result;
  result.outcome = sim::RunRound(parties, fl, schedule, transport);

  result.online = fl.online();
  result.excluded = fl.excluded();
  size_t trained = 0;
  size_t signed_count = 0;
  for (const auto& party : client_parties) {
    const uint32_t id = party->endpoint().id;
    if (party->update()) {
      result.updates[id] = *party->update();
      result.timings.client_sa_train += party->sa_train_seconds();
      ++trained;
    }
    if (party->signed_any()) {
      result.timings.client_ts_sign += party->ts_sign_seconds();
      ++signed_count;
    }
    if (party->bundle()) result.bundles[id] = *party->bundle();
  }
  if (trained > 0) result.timings.client_sa_train /= static_cast<double>(trained);
  result.timings.client_ts_sign_total = result.timings.client_ts_sign;
  if (signed_count > 0) result.timings.client_ts_sign /= static_cast<double>(signed_count);
  result.timings.server_sa_agg = fl.sa_agg_seconds();
  result.timings.server_ts_agg = fl.ts_agg_seconds();

  if (result.ok()) {
    result.model = fl.model();
    result.token = fl.token();
    result.witness = fl.witness();
    result.signers = fl.signers();
  }
  return result;
}

void FlServerArchive::Record(const GenerateResult& result) {
  if (!result.ok()) return;
  Record(result.token->round, *result.model, *result.token);
}

void FlServerArchive::Record(uint64_t round, sa::ModelVector model, GlobalToken token) {
  rounds_[round] = {std::move(model), std::move(token)};
}

const FlServerArchive::Entry& FlServerArchive::Reveal(uint64_t round) const {
  auto it = rounds_.find(round);
  if (it == rounds_.end()) {
    throw Error(ErrorCode::kLookup, "no completed round " + std::to_string(round));
  }
  return it->second;
}

}  // namespace fedpop::protocol
