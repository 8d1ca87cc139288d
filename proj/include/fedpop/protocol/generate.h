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

#ifndef FEDPOP_PROTOCOL_GENERATE_H_
#define FEDPOP_PROTOCOL_GENERATE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "fedpop/protocol/parties.h"
#include "fedpop/protocol/types.h"
#include "fedpop/sim/round.h"
#include "fedpop/sim/transport.h"

namespace fedpop::protocol {

struct GenerateOptions {
  uint64_t round = 1;
  trainer::TrainerSpec trainer;
  std::vector<double> global_model;  // zeros of trainer.dimension when empty
  bool alt_witness = false;
  bool retain_model = false;
  uint64_t seed = 0;  // server and client randomness
  sim::DeliveryOrder order = sim::DeliveryOrder::kFifo;
  uint64_t transport_seed = 0;
  std::set<uint32_t> corrupt_partials;
  std::function<std::vector<double>(uint32_t)> update_override;
};

struct GenerateResult {
  sim::RoundOutcome outcome;
  std::map<uint32_t, ProofBundle> bundles;  // keyed by client id
  std::optional<sa::ModelVector> model;
  std::optional<GlobalToken> token;
  std::optional<oprf::OprfKey> witness;
  std::set<uint32_t> online;             // clients whose masked update counted
  std::vector<uint32_t> signers;         // final signing set
  std::vector<uint32_t> excluded;        // rejected or silent signers
  std::map<uint32_t, std::vector<double>> updates;  // plaintext, per trained client
  GenerateTimings timings;

  bool ok() const { return outcome.code == sim::OutcomeCode::kSuccess; }
};

// Runs one Generate round over the simulator. Client key material is updated
// in place (the protected update is recorded so masks are never reused on a
// different input).
GenerateResult GeneratePhase(std::vector<ClientKeyMaterial>& clients,
                             const ServerKeyMaterial& server,
                             const sim::DropoutSchedule& schedule,
                             const GenerateOptions& options);

// Successful rounds retained by the FL server for Reveal.
class FlServerArchive {
 public:
  struct Entry {
    sa::ModelVector model;
    GlobalToken token;
  };

  // Keeps the result of a successful round; failed rounds are not stored.
  void Record(const GenerateResult& result);
  void Record(uint64_t round, sa::ModelVector model, GlobalToken token);
  // Throws Error(kLookup) for a round that never completed.
  const Entry& Reveal(uint64_t round) const;
  bool Contains(uint64_t round) const { return rounds_.contains(round); }

 private:
  std::map<uint64_t, Entry> rounds_;
};

}  // namespace fedpop::protocol

#endif  // FEDPOP_PROTOCOL_GENERATE_H_
