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

#ifndef FEDPOP_PROTOCOL_PROVE_H_
#define FEDPOP_PROTOCOL_PROVE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "fedpop/crypto/rng.h"
#include "fedpop/oprf/oprf.h"
#include "fedpop/protocol/generate.h"
#include "fedpop/protocol/types.h"
#include "fedpop/sim/round.h"

namespace fedpop::protocol {

// Revealed material held by a service provider: (M', VK', R') per round.
class ServiceProvider {
 public:
  struct Entry {
    sa::ModelVector model;
    crypto::Digest model_digest;
    GlobalToken token;
  };

  void Store(sa::ModelVector model, GlobalToken token);
  // Throws Error(kLookup) when the round was never revealed.
  const Entry& Lookup(uint64_t round) const;
  bool Contains(uint64_t round) const { return rounds_.contains(round); }

 private:
  std::map<uint64_t, Entry> rounds_;
};

// Hands the model and token of `round` to the service provider. Repeating a
// reveal stores the same values again.
void Reveal(const FlServerArchive& server, uint64_t round, ServiceProvider& sp);

enum class ProveVerdict {
  kAccepted,
  kHashMismatch,       // client's H(M) differs from H(M')
  kInvalidAlpha,       // client refused the blinded element
  kInvalidSignature,   // sigma does not verify on H(M') under VK'
  kWitnessMismatch,    // unblinded PRF value differs from R'
  kMalformed,          // undecodable message
  kTimeout,            // peer went silent
};
std::string VerdictName(ProveVerdict v);

struct ProveOptions {
  // Fixes the service provider's blinding factor; drawn from `sp_seed` when
  // unset.
  std::optional<crypto::Scalar> fixed_rho;
  uint64_t sp_seed = 0;
  // Test seam: the element the service provider sends instead of alpha.
  std::optional<Bytes> alpha_override;
};

struct ProveResult {
  int client_decision = 0;
  int sp_decision = 0;
  ProveVerdict verdict = ProveVerdict::kTimeout;
  sim::RoundTranscript transcript;
  uint64_t bytes_sp_to_client = 0;
  uint64_t bytes_client_to_sp = 0;
  double client_seconds = 0;
  double sp_seconds = 0;
};

// Runs the Prove exchange between one client bundle and the service provider
// for `round`. Reject is an outcome (decision 0), never an exception.
ProveResult ProvePhase(const ProofBundle& bundle, const ServiceProvider& sp, uint64_t round,
                       const ProveOptions& options = {});

}  // namespace fedpop::protocol

#endif  // FEDPOP_PROTOCOL_PROVE_H_
