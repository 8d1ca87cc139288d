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

#ifndef FEDPOP_PROTOCOL_SETUP_H_
#define FEDPOP_PROTOCOL_SETUP_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "fedpop/crypto/rng.h"
#include "fedpop/protocol/types.h"

namespace fedpop::protocol {

struct SetupParams {
  uint32_t n = 10;
  uint32_t n_drop = 1;
  // Defaults: complete graph up to 100 clients, Harary graph above.
  std::optional<uint32_t> degree;
  // Default: SaThresholdFor(n, degree, n - n_drop).
  std::optional<uint32_t> sa_threshold;
  sa::EncodingParams encoding;
};

// t - 1 on a complete graph (degree = n - 1), otherwise
// min(ceil(2 * degree / 3), t - 1); at least 1. With >= t clients online
// every online client has >= t - 1 online neighbors, so t - 1 shares are
// always available on the complete graph.
uint32_t SaThresholdFor(uint32_t n, uint32_t degree, uint32_t signature_threshold);

struct SetupResult {
  std::vector<ClientKeyMaterial> clients;  // clients[i-1] is client i
  ServerKeyMaterial server;
};

// Trusted-dealer setup for one round: threshold t = n - n_drop for the
// signature, secure-aggregation keys and shares for the neighbor graph.
SetupResult SetupPhase(const SetupParams& params, crypto::Rng& rng);

}  // namespace fedpop::protocol

#endif  // FEDPOP_PROTOCOL_SETUP_H_
