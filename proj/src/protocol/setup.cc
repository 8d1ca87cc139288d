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

#include "fedpop/protocol/setup.h"

#include <algorithm>

#include "fedpop/status.h"

namespace fedpop::protocol {

uint32_t SaThresholdFor(uint32_t n, uint32_t degree, uint32_t signature_threshold) {
  const uint32_t cap = signature_threshold > 0 ? signature_threshold - 1 : 0;
  // Complete graph: every responder holds every share, so t - 1 is always
  // recoverable when the round can still be signed.
  if (degree + 1 == n) return std::max<uint32_t>(1, cap);
  return std::max<uint32_t>(1, std::min(sa::DefaultSaThreshold(degree), cap));
}

SetupResult SetupPhase(const SetupParams& params, crypto::Rng& rng) {
  if (params.n < 2) throw Error(ErrorCode::kParameter, "need at least 2 clients");
  if (params.n_drop >= params.n) {
    throw Error(ErrorCode::kParameter, "n_drop must be smaller than n");
  }
  sa::CheckEncodingParams(params.encoding, params.n);
  const uint32_t t = params.n - params.n_drop;

  const sa::NeighborGraph graph = params.degree
                                      ? sa::NeighborGraph::Harary(params.n, *params.degree)
                                      : sa::NeighborGraph::ForClients(params.n);
  const uint32_t t_sa = params.sa_threshold.value_or(SaThresholdFor(params.n, graph.degree(), t));

  ts::KeygenResult keys = ts::TsKeygen(t, params.n, rng);
  sa::SASetupResult sa_keys = sa::SaSetup(graph, t_sa, rng);

  SetupResult result;
  result.clients.resize(params.n);
  for (uint32_t i = 1; i <= params.n; ++i) {
    ClientKeyMaterial& c = result.clients[i - 1];
    c.id = i;
    c.sa = std::move(sa_keys.clients[i - 1]);
    c.signer = keys.keys[i - 1];
    c.encoding = params.encoding;
  }
  ServerKeyMaterial& s = result.server;
  s.n = params.n;
  s.n_drop = params.n_drop;
  s.threshold = t;
  s.sa = std::move(sa_keys.server);
  s.group_key = keys.group_key;
  s.verification_shares = std::move(keys.verification_shares);
  s.encoding = params.encoding;
  return result;
}

}  // namespace fedpop::protocol
