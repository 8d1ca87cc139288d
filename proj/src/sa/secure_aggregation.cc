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

#include "fedpop/sa/secure_aggregation.h"

#include <algorithm>
#include <string>

#include "fedpop/crypto/prg.h"
#include "fedpop/status.h"

namespace fedpop::sa {

using crypto::GroupElement;
using crypto::Scalar;
using crypto::ShamirShare;

uint32_t DefaultSaThreshold(uint32_t degree) { return (2 * degree + 2) / 3; }

SASetupResult SaSetup(const NeighborGraph& graph, uint32_t t_sa, crypto::Rng& rng) {
  const uint32_t n = graph.size();
  if (n < 2 || graph.degree() >= n) {
    throw Error(ErrorCode::kParameter, "secure aggregation needs degree < n");
  }
  if (t_sa < 1 || graph.degree() < t_sa) {
    throw Error(ErrorCode::kParameter, "SA threshold must satisfy 1 <= t_sa <= degree");
  }
  if (!graph.Connected()) {
    throw Error(ErrorCode::kParameter, "neighbor graph is not connected");
  }

  SASetupResult result;
  result.clients.resize(n);
  std::vector<GroupElement> publics(n);
  for (uint32_t i = 1; i <= n; ++i) {
    SAClientState& c = result.clients[i - 1];
    c.index = i;
    c.threshold = t_sa;
    c.dh_secret = Scalar::RandomNonZero(rng);
    c.dh_public = GroupElement::BaseMul(c.dh_secret);
    c.self_seed = Scalar::Random(rng);
    publics[i - 1] = c.dh_public;
  }
  auto coefficient = [&rng] { return Scalar::Random(rng); };
  for (uint32_t i = 1; i <= n; ++i) {
    SAClientState& c = result.clients[i - 1];
    const auto b_shares = crypto::ShareWithCoefficients(c.self_seed, t_sa, n, coefficient);
    const auto k_shares = crypto::ShareWithCoefficients(c.dh_secret, t_sa, n, coefficient);
    for (uint32_t j : graph.neighbors(i)) {
      c.neighbor_publics[j] = publics[j - 1];
      SharePair pair{b_shares[j - 1], k_shares[j - 1]};
      c.outgoing_shares[j] = pair;
      // Relayed end-to-end encrypted through the server in a deployment.
      result.clients[j - 1].incoming_shares[i] = pair;
    }
  }
  result.server = SAServerState(graph, t_sa, std::move(publics));
  return result;
}

SASetupResult SaSetup(uint32_t n, uint32_t degree, uint32_t t_sa, crypto::Rng& rng) {
  if (t_sa > degree) {
    throw Error(ErrorCode::kParameter, "SA threshold exceeds graph degree");
  }
  if (degree >= n) throw Error(ErrorCode::kParameter, "degree must be below n");
  return SaSetup(NeighborGraph::Harary(n, degree), t_sa, rng);
}

crypto::Digest PairwiseSeed(const Scalar& own_secret, const GroupElement& peer_public) {
  const GroupElement shared = peer_public.Mul(own_secret);
  return crypto::HashToDigest(crypto::tags::kPair, {shared.bytes()});
}

std::vector<kernels::SignedSeed> MaskSeeds(const SAClientState& state) {
  std::vector<kernels::SignedSeed> seeds;
  seeds.reserve(state.neighbor_publics.size() + 1);
  seeds.push_back({crypto::SeedFromScalar(state.self_seed), false});
  for (const auto& [j, pub] : state.neighbor_publics) {
    seeds.push_back({PairwiseSeed(state.dh_secret, pub), state.index > j});
  }
  return seeds;
}

ModelVector ApplyMasks(const ModelVector& m, std::span<const kernels::SignedSeed> seeds) {
  ModelVector out = m;
  kernels::AddMasks(out.mutable_coords(), seeds);
  return out;
}

ModelVector SaProtect(SAClientState& state, const ModelVector& m) {
  for (const auto& [j, pair] : state.incoming_shares) {
    if (!state.neighbor_publics.count(j)) {
      throw Error(ErrorCode::kState,
                  "missing public key of neighbor " + std::to_string(j));
    }
  }
  if (state.neighbor_publics.empty()) {
    throw Error(ErrorCode::kState, "client has no neighbor public keys");
  }
  const crypto::Digest digest = m.Hash();
  if (state.protected_update && *state.protected_update != digest) {
    throw Error(ErrorCode::kState, "self mask already used for a different update");
  }
  state.protected_update = digest;
  return ApplyMasks(m, MaskSeeds(state));
}

RecoveryResponse SaRespond(const SAClientState& state, const RecoveryRequest& request) {
  for (uint32_t j : request.online_neighbors) {
    if (std::find(request.dropped_neighbors.begin(), request.dropped_neighbors.end(), j) !=
        request.dropped_neighbors.end()) {
      throw Error(ErrorCode::kState,
                  "neighbor " + std::to_string(j) + " reported both online and dropped");
    }
  }
  RecoveryResponse response;
  for (uint32_t j : request.online_neighbors) {
    auto it = state.incoming_shares.find(j);
    if (it != state.incoming_shares.end()) response.b_shares[j] = it->second.b;
  }
  for (uint32_t j : request.dropped_neighbors) {
    auto it = state.incoming_shares.find(j);
    if (it != state.incoming_shares.end()) response.k_shares[j] = it->second.k;
  }
  return response;
}

void SAServerState::ReceiveMasked(uint32_t client, ModelVector masked) {
  if (classified_) throw Error(ErrorCode::kState, "masked update after classification");
  if (client < 1 || client > size()) {
    throw Error(ErrorCode::kParameter, "unknown client " + std::to_string(client));
  }
  if (!masked_.empty() && masked_.begin()->second.dimension() != masked.dimension()) {
    throw Error(ErrorCode::kParameter, "masked update dimension mismatch");
  }
  masked_[client] = std::move(masked);
}

void SAServerState::Classify() {
  online_.clear();
  dropped_.clear();
  for (uint32_t i = 1; i <= size(); ++i) {
    (masked_.count(i) ? online_ : dropped_).insert(i);
  }
  classified_ = true;
}

RecoveryRequest SAServerState::RequestFor(uint32_t client) const {
  if (!classified_) throw Error(ErrorCode::kState, "recovery requested before classification");
  RecoveryRequest r;
  for (uint32_t j : graph_.neighbors(client)) {
    (online_.count(j) ? r.online_neighbors : r.dropped_neighbors).push_back(j);
  }
  return r;
}

void SAServerState::ReceiveRecovery(uint32_t from, const RecoveryResponse& response) {
  if (!classified_) throw Error(ErrorCode::kState, "recovery before classification");
  for (const auto& [owner, share] : response.b_shares) {
    if (!online_.count(owner) || !graph_.Adjacent(from, owner)) continue;
    b_shares_[owner].push_back(share);
  }
  for (const auto& [owner, share] : response.k_shares) {
    if (!dropped_.count(owner) || !graph_.Adjacent(from, owner)) continue;
    k_shares_[owner].push_back(share);
  }
}

namespace {

Scalar RecoverSecret(const std::map<uint32_t, std::vector<ShamirShare>>& pool,
                     uint32_t owner, uint32_t threshold, const char* what) {
  auto it = pool.find(owner);
  const size_t have = it == pool.end() ? 0 : it->second.size();
  if (have < threshold) {
    throw Error(ErrorCode::kUnmaskableRound,
                std::string("client ") + std::to_string(owner) + ": " +
                    std::to_string(have) + " " + what + " shares, need " +
                    std::to_string(threshold));
  }
  try {
    return crypto::ShamirReconstruct(it->second, threshold);
  } catch (const Error& e) {
    throw Error(ErrorCode::kUnmaskableRound, e.what());
  }
}

}  // namespace

ModelVector SaAggregate(const SAServerState& server) {
  if (!server.classified()) throw Error(ErrorCode::kState, "aggregate before classification");
  if (server.online().empty()) {
    throw Error(ErrorCode::kUnmaskableRound, "no online clients");
  }
  const uint32_t t = server.threshold();
  std::vector<kernels::SignedSeed> seeds;
  for (uint32_t i : server.online()) {
    const Scalar b = RecoverSecret(server.b_shares(), i, t, "self-mask");
    seeds.push_back({crypto::SeedFromScalar(b), true});
  }
  for (uint32_t j : server.dropped()) {
    std::vector<uint32_t> online_neighbors;
    for (uint32_t i : server.graph().neighbors(j)) {
      if (server.online().count(i)) online_neighbors.push_back(i);
    }
    if (online_neighbors.empty()) continue;
    const Scalar k = RecoverSecret(server.k_shares(), j, t, "DH-secret");
    if (GroupElement::BaseMul(k) != server.public_key(j)) {
      throw Error(ErrorCode::kUnmaskableRound,
                  "recovered DH secret of client " + std::to_string(j) +
                      " does not match its public key");
    }
    for (uint32_t i : online_neighbors) {
      // Client i added the mask when i < j; remove it with the opposite sign.
      seeds.push_back({PairwiseSeed(k, server.public_key(i)), i < j});
    }
  }

  std::vector<std::vector<Scalar>> inputs;
  inputs.reserve(server.online().size());
  for (uint32_t i : server.online()) inputs.push_back(server.masked().at(i).coords());
  const ModelVector& first = server.masked().at(*server.online().begin());
  std::vector<Scalar> sum = kernels::Sum(inputs, first.dimension());
  kernels::AddMasks(sum, seeds);
  return ModelVector(std::move(sum), first.params(), server.online().size());
}

}  // namespace fedpop::sa
