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

#ifndef FEDPOP_SA_SECURE_AGGREGATION_H_
#define FEDPOP_SA_SECURE_AGGREGATION_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "fedpop/crypto/group.h"
#include "fedpop/crypto/hash.h"
#include "fedpop/crypto/rng.h"
#include "fedpop/crypto/scalar.h"
#include "fedpop/crypto/shamir.h"
#include "fedpop/kernels.h"
#include "fedpop/sa/graph.h"
#include "fedpop/sa/model_vector.h"

namespace fedpop::sa {

// Shares of one neighbor's self-mask seed and DH secret.
struct SharePair {
  crypto::ShamirShare b;
  crypto::ShamirShare k;
  friend bool operator==(const SharePair&, const SharePair&) = default;
};

struct SAClientState {
  uint32_t index = 0;
  uint32_t threshold = 0;  // t_sa
  crypto::Scalar dh_secret;
  crypto::GroupElement dh_public;
  crypto::Scalar self_seed;
  std::map<uint32_t, crypto::GroupElement> neighbor_publics;
  // Keyed by recipient: shares of this client's secrets.
  std::map<uint32_t, SharePair> outgoing_shares;
  // Keyed by owner: shares this client holds for its neighbors.
  std::map<uint32_t, SharePair> incoming_shares;
  // Digest of the update already protected with self_seed, if any.
  std::optional<crypto::Digest> protected_update;
};

// What the server asks a client to reveal after classification.
struct RecoveryRequest {
  std::vector<uint32_t> online_neighbors;
  std::vector<uint32_t> dropped_neighbors;
};

struct RecoveryResponse {
  // Shares of b_j for online neighbors j, keyed by j.
  std::map<uint32_t, crypto::ShamirShare> b_shares;
  // Shares of k_j for dropped neighbors j, keyed by j.
  std::map<uint32_t, crypto::ShamirShare> k_shares;
};

class SAServerState {
 public:
  SAServerState() = default;
  SAServerState(NeighborGraph graph, uint32_t threshold,
                std::vector<crypto::GroupElement> publics)
      : graph_(std::move(graph)), threshold_(threshold), publics_(std::move(publics)) {}

  const NeighborGraph& graph() const { return graph_; }
  uint32_t threshold() const { return threshold_; }
  uint32_t size() const { return graph_.size(); }
  const crypto::GroupElement& public_key(uint32_t i) const { return publics_.at(i - 1); }
  const std::vector<crypto::GroupElement>& publics() const { return publics_; }

  void ReceiveMasked(uint32_t client, ModelVector masked);
  // Online = masked update received; dropped = everyone else. Further
  // masked updates are rejected after this call.
  void Classify();
  bool classified() const { return classified_; }
  const std::set<uint32_t>& online() const { return online_; }
  const std::set<uint32_t>& dropped() const { return dropped_; }
  const std::map<uint32_t, ModelVector>& masked() const { return masked_; }

  RecoveryRequest RequestFor(uint32_t client) const;
  void ReceiveRecovery(uint32_t from, const RecoveryResponse& response);

  const std::map<uint32_t, std::vector<crypto::ShamirShare>>& b_shares() const {
    return b_shares_;
  }
  const std::map<uint32_t, std::vector<crypto::ShamirShare>>& k_shares() const {
    return k_shares_;
  }

 private:
  NeighborGraph graph_;
  uint32_t threshold_ = 0;
  std::vector<crypto::GroupElement> publics_;
  std::map<uint32_t, ModelVector> masked_;
  bool classified_ = false;
  std::set<uint32_t> online_;
  std::set<uint32_t> dropped_;
  std::map<uint32_t, std::vector<crypto::ShamirShare>> b_shares_;
  std::map<uint32_t, std::vector<crypto::ShamirShare>> k_shares_;
};

struct SASetupResult {
  std::vector<SAClientState> clients;  // clients[i-1] is client i
  SAServerState server;
};

// ceil(2 * degree / 3).
uint32_t DefaultSaThreshold(uint32_t degree);

// Dealer-style setup: key pairs, self-mask seeds and Shamir shares of both
// secrets delivered to every neighbor.
SASetupResult SaSetup(const NeighborGraph& graph, uint32_t t_sa, crypto::Rng& rng);
SASetupResult SaSetup(uint32_t n, uint32_t degree, uint32_t t_sa, crypto::Rng& rng);

// H("fedpop/pair", k_{i,j}) where k_{i,j} = (g^{k_j})^{k_i}.
crypto::Digest PairwiseSeed(const crypto::Scalar& own_secret,
                            const crypto::GroupElement& peer_public);

// Self mask (added) and one pairwise mask per neighbor, added when i < j
// and subtracted otherwise.
std::vector<kernels::SignedSeed> MaskSeeds(const SAClientState& state);

// m + sum of signed masks; pure.
ModelVector ApplyMasks(const ModelVector& m, std::span<const kernels::SignedSeed> seeds);

// c_i for update m_i. A state protects at most one distinct update.
ModelVector SaProtect(SAClientState& state, const ModelVector& m);

// Throws Error(kState) when asked to reveal both shares of one neighbor.
RecoveryResponse SaRespond(const SAClientState& state, const RecoveryRequest& request);

// Sum of online updates. Throws Error(kUnmaskableRound) when any required
// secret cannot be reconstructed; no partial result is produced.
ModelVector SaAggregate(const SAServerState& server);

}  // namespace fedpop::sa

#endif  // FEDPOP_SA_SECURE_AGGREGATION_H_
