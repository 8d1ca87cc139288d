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

#ifndef FEDPOP_PROTOCOL_TYPES_H_
#define FEDPOP_PROTOCOL_TYPES_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "fedpop/crypto/group.h"
#include "fedpop/crypto/hash.h"
#include "fedpop/oprf/oprf.h"
#include "fedpop/sa/model_vector.h"
#include "fedpop/sa/secure_aggregation.h"
#include "fedpop/ts/threshold_signature.h"

namespace fedpop::protocol {

// key_{c_i}: secure-aggregation secrets plus the signing share. The
// individual witness and token of the ideal functionality are (sk_i, vk_i).
struct ClientKeyMaterial {
  uint32_t id = 0;  // local only; never sent during Prove
  sa::SAClientState sa;
  ts::SignerKeys signer;
  sa::EncodingParams encoding;
};

struct ServerKeyMaterial {
  uint32_t n = 0;
  uint32_t n_drop = 0;
  uint32_t threshold = 0;  // t = n - n_drop
  sa::SAServerState sa;
  crypto::GroupElement group_key;
  std::vector<crypto::GroupElement> verification_shares;
  sa::EncodingParams encoding;
};

// pf = sigma and W_g = K as held by a participating client.
struct ProofBundle {
  uint64_t round = 0;
  crypto::Digest model_digest;
  ts::ThresholdSignature sigma;
  oprf::OprfKey witness;
  // Retained only when the client opts to keep M.
  std::optional<sa::ModelVector> model;
};

// tk_g = (VK, R) with R = F_K(VK).
struct GlobalToken {
  uint64_t round = 0;
  crypto::GroupElement group_key;
  crypto::Digest prf_value;
  friend bool operator==(const GlobalToken&, const GlobalToken&) = default;
};

// Wall-clock seconds per component, mirroring the client/server split.
struct GenerateTimings {
  double client_sa_train = 0;  // mean per training client
  double client_ts_sign = 0;   // mean per signing client
  double client_ts_sign_total = 0;  // summed over signing clients
  double server_sa_agg = 0;
  double server_ts_agg = 0;
};

}  // namespace fedpop::protocol

#endif  // FEDPOP_PROTOCOL_TYPES_H_
