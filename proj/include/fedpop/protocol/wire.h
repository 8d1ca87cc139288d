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

#ifndef FEDPOP_PROTOCOL_WIRE_H_
#define FEDPOP_PROTOCOL_WIRE_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "fedpop/bytes.h"
#include "fedpop/crypto/group.h"
#include "fedpop/sa/model_vector.h"
#include "fedpop/sa/secure_aggregation.h"
#include "fedpop/ts/threshold_signature.h"

// Binary payload formats of protocol messages. Group elements are 32-byte
// compressed encodings, scalars 32-byte big-endian, counts and indices
// 4-byte big-endian.
namespace fedpop::protocol::wire {

namespace type {
inline constexpr std::string_view kModelParams = "pp_ml";
inline constexpr std::string_view kMasked = "masked_update";
inline constexpr std::string_view kNeighbors = "neighbor_status";
inline constexpr std::string_view kRecovery = "recovery_shares";
inline constexpr std::string_view kModel = "aggregate_model";
inline constexpr std::string_view kCommit = "nonce_commitment";
inline constexpr std::string_view kSignRequest = "sign_request";
inline constexpr std::string_view kWitnessShare = "witness_share";
inline constexpr std::string_view kPartial = "partial_signature";
inline constexpr std::string_view kProof = "proof";
inline constexpr std::string_view kModelHash = "model_hash";
inline constexpr std::string_view kAlpha = "alpha";
inline constexpr std::string_view kSigmaBeta = "sigma_beta";
inline constexpr std::string_view kDecision = "decision";
}  // namespace type

// Sequential reader over a payload; throws Error(kParse) on truncation.
class Reader {
 public:
  explicit Reader(ByteSpan in) : in_(in) {}
  uint32_t U32();
  uint64_t U64();
  ByteSpan Take(size_t n);
  crypto::GroupElement Element();
  crypto::Scalar ScalarValue();
  ByteSpan Rest();
  void ExpectEnd() const;

 private:
  ByteSpan in_;
  size_t pos_ = 0;
};

Bytes EncodeModelParams(std::span<const double> global_model);
std::vector<double> DecodeModelParams(ByteSpan in);

Bytes EncodeIndexLists(const sa::RecoveryRequest& r);
sa::RecoveryRequest DecodeIndexLists(ByteSpan in);

Bytes EncodeRecovery(const sa::RecoveryResponse& r);
sa::RecoveryResponse DecodeRecovery(ByteSpan in);

Bytes EncodeModel(uint64_t session_id, const sa::ModelVector& m);
std::pair<uint64_t, sa::ModelVector> DecodeModel(ByteSpan in, const sa::EncodingParams& enc);

Bytes EncodeCommit(uint64_t session_id, const ts::NonceCommitment& c);
std::pair<uint64_t, ts::NonceCommitment> DecodeCommit(ByteSpan in, uint32_t sender);

// Session id, message digest and the ordered commitment list.
Bytes EncodeSession(const ts::SigningSession& s);
ts::SigningSession DecodeSession(ByteSpan in, const crypto::GroupElement& group_key);

Bytes EncodePartial(uint64_t session_id, const ts::PartialSignature& p);
std::pair<uint64_t, ts::PartialSignature> DecodePartial(ByteSpan in);

}  // namespace fedpop::protocol::wire

#endif  // FEDPOP_PROTOCOL_WIRE_H_
