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

#include "fedpop/protocol/wire.h"

#include <bit>
#include <cstring>

#include "fedpop/status.h"

namespace fedpop::protocol::wire {

using crypto::GroupElement;
using crypto::Scalar;

uint32_t Reader::U32() { return ReadU32BE(Take(4)); }

uint64_t Reader::U64() {
  ByteSpan b = Take(8);
  uint64_t v = 0;
  for (uint8_t x : b) v = (v << 8) | x;
  return v;
}

ByteSpan Reader::Take(size_t n) {
  if (in_.size() - pos_ < n) throw Error(ErrorCode::kParse, "truncated payload");
  ByteSpan out = in_.subspan(pos_, n);
  pos_ += n;
  return out;
}

GroupElement Reader::Element() { return GroupElement::FromBytes(Take(GroupElement::kBytes)); }

Scalar Reader::ScalarValue() { return Scalar::FromBytes(Take(Scalar::kBytes)); }

ByteSpan Reader::Rest() {
  ByteSpan out = in_.subspan(pos_);
  pos_ = in_.size();
  return out;
}

void Reader::ExpectEnd() const {
  if (pos_ != in_.size()) throw Error(ErrorCode::kParse, "trailing bytes in payload");
}

Bytes EncodeModelParams(std::span<const double> global_model) {
  Bytes out;
  AppendU32BE(out, static_cast<uint32_t>(global_model.size()));
  for (double v : global_model) AppendU64BE(out, std::bit_cast<uint64_t>(v));
  return out;
}

std::vector<double> DecodeModelParams(ByteSpan in) {
  Reader r(in);
  const uint32_t d = r.U32();
  std::vector<double> out;
  out.reserve(d);
  for (uint32_t j = 0; j < d; ++j) out.push_back(std::bit_cast<double>(r.U64()));
  r.ExpectEnd();
  return out;
}

namespace {

void AppendList(Bytes& out, const std::vector<uint32_t>& ids) {
  AppendU32BE(out, static_cast<uint32_t>(ids.size()));
  for (uint32_t id : ids) AppendU32BE(out, id);
}

std::vector<uint32_t> ReadList(Reader& r) {
  const uint32_t count = r.U32();
  std::vector<uint32_t> ids;
  for (uint32_t k = 0; k < count; ++k) ids.push_back(r.U32());
  return ids;
}

void AppendShares(Bytes& out, const std::map<uint32_t, crypto::ShamirShare>& shares) {
  AppendU32BE(out, static_cast<uint32_t>(shares.size()));
  for (const auto& [owner, share] : shares) {
    AppendU32BE(out, owner);
    AppendU32BE(out, share.index);
    Append(out, share.value.ToBytes());
  }
}

std::map<uint32_t, crypto::ShamirShare> ReadShares(Reader& r) {
  std::map<uint32_t, crypto::ShamirShare> shares;
  const uint32_t count = r.U32();
  for (uint32_t k = 0; k < count; ++k) {
    const uint32_t owner = r.U32();
    crypto::ShamirShare s;
    s.index = r.U32();
    s.value = r.ScalarValue();
    shares[owner] = s;
  }
  return shares;
}

}  // namespace

Bytes EncodeIndexLists(const sa::RecoveryRequest& req) {
  Bytes out;
  AppendList(out, req.online_neighbors);
  AppendList(out, req.dropped_neighbors);
  return out;
}

sa::RecoveryRequest DecodeIndexLists(ByteSpan in) {
  Reader r(in);
  sa::RecoveryRequest req;
  req.online_neighbors = ReadList(r);
  req.dropped_neighbors = ReadList(r);
  r.ExpectEnd();
  return req;
}

Bytes EncodeRecovery(const sa::RecoveryResponse& resp) {
  Bytes out;
  AppendShares(out, resp.b_shares);
  AppendShares(out, resp.k_shares);
  return out;
}

sa::RecoveryResponse DecodeRecovery(ByteSpan in) {
  Reader r(in);
  sa::RecoveryResponse resp;
  resp.b_shares = ReadShares(r);
  resp.k_shares = ReadShares(r);
  r.ExpectEnd();
  return resp;
}

Bytes EncodeModel(uint64_t session_id, const sa::ModelVector& m) {
  Bytes out;
  AppendU64BE(out, session_id);
  Append(out, m.Serialize());
  return out;
}

std::pair<uint64_t, sa::ModelVector> DecodeModel(ByteSpan in, const sa::EncodingParams& enc) {
  Reader r(in);
  const uint64_t id = r.U64();
  return {id, sa::ModelVector::Deserialize(r.Rest(), enc)};
}

Bytes EncodeCommit(uint64_t session_id, const ts::NonceCommitment& c) {
  Bytes out;
  AppendU64BE(out, session_id);
  Append(out, c.hiding.bytes());
  Append(out, c.binding.bytes());
  return out;
}

std::pair<uint64_t, ts::NonceCommitment> DecodeCommit(ByteSpan in, uint32_t sender) {
  Reader r(in);
  const uint64_t id = r.U64();
  ts::NonceCommitment c;
  c.index = sender;
  c.hiding = r.Element();
  c.binding = r.Element();
  r.ExpectEnd();
  return {id, c};
}

Bytes EncodeSession(const ts::SigningSession& s) {
  Bytes out;
  AppendU64BE(out, s.id);
  Append(out, s.message.bytes);
  AppendU32BE(out, static_cast<uint32_t>(s.commitments.size()));
  for (const auto& c : s.commitments) {
    AppendU32BE(out, c.index);
    Append(out, c.hiding.bytes());
    Append(out, c.binding.bytes());
  }
  return out;
}

ts::SigningSession DecodeSession(ByteSpan in, const GroupElement& group_key) {
  Reader r(in);
  ts::SigningSession s;
  s.id = r.U64();
  s.message = crypto::Digest::FromBytes(r.Take(crypto::Digest::kBytes));
  s.group_key = group_key;
  const uint32_t count = r.U32();
  for (uint32_t k = 0; k < count; ++k) {
    ts::NonceCommitment c;
    c.index = r.U32();
    c.hiding = r.Element();
    c.binding = r.Element();
    s.commitments.push_back(c);
  }
  r.ExpectEnd();
  return s;
}

Bytes EncodePartial(uint64_t session_id, const ts::PartialSignature& p) {
  Bytes out;
  AppendU64BE(out, session_id);
  AppendU32BE(out, p.index);
  Append(out, p.response.ToBytes());
  return out;
}

std::pair<uint64_t, ts::PartialSignature> DecodePartial(ByteSpan in) {
  Reader r(in);
  const uint64_t id = r.U64();
  ts::PartialSignature p;
  p.index = r.U32();
  p.response = r.ScalarValue();
  r.ExpectEnd();
  return {id, p};
}

}  // namespace fedpop::protocol::wire
