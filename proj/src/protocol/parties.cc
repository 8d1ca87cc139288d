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

#include "fedpop/protocol/parties.h"

#include <algorithm>
#include <sstream>

#include "fedpop/protocol/alt_witness.h"
#include "fedpop/protocol/wire.h"
#include "fedpop/status.h"

namespace fedpop::protocol {

using sim::Message;
using sim::Stage;

namespace {

uint64_t TrainingSeed(uint64_t round, uint32_t client) { return (round << 32) | client; }

}  // namespace

// ---------------------------------------------------------------- client

ClientParty::ClientParty(ClientKeyMaterial& keys, uint64_t round, ClientOptions options,
                         crypto::Rng rng)
    : keys_(keys), round_(round), options_(std::move(options)), rng_(std::move(rng)) {}

Message ClientParty::Reply(std::string_view type, Bytes payload) const {
  Message m;
  m.round = round_;
  m.type = std::string(type);
  m.from = endpoint();
  m.to = kFlServerEndpoint;
  m.payload = std::move(payload);
  return m;
}

std::vector<Message> ClientParty::Handle(const Message& m) {
  if (m.round != round_) return {};
  if (m.type == wire::type::kModelParams) return OnModelParams(m);
  if (m.type == wire::type::kNeighbors) return OnNeighbors(m);
  if (m.type == wire::type::kModel) return OnModel(m);
  if (m.type == wire::type::kSignRequest) return OnSignRequest(m);
  if (m.type == wire::type::kProof) return OnProof(m);
  return {};
}

std::vector<Message> ClientParty::OnModelParams(const Message& m) {
  if (update_) return {};
  ScopedTimer timer(sa_train_s_);
  const std::vector<double> global = wire::DecodeModelParams(m.payload);
  std::vector<double> update =
      options_.update_override
          ? options_.update_override(keys_.id)
          : trainer::LocalTrain(options_.trainer, TrainingSeed(round_, keys_.id), global);
  sa::ModelVector encoded = sa::EncodeFixedPoint(update, keys_.encoding);
  sa::ModelVector masked = sa::SaProtect(keys_.sa, encoded);
  update_ = std::move(update);
  return {Reply(wire::type::kMasked, masked.Serialize())};
}

std::vector<Message> ClientParty::OnNeighbors(const Message& m) {
  if (!update_) return {};
  const sa::RecoveryRequest request = wire::DecodeIndexLists(m.payload);
  return {Reply(wire::type::kRecovery, wire::EncodeRecovery(sa::SaRespond(keys_.sa, request)))};
}

std::vector<Message> ClientParty::OnModel(const Message& m) {
  if (!update_) return {};
  auto [session_id, model] = wire::DecodeModel(m.payload, keys_.encoding);
  const crypto::Digest digest = model.Hash();
  // Every signing attempt must cover the same aggregate.
  if (model_digest_ && *model_digest_ != digest) return {};
  if (nonces_.contains(session_id)) return {};
  model_digest_ = digest;
  model_ = std::move(model);
  ScopedTimer timer(ts_sign_s_);
  auto [it, inserted] =
      nonces_.emplace(session_id, ts::SignerNonces::Generate(keys_.signer.index, rng_));
  return {Reply(wire::type::kCommit, wire::EncodeCommit(session_id, it->second.commitment()))};
}

std::vector<Message> ClientParty::OnSignRequest(const Message& m) {
  if (!model_digest_) return {};
  std::vector<Message> out;
  ScopedTimer timer(ts_sign_s_);
  const ts::SigningSession session = wire::DecodeSession(m.payload, keys_.signer.group_key);
  auto it = nonces_.find(session.id);
  if (it == nonces_.end() || it->second.consumed()) return {};
  ts::PartialSignature partial;
  try {
    partial = ts::TsSign(session, keys_.signer, it->second, *model_digest_);
  } catch (const Error&) {
    return {};
  }
  if (options_.corrupt_partial) partial.response += crypto::Scalar::FromUint64(1);
  if (options_.alt_witness) {
    const crypto::Scalar r = crypto::Scalar::RandomNonZero(rng_);
    Bytes payload;
    AppendU64BE(payload, session.id);
    Append(payload, WitnessContribution(keys_.signer, r).bytes());
    out.push_back(Reply(wire::type::kWitnessShare, std::move(payload)));
  }
  out.push_back(Reply(wire::type::kPartial, wire::EncodePartial(session.id, partial)));
  signed_ = true;
  return out;
}

std::vector<Message> ClientParty::OnProof(const Message& m) {
  if (!model_digest_ || bundle_) return {};
  wire::Reader r(m.payload);
  ProofBundle bundle;
  bundle.round = round_;
  bundle.model_digest = *model_digest_;
  bundle.sigma = ts::ThresholdSignature::Deserialize(r.Take(ts::ThresholdSignature::kBytes));
  bundle.witness = oprf::OprfKey::FromScalar(r.ScalarValue());
  r.ExpectEnd();
  if (!ts::TsVerify(bundle.sigma, bundle.model_digest, keys_.signer.group_key)) return {};
  if (options_.retain_model) bundle.model = model_;
  bundle_ = std::move(bundle);
  return {};
}

// ---------------------------------------------------------------- server

FlServerParty::FlServerParty(const ServerKeyMaterial& keys, uint64_t round,
                             ServerOptions options, crypto::Rng rng)
    : keys_(keys),
      round_(round),
      options_(std::move(options)),
      rng_(std::move(rng)),
      sa_(keys.sa) {}

Message FlServerParty::To(uint32_t client, std::string_view type, Stage stage,
                          Bytes payload) const {
  Message m;
  m.round = round_;
  m.type = std::string(type);
  m.from = endpoint();
  m.to = {sim::Role::kClient, client};
  m.stage = stage;
  m.payload = std::move(payload);
  return m;
}

void FlServerParty::Fail(sim::OutcomeCode code, std::string detail) {
  phase_ = Phase::kDone;
  completion_ = sim::Completion{code, std::move(detail)};
}

std::vector<Message> FlServerParty::Start() {
  std::vector<double> global = options_.global_model;
  if (global.empty()) global.assign(options_.dimension, 0.0);
  const Bytes payload = wire::EncodeModelParams(global);
  std::vector<Message> out;
  for (uint32_t i = 1; i <= keys_.n; ++i) {
    expected_.insert(i);
    out.push_back(To(i, wire::type::kModelParams, Stage::kTrain, payload));
  }
  return out;
}

std::vector<Message> FlServerParty::Handle(const Message& m) {
  if (m.round != round_ || m.from.role != sim::Role::kClient) return {};
  const uint32_t from = m.from.id;
  if (!expected_.contains(from) || phase_ == Phase::kDone) return {};
  try {
    switch (phase_) {
      case Phase::kMasked:
        if (m.type != wire::type::kMasked) return {};
        sa_.ReceiveMasked(from, sa::ModelVector::Deserialize(m.payload, keys_.encoding));
        break;
      case Phase::kRecovery: {
        if (m.type != wire::type::kRecovery) return {};
        ScopedTimer timer(sa_agg_s_);
        sa_.ReceiveRecovery(from, wire::DecodeRecovery(m.payload));
        break;
      }
      case Phase::kCommit: {
        if (m.type != wire::type::kCommit) return {};
        auto [sid, commitment] = wire::DecodeCommit(m.payload, from);
        if (sid != session_id_) return {};
        commitments_[from] = commitment;
        break;
      }
      case Phase::kPartial: {
        if (m.type == wire::type::kWitnessShare) {
          wire::Reader r(m.payload);
          if (r.U64() != session_id_) return {};
          contributions_[from] = r.Element();
          r.ExpectEnd();
          return {};
        }
        if (m.type != wire::type::kPartial) return {};
        auto [sid, partial] = wire::DecodePartial(m.payload);
        if (sid != session_id_ || partial.index != from) return {};
        partials_[from] = partial;
        break;
      }
      case Phase::kDone:
        return {};
    }
  } catch (const Error&) {
    // Malformed input from a client is ignored; the timeout path decides.
    return {};
  }
  responded_.insert(from);
  if (responded_ == expected_) return Advance();
  return {};
}

std::vector<Message> FlServerParty::OnTimeout() {
  if (phase_ == Phase::kDone) return {};
  return Advance();
}

std::vector<Message> FlServerParty::Advance() {
  switch (phase_) {
    case Phase::kMasked: return StartRecovery();
    case Phase::kRecovery: return FinishAggregation();
    case Phase::kCommit: return OpenSigning();
    case Phase::kPartial: return FinishSigning();
    case Phase::kDone: return {};
  }
  return {};
}

std::vector<Message> FlServerParty::StartRecovery() {
  sa_.Classify();
  const size_t online = sa_.online().size();
  if (online < keys_.threshold) {
    Fail(sim::OutcomeCode::kThresholdFailure,
         std::to_string(online) + " online clients, threshold " +
             std::to_string(keys_.threshold));
    return {};
  }
  phase_ = Phase::kRecovery;
  expected_ = sa_.online();
  responded_.clear();
  std::vector<Message> out;
  for (uint32_t i : sa_.online()) {
    out.push_back(To(i, wire::type::kNeighbors, Stage::kRecovery,
                     wire::EncodeIndexLists(sa_.RequestFor(i))));
  }
  return out;
}

std::vector<Message> FlServerParty::FinishAggregation() {
  try {
    ScopedTimer timer(sa_agg_s_);
    model_ = sa::SaAggregate(sa_);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kUnmaskableRound) throw;
    Fail(sim::OutcomeCode::kUnmaskable, e.what());
    return {};
  }
  model_digest_ = model_->Hash();
  std::vector<uint32_t> online(sa_.online().begin(), sa_.online().end());
  return RequestCommitments(online);
}

std::vector<Message> FlServerParty::RequestCommitments(const std::vector<uint32_t>& clients) {
  ++attempts_;
  session_id_ = attempts_;
  phase_ = Phase::kCommit;
  expected_ = {clients.begin(), clients.end()};
  responded_.clear();
  commitments_.clear();
  partials_.clear();
  const Bytes payload = wire::EncodeModel(session_id_, *model_);
  std::vector<Message> out;
  for (uint32_t i : clients) out.push_back(To(i, wire::type::kModel, Stage::kSign, payload));
  return out;
}

std::vector<Message> FlServerParty::OpenSigning() {
  std::vector<ts::NonceCommitment> list;
  for (const auto& [i, c] : commitments_) list.push_back(c);
  if (list.size() < keys_.threshold) {
    Fail(sim::OutcomeCode::kThresholdFailure,
         std::to_string(list.size()) + " signers committed, threshold " +
             std::to_string(keys_.threshold));
    return {};
  }
  {
    ScopedTimer timer(ts_agg_s_);
    session_ = ts::OpenSession(session_id_, model_digest_, keys_.group_key, std::move(list),
                               keys_.threshold);
  }
  phase_ = Phase::kPartial;
  const std::vector<uint32_t> participants = session_->participants();
  expected_ = {participants.begin(), participants.end()};
  responded_.clear();
  const Bytes payload = wire::EncodeSession(*session_);
  std::vector<Message> out;
  for (uint32_t i : participants) {
    out.push_back(To(i, wire::type::kSignRequest, Stage::kSign, payload));
  }
  return out;
}

std::vector<Message> FlServerParty::Retry(const std::vector<uint32_t>& drop,
                                          const std::string& why) {
  excluded_.insert(excluded_.end(), drop.begin(), drop.end());
  std::vector<uint32_t> remaining;
  for (uint32_t i : session_->participants()) {
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) remaining.push_back(i);
  }
  if (remaining.size() < keys_.threshold || attempts_ >= options_.max_sign_attempts) {
    Fail(sim::OutcomeCode::kThresholdFailure, why);
    return {};
  }
  return RequestCommitments(remaining);
}

std::vector<Message> FlServerParty::FinishSigning() {
  const std::vector<uint32_t> participants = session_->participants();
  std::vector<uint32_t> missing;
  for (uint32_t i : participants) {
    if (!partials_.contains(i)) missing.push_back(i);
  }
  if (!missing.empty()) return Retry(missing, "signers went silent");

  std::vector<ts::PartialSignature> partials;
  for (const auto& [i, p] : partials_) partials.push_back(p);
  try {
    ScopedTimer timer(ts_agg_s_);
    sigma_ = ts::TsSignAgg(partials, *session_, keys_.threshold, keys_.verification_shares);
  } catch (const InvalidPartialError& e) {
    return Retry({e.culprit()}, e.what());
  }

  ScopedTimer timer(ts_agg_s_);
  try {
    witness_ = options_.alt_witness ? AltGroupWitness(contributions_, participants)
                                    : oprf::OprfKey::Random(rng_);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kWitness) throw;
    Fail(sim::OutcomeCode::kAborted, e.what());
    return {};
  }
  token_ = GlobalToken{round_, keys_.group_key,
                       oprf::OprfDirect(*witness_, keys_.group_key.bytes())};
  signers_ = participants;

  Bytes payload = sigma_->Serialize();
  Append(payload, witness_->scalar().ToBytes());
  std::vector<Message> out;
  for (uint32_t i : participants) out.push_back(To(i, wire::type::kProof, Stage::kDeliver, payload));
  phase_ = Phase::kDone;
  completion_ = sim::Completion{sim::OutcomeCode::kSuccess, ""};
  return out;
}

std::string FlServerParty::DescribeState() const {
  static constexpr const char* kNames[] = {"masked", "recovery", "commit", "partial", "done"};
  std::ostringstream os;
  os << "fl-server phase=" << kNames[static_cast<int>(phase_)] << " expected="
     << expected_.size() << " responded=" << responded_.size() << " attempt=" << attempts_;
  return os.str();
}

}  // namespace fedpop::protocol
