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

#ifndef FEDPOP_PROTOCOL_PARTIES_H_
#define FEDPOP_PROTOCOL_PARTIES_H_

#include <chrono>
#include <functional>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fedpop/crypto/rng.h"
#include "fedpop/protocol/types.h"
#include "fedpop/sim/round.h"
#include "fedpop/trainer/trainer.h"

namespace fedpop::protocol {

inline constexpr sim::Endpoint kFlServerEndpoint{sim::Role::kFlServer, 0};

struct ClientOptions {
  trainer::TrainerSpec trainer;
  bool alt_witness = false;
  bool retain_model = false;
  // Test seam: send a response shifted by one so the server rejects it.
  bool corrupt_partial = false;
  // Replaces the trainer when set; receives the client id.
  std::function<std::vector<double>(uint32_t)> update_override;
};

// Client side of Generate: trains on pp_ml, protects the update, answers
// share recovery, signs the aggregate and stores the resulting bundle.
class ClientParty : public sim::Party {
 public:
  ClientParty(ClientKeyMaterial& keys, uint64_t round, ClientOptions options, crypto::Rng rng);

  sim::Endpoint endpoint() const override { return {sim::Role::kClient, keys_.id}; }
  std::vector<sim::Message> Handle(const sim::Message& m) override;

  const std::optional<ProofBundle>& bundle() const { return bundle_; }
  const std::optional<std::vector<double>>& update() const { return update_; }
  bool trained() const { return update_.has_value(); }
  bool signed_any() const { return signed_; }
  double sa_train_seconds() const { return sa_train_s_; }
  double ts_sign_seconds() const { return ts_sign_s_; }

 private:
  sim::Message Reply(std::string_view type, Bytes payload) const;
  std::vector<sim::Message> OnModelParams(const sim::Message& m);
  std::vector<sim::Message> OnNeighbors(const sim::Message& m);
  std::vector<sim::Message> OnModel(const sim::Message& m);
  std::vector<sim::Message> OnSignRequest(const sim::Message& m);
  std::vector<sim::Message> OnProof(const sim::Message& m);

  ClientKeyMaterial& keys_;
  uint64_t round_;
  ClientOptions options_;
  crypto::Rng rng_;
  std::optional<std::vector<double>> update_;
  std::optional<sa::ModelVector> model_;
  std::optional<crypto::Digest> model_digest_;
  std::map<uint64_t, ts::SignerNonces> nonces_;
  bool signed_ = false;
  std::optional<ProofBundle> bundle_;
  double sa_train_s_ = 0;
  double ts_sign_s_ = 0;
};

struct ServerOptions {
  std::vector<double> global_model;  // pp_ml; zeros when empty
  uint32_t dimension = 16;
  bool alt_witness = false;
  uint32_t max_sign_attempts = 3;
};

// FL server side of Generate. Phases advance when every expected reply has
// arrived or, failing that, on a simulator timeout.
class FlServerParty : public sim::Coordinator {
 public:
  enum class Phase { kMasked, kRecovery, kCommit, kPartial, kDone };

  FlServerParty(const ServerKeyMaterial& keys, uint64_t round, ServerOptions options,
                crypto::Rng rng);

  sim::Endpoint endpoint() const override { return kFlServerEndpoint; }
  std::vector<sim::Message> Start() override;
  std::vector<sim::Message> Handle(const sim::Message& m) override;
  std::vector<sim::Message> OnTimeout() override;
  std::optional<sim::Completion> completion() const override { return completion_; }
  std::string DescribeState() const override;

  Phase phase() const { return phase_; }
  const std::optional<sa::ModelVector>& model() const { return model_; }
  const std::optional<GlobalToken>& token() const { return token_; }
  const std::optional<oprf::OprfKey>& witness() const { return witness_; }
  const std::optional<ts::ThresholdSignature>& signature() const { return sigma_; }
  const std::set<uint32_t>& online() const { return sa_.online(); }
  const std::vector<uint32_t>& signers() const { return signers_; }
  const std::vector<uint32_t>& excluded() const { return excluded_; }
  double sa_agg_seconds() const { return sa_agg_s_; }
  double ts_agg_seconds() const { return ts_agg_s_; }

 private:
  sim::Message To(uint32_t client, std::string_view type, sim::Stage stage,
                  Bytes payload) const;
  std::vector<sim::Message> Advance();
  std::vector<sim::Message> StartRecovery();
  std::vector<sim::Message> FinishAggregation();
  std::vector<sim::Message> RequestCommitments(const std::vector<uint32_t>& clients);
  std::vector<sim::Message> OpenSigning();
  std::vector<sim::Message> FinishSigning();
  std::vector<sim::Message> Retry(const std::vector<uint32_t>& drop, const std::string& why);
  void Fail(sim::OutcomeCode code, std::string detail);

  const ServerKeyMaterial& keys_;
  uint64_t round_;
  ServerOptions options_;
  crypto::Rng rng_;
  sa::SAServerState sa_;
  Phase phase_ = Phase::kMasked;
  std::set<uint32_t> expected_;
  std::set<uint32_t> responded_;
  std::optional<sa::ModelVector> model_;
  crypto::Digest model_digest_;
  uint64_t session_id_ = 0;
  uint32_t attempts_ = 0;
  std::map<uint32_t, ts::NonceCommitment> commitments_;
  std::optional<ts::SigningSession> session_;
  std::map<uint32_t, ts::PartialSignature> partials_;
  std::map<uint32_t, crypto::GroupElement> contributions_;
  std::vector<uint32_t> signers_;
  std::vector<uint32_t> excluded_;
  std::optional<ts::ThresholdSignature> sigma_;
  std::optional<oprf::OprfKey> witness_;
  std::optional<GlobalToken> token_;
  std::optional<sim::Completion> completion_;
  double sa_agg_s_ = 0;
  double ts_agg_s_ = 0;
};

// Wall-clock stopwatch adding elapsed seconds to `sink` on destruction.
class ScopedTimer {
 public:
  explicit ScopedTimer(double& sink)
      : sink_(sink), start_(std::chrono::steady_clock::now()) {}
  ~ScopedTimer() {
    sink_ += std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }
  ScopedTimer(const ScopedTimer&) = delete;
  ScopedTimer& operator=(const ScopedTimer&) = delete;

 private:
  double& sink_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace fedpop::protocol

#endif  // FEDPOP_PROTOCOL_PARTIES_H_
