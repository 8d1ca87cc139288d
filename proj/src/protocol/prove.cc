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

#include "fedpop/protocol/prove.h"

#include "fedpop/protocol/parties.h"
#include "fedpop/protocol/wire.h"
#include "fedpop/sim/transport.h"
#include "fedpop/status.h"

namespace fedpop::protocol {

using sim::Message;

namespace {

// Prove messages carry roles only; the client endpoint has no id.
constexpr sim::Endpoint kAnonymousClient{sim::Role::kClient, 0};
constexpr sim::Endpoint kServiceProviderEndpoint{sim::Role::kServiceProvider, 0};

Message Envelope(uint64_t round, std::string_view type, sim::Endpoint from, sim::Endpoint to,
                 Bytes payload) {
  Message m;
  m.round = round;
  m.type = std::string(type);
  m.from = from;
  m.to = to;
  m.payload = std::move(payload);
  return m;
}

class ProveClientParty : public sim::Party {
 public:
  explicit ProveClientParty(const ProofBundle& bundle) : bundle_(bundle) {}

  sim::Endpoint endpoint() const override { return kAnonymousClient; }

  std::vector<Message> Start() override {
    ScopedTimer timer(seconds_);
    return {Send(wire::type::kModelHash, Bytes(bundle_.model_digest.bytes.begin(),
                                               bundle_.model_digest.bytes.end()))};
  }

  std::vector<Message> Handle(const Message& m) override {
    ScopedTimer timer(seconds_);
    if (m.type == wire::type::kAlpha) {
      if (aborted_ || answered_) return {};
      crypto::GroupElement beta;
      try {
        beta = oprf::OprfEvaluate(m.payload, bundle_.witness);
      } catch (const Error&) {
        aborted_ = true;  // alpha not in G
        return {};
      }
      answered_ = true;
      Bytes payload = bundle_.sigma.Serialize();
      Append(payload, beta.bytes());
      return {Send(wire::type::kSigmaBeta, std::move(payload))};
    }
    if (m.type == wire::type::kDecision && m.payload.size() == 1 && !decision_) {
      decision_ = m.payload[0] == 1 ? 1 : 0;
    }
    return {};
  }

  int decision() const { return aborted_ ? 0 : decision_.value_or(0); }
  bool aborted() const { return aborted_; }
  double seconds() const { return seconds_; }

 private:
  Message Send(std::string_view type, Bytes payload) const {
    return Envelope(bundle_.round, type, kAnonymousClient, kServiceProviderEndpoint,
                    std::move(payload));
  }

  const ProofBundle& bundle_;
  bool aborted_ = false;
  bool answered_ = false;
  std::optional<int> decision_;
  double seconds_ = 0;
};

class ServiceProviderParty : public sim::Coordinator {
 public:
  ServiceProviderParty(const ServiceProvider::Entry& entry, const ProveOptions& options)
      : entry_(entry), options_(options), rng_(crypto::Rng::FromSeed(options.sp_seed)) {}

  sim::Endpoint endpoint() const override { return kServiceProviderEndpoint; }

  std::vector<Message> Handle(const Message& m) override {
    if (completion_) return {};
    ScopedTimer timer(seconds_);
    if (m.type == wire::type::kModelHash && !blind_) return OnModelHash(m);
    if (m.type == wire::type::kSigmaBeta && blind_) return OnSigmaBeta(m);
    return {};
  }

  std::vector<Message> OnTimeout() override {
    if (completion_) return {};
    Decide(ProveVerdict::kTimeout);
    return {};
  }

  std::optional<sim::Completion> completion() const override { return completion_; }

  std::string DescribeState() const override {
    return blind_ ? "service-provider awaiting sigma/beta" : "service-provider awaiting H(M)";
  }

  int decision() const { return verdict_ == ProveVerdict::kAccepted ? 1 : 0; }
  ProveVerdict verdict() const { return verdict_; }
  double seconds() const { return seconds_; }

 private:
  Message Send(std::string_view type, Bytes payload) const {
    return Envelope(entry_.token.round, type, kServiceProviderEndpoint, kAnonymousClient,
                    std::move(payload));
  }

  std::vector<Message> Decide(ProveVerdict v) {
    verdict_ = v;
    completion_ = sim::Completion{sim::OutcomeCode::kSuccess, VerdictName(v)};
    return {Send(wire::type::kDecision, Bytes{static_cast<uint8_t>(decision())})};
  }

  std::vector<Message> OnModelHash(const Message& m) {
    if (m.payload.size() != crypto::Digest::kBytes) return Decide(ProveVerdict::kMalformed);
    if (crypto::Digest::FromBytes(m.payload) != entry_.model_digest) {
      return Decide(ProveVerdict::kHashMismatch);
    }
    const ByteSpan x = entry_.token.group_key.bytes();
    blind_ = options_.fixed_rho ? oprf::OprfBlindWith(x, *options_.fixed_rho)
                                : oprf::OprfBlind(x, rng_);
    const auto& alpha = blind_->alpha().bytes();
    return {Send(wire::type::kAlpha,
                 options_.alpha_override ? *options_.alpha_override
                                         : Bytes(alpha.begin(), alpha.end()))};
  }

  std::vector<Message> OnSigmaBeta(const Message& m) {
    ts::ThresholdSignature sigma;
    crypto::GroupElement beta;
    try {
      wire::Reader r(m.payload);
      sigma = ts::ThresholdSignature::Deserialize(r.Take(ts::ThresholdSignature::kBytes));
      beta = r.Element();
      r.ExpectEnd();
    } catch (const Error&) {
      return Decide(ProveVerdict::kMalformed);
    }
    if (!ts::TsVerify(sigma, entry_.model_digest, entry_.token.group_key)) {
      return Decide(ProveVerdict::kInvalidSignature);
    }
    crypto::Digest value;
    try {
      value = oprf::OprfUnblind(beta, *blind_);
    } catch (const Error&) {
      return Decide(ProveVerdict::kWitnessMismatch);
    }
    return Decide(value == entry_.token.prf_value ? ProveVerdict::kAccepted
                                                  : ProveVerdict::kWitnessMismatch);
  }

  const ServiceProvider::Entry& entry_;
  const ProveOptions& options_;
  crypto::Rng rng_;
  std::optional<oprf::BlindState> blind_;
  std::optional<sim::Completion> completion_;
  ProveVerdict verdict_ = ProveVerdict::kTimeout;
  double seconds_ = 0;
};

}  // namespace

void ServiceProvider::Store(sa::ModelVector model, GlobalToken token) {
  const uint64_t round = token.round;
  Entry entry{std::move(model), {}, std::move(token)};
  entry.model_digest = entry.model.Hash();
  rounds_[round] = std::move(entry);
}

const ServiceProvider::Entry& ServiceProvider::Lookup(uint64_t round) const {
  auto it = rounds_.find(round);
  if (it == rounds_.end()) {
    throw Error(ErrorCode::kLookup, "round " + std::to_string(round) + " was not revealed");
  }
  return it->second;
}

void Reveal(const FlServerArchive& server, uint64_t round, ServiceProvider& sp) {
  const FlServerArchive::Entry& entry = server.Reveal(round);
  sp.Store(entry.model, entry.token);
}

std::string VerdictName(ProveVerdict v) {
  switch (v) {
    case ProveVerdict::kAccepted: return "accepted";
    case ProveVerdict::kHashMismatch: return "hash-mismatch";
    case ProveVerdict::kInvalidAlpha: return "invalid-alpha";
    case ProveVerdict::kInvalidSignature: return "invalid-signature";
    case ProveVerdict::kWitnessMismatch: return "witness-mismatch";
    case ProveVerdict::kMalformed: return "malformed";
    case ProveVerdict::kTimeout: return "timeout";
  }
  return "unknown";
}

ProveResult ProvePhase(const ProofBundle& bundle, const ServiceProvider& sp, uint64_t round,
                       const ProveOptions& options) {
  const ServiceProvider::Entry& entry = sp.Lookup(round);
  ProveClientParty client(bundle);
  ServiceProviderParty provider(entry, options);
  sim::Transport transport;
  sim::DropoutSchedule none;
  sim::RoundOutcome outcome = sim::RunRound({&client}, provider, none, transport);

  ProveResult result;
  result.sp_decision = provider.decision();
  result.client_decision = client.decision();
  result.verdict = client.aborted() && provider.verdict() == ProveVerdict::kTimeout
                       ? ProveVerdict::kInvalidAlpha
                       : provider.verdict();
  result.transcript = std::move(outcome.transcript);
  result.bytes_sp_to_client =
      result.transcript.EnvelopeBytes(sim::Role::kServiceProvider, sim::Role::kClient);
  result.bytes_client_to_sp =
      result.transcript.EnvelopeBytes(sim::Role::kClient, sim::Role::kServiceProvider);
  result.client_seconds = client.seconds();
  result.sp_seconds = provider.seconds();
  return result;
}

}  // namespace fedpop::protocol
