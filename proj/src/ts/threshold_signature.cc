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

#include "fedpop/ts/threshold_signature.h"

#include <algorithm>
#include <set>
#include <string>

#include "fedpop/crypto/shamir.h"
#include "fedpop/status.h"

namespace fedpop::ts {

using crypto::GroupElement;
using crypto::Scalar;

KeygenResult TsKeygen(uint32_t t, uint32_t n, crypto::Rng& rng) {
  if (t < 1 || t > n) {
    throw Error(ErrorCode::kParameter, "signature threshold must satisfy 1 <= t <= n");
  }
  KeygenResult result;
  {
    const Scalar secret = Scalar::RandomNonZero(rng);
    result.group_key = GroupElement::BaseMul(secret);
    const auto shares = crypto::ShamirShareSecret(secret, t, n, rng);
    for (const auto& share : shares) {
      SignerKeys k;
      k.index = share.index;
      k.signing_share = share.value;
      k.verification_share = GroupElement::BaseMul(share.value);
      k.group_key = result.group_key;
      k.threshold = t;
      k.signers = n;
      result.verification_shares.push_back(k.verification_share);
      result.keys.push_back(k);
    }
  }
  return result;
}

SignerNonces SignerNonces::Generate(uint32_t index, crypto::Rng& rng) {
  SignerNonces n;
  n.hiding_ = Scalar::RandomNonZero(rng);
  n.binding_ = Scalar::RandomNonZero(rng);
  n.commitment_ = {index, GroupElement::BaseMul(n.hiding_),
                   GroupElement::BaseMul(n.binding_)};
  return n;
}

SignerNonces::Secret SignerNonces::Consume() {
  if (consumed_) throw Error(ErrorCode::kSession, "signing nonces already used");
  consumed_ = true;
  Secret s{hiding_, binding_};
  hiding_ = Scalar();
  binding_ = Scalar();
  return s;
}

std::vector<uint32_t> SigningSession::participants() const {
  std::vector<uint32_t> out;
  out.reserve(commitments.size());
  for (const auto& c : commitments) out.push_back(c.index);
  return out;
}

bool SigningSession::Contains(uint32_t index) const {
  return std::any_of(commitments.begin(), commitments.end(),
                     [index](const NonceCommitment& c) { return c.index == index; });
}

Bytes SigningSession::BindingContext() const {
  Bytes out;
  AppendU64BE(out, id);
  Append(out, message.bytes);
  Append(out, group_key.bytes());
  AppendU32BE(out, static_cast<uint32_t>(commitments.size()));
  for (const auto& c : commitments) {
    AppendU32BE(out, c.index);
    Append(out, c.hiding.bytes());
    Append(out, c.binding.bytes());
  }
  return out;
}

SigningSession OpenSession(uint64_t id, const crypto::Digest& message,
                           const GroupElement& group_key,
                           std::vector<NonceCommitment> commitments,
                           uint32_t threshold) {
  std::sort(commitments.begin(), commitments.end(),
            [](const auto& a, const auto& b) { return a.index < b.index; });
  for (size_t k = 1; k < commitments.size(); ++k) {
    if (commitments[k].index == commitments[k - 1].index) {
      throw Error(ErrorCode::kSession, "duplicate participant in session");
    }
  }
  for (const auto& c : commitments) {
    if (c.index == 0 || c.hiding.IsIdentity() || c.binding.IsIdentity()) {
      throw Error(ErrorCode::kSession, "malformed nonce commitment");
    }
  }
  if (commitments.size() < threshold) {
    throw Error(ErrorCode::kThreshold,
                "session has " + std::to_string(commitments.size()) +
                    " participants, threshold is " + std::to_string(threshold));
  }
  return SigningSession{id, message, group_key, std::move(commitments)};
}

Scalar BindingFactor(const SigningSession& session, uint32_t index) {
  const Bytes context = session.BindingContext();
  Bytes idx;
  AppendU32BE(idx, index);
  return crypto::HashToScalar(crypto::tags::kBinding, {context, idx});
}

GroupElement GroupCommitment(const SigningSession& session) {
  GroupElement r;
  for (const auto& c : session.commitments) {
    r += c.hiding + c.binding.Mul(BindingFactor(session, c.index));
  }
  return r;
}

Scalar Challenge(const GroupElement& commitment, const GroupElement& group_key,
                 const crypto::Digest& message) {
  return crypto::HashToScalar(crypto::tags::kChallenge,
                              {commitment.bytes(), group_key.bytes(), message.bytes});
}

PartialSignature TsSign(const SigningSession& session, const SignerKeys& keys,
                        SignerNonces& nonces, const crypto::Digest& message) {
  if (!session.Contains(keys.index)) {
    throw Error(ErrorCode::kMembership,
                "signer " + std::to_string(keys.index) + " is not a session participant");
  }
  if (message != session.message) {
    throw Error(ErrorCode::kSession, "message differs from the session message");
  }
  if (keys.group_key != session.group_key) {
    throw Error(ErrorCode::kSession, "session is for a different group key");
  }
  const auto own = std::find_if(session.commitments.begin(), session.commitments.end(),
                                [&](const auto& c) { return c.index == keys.index; });
  if (*own != nonces.commitment()) {
    throw Error(ErrorCode::kSession, "session does not carry this signer's nonces");
  }
  const auto secret = nonces.Consume();
  const std::vector<uint32_t> participants = session.participants();
  const Scalar lambda = crypto::LagrangeAtZero<Scalar>(participants, keys.index);
  const Scalar rho = BindingFactor(session, keys.index);
  const Scalar c = Challenge(GroupCommitment(session), session.group_key, message);
  return {keys.index, secret.hiding + secret.binding * rho + lambda * keys.signing_share * c};
}

Bytes ThresholdSignature::Serialize() const {
  Bytes out;
  Append(out, commitment.bytes());
  Append(out, response.ToBytes());
  return out;
}

ThresholdSignature ThresholdSignature::Deserialize(ByteSpan bytes) {
  if (bytes.size() != kBytes) throw Error(ErrorCode::kParse, "signature must be 64 bytes");
  ThresholdSignature s;
  s.commitment = GroupElement::FromBytes(bytes.first(32));
  s.response = Scalar::FromBytes(bytes.subspan(32));
  return s;
}

ThresholdSignature TsSignAgg(std::span<const PartialSignature> partials,
                             const SigningSession& session, uint32_t threshold,
                             std::span<const GroupElement> verification_shares) {
  if (partials.size() < threshold) {
    throw Error(ErrorCode::kThreshold,
                std::to_string(partials.size()) + " partial signatures, threshold is " +
                    std::to_string(threshold));
  }
  const std::vector<uint32_t> participants = session.participants();
  const GroupElement commitment = GroupCommitment(session);
  const Scalar c = Challenge(commitment, session.group_key, session.message);

  std::set<uint32_t> seen;
  Scalar z;
  for (const PartialSignature& p : partials) {
    if (!session.Contains(p.index)) {
      throw InvalidPartialError(p.index, "partial from non-participant " +
                                             std::to_string(p.index));
    }
    if (!seen.insert(p.index).second) {
      throw InvalidPartialError(p.index, "repeated partial from " + std::to_string(p.index));
    }
    if (p.index > verification_shares.size()) {
      throw InvalidPartialError(p.index, "no verification share for signer");
    }
    const auto& nc = *std::find_if(session.commitments.begin(), session.commitments.end(),
                                   [&](const auto& x) { return x.index == p.index; });
    const Scalar lambda = crypto::LagrangeAtZero<Scalar>(participants, p.index);
    const GroupElement expected = nc.hiding +
                                  nc.binding.Mul(BindingFactor(session, p.index)) +
                                  verification_shares[p.index - 1].Mul(c * lambda);
    if (GroupElement::BaseMul(p.response) != expected) {
      throw InvalidPartialError(p.index, "partial signature of signer " +
                                             std::to_string(p.index) + " is invalid");
    }
    z += p.response;
  }
  if (seen.size() != participants.size()) {
    throw Error(ErrorCode::kSession, "missing partial signatures from session participants");
  }
  return {commitment, z};
}

bool TsVerify(const ThresholdSignature& sig, const crypto::Digest& message,
              const GroupElement& group_key) {
  if (group_key.IsIdentity() || sig.commitment.IsIdentity()) return false;
  const Scalar c = Challenge(sig.commitment, group_key, message);
  return GroupElement::BaseMul(sig.response) == sig.commitment + group_key.Mul(c);
}

}  // namespace fedpop::ts
