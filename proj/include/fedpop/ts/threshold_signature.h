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

#ifndef FEDPOP_TS_THRESHOLD_SIGNATURE_H_
#define FEDPOP_TS_THRESHOLD_SIGNATURE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "fedpop/bytes.h"
#include "fedpop/crypto/group.h"
#include "fedpop/crypto/hash.h"
#include "fedpop/crypto/rng.h"
#include "fedpop/crypto/scalar.h"

// (t, n) threshold Schnorr signatures over ristretto255 with two-round
// nonce-commitment signing. The coordinator (the FL server) collects nonce
// commitments, fixes the participant set in a SigningSession, and aggregates
// the partial responses into an ordinary Schnorr signature under VK.
namespace fedpop::ts {

struct SignerKeys {
  uint32_t index = 0;
  crypto::Scalar signing_share;
  crypto::GroupElement verification_share;
  crypto::GroupElement group_key;
  uint32_t threshold = 0;
  uint32_t signers = 0;
};

struct KeygenResult {
  crypto::GroupElement group_key;
  std::vector<SignerKeys> keys;  // keys[i-1] belongs to signer i
  // Public verification shares, indexed like keys.
  std::vector<crypto::GroupElement> verification_shares;
};

// Trusted-dealer key generation. The dealer polynomial is discarded on
// return.
KeygenResult TsKeygen(uint32_t t, uint32_t n, crypto::Rng& rng);

struct NonceCommitment {
  uint32_t index = 0;
  crypto::GroupElement hiding;
  crypto::GroupElement binding;
  friend bool operator==(const NonceCommitment&, const NonceCommitment&) = default;
};

// Secret nonce pair held by one signer for one session; single use.
class SignerNonces {
 public:
  static SignerNonces Generate(uint32_t index, crypto::Rng& rng);

  const NonceCommitment& commitment() const { return commitment_; }
  bool consumed() const { return consumed_; }

  struct Secret {
    crypto::Scalar hiding;
    crypto::Scalar binding;
  };
  // Hands out the nonces once; Error(kSession) afterwards.
  Secret Consume();

 private:
  crypto::Scalar hiding_;
  crypto::Scalar binding_;
  NonceCommitment commitment_;
  bool consumed_ = false;
};

struct SigningSession {
  uint64_t id = 0;
  crypto::Digest message;
  crypto::GroupElement group_key;
  // Sorted by index; fixes the participant set.
  std::vector<NonceCommitment> commitments;

  std::vector<uint32_t> participants() const;
  bool Contains(uint32_t index) const;
  // Encoding of everything the binding factors commit to.
  Bytes BindingContext() const;
};

// Throws Error(kThreshold) with fewer than `threshold` commitments and
// Error(kSession) on duplicate indices.
SigningSession OpenSession(uint64_t id, const crypto::Digest& message,
                           const crypto::GroupElement& group_key,
                           std::vector<NonceCommitment> commitments,
                           uint32_t threshold);

struct PartialSignature {
  uint32_t index = 0;
  crypto::Scalar response;
  friend bool operator==(const PartialSignature&, const PartialSignature&) = default;
};

// Per-signer binding factor and the session's group commitment.
crypto::Scalar BindingFactor(const SigningSession& session, uint32_t index);
crypto::GroupElement GroupCommitment(const SigningSession& session);
crypto::Scalar Challenge(const crypto::GroupElement& commitment,
                         const crypto::GroupElement& group_key,
                         const crypto::Digest& message);

// Errors: Error(kMembership) when the signer is not a participant,
// Error(kSession) on nonce reuse, foreign nonces or a message that differs
// from the session's.
PartialSignature TsSign(const SigningSession& session, const SignerKeys& keys,
                        SignerNonces& nonces, const crypto::Digest& message);

struct ThresholdSignature {
  static constexpr size_t kBytes = 64;
  crypto::GroupElement commitment;
  crypto::Scalar response;

  // Compressed commitment followed by the big-endian response.
  Bytes Serialize() const;
  static ThresholdSignature Deserialize(ByteSpan bytes);
  friend bool operator==(const ThresholdSignature&, const ThresholdSignature&) = default;
};

// Errors: Error(kThreshold) with fewer than t partials;
// InvalidPartialError naming the first partial that fails its share check,
// comes from a non-participant, or repeats an index; Error(kSession) when a
// participant's partial is missing.
ThresholdSignature TsSignAgg(std::span<const PartialSignature> partials,
                             const SigningSession& session, uint32_t threshold,
                             std::span<const crypto::GroupElement> verification_shares);

bool TsVerify(const ThresholdSignature& sig, const crypto::Digest& message,
              const crypto::GroupElement& group_key);

}  // namespace fedpop::ts

#endif  // FEDPOP_TS_THRESHOLD_SIGNATURE_H_
