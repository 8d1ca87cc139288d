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

#ifndef FEDPOP_OPRF_OPRF_H_
#define FEDPOP_OPRF_OPRF_H_

#include "fedpop/bytes.h"
#include "fedpop/crypto/group.h"
#include "fedpop/crypto/hash.h"
#include "fedpop/crypto/rng.h"
#include "fedpop/crypto/scalar.h"

// 2HashDH: F_K(x) = H2(x, H1(x)^K). The key holder evaluates blinded
// inputs alpha = H1(x)^rho and never sees x.
namespace fedpop::oprf {

class OprfKey {
 public:
  // K = 1; zero is never representable.
  OprfKey() : k_(crypto::Scalar::FromUint64(1)) {}
  // Throws Error(kParameter) for K = 0.
  static OprfKey FromScalar(const crypto::Scalar& k);
  static OprfKey Random(crypto::Rng& rng);

  const crypto::Scalar& scalar() const { return k_; }
  friend bool operator==(const OprfKey&, const OprfKey&) = default;

 private:
  explicit OprfKey(const crypto::Scalar& k) : k_(k) {}
  crypto::Scalar k_;
};

class BlindState {
 public:
  const crypto::Scalar& rho() const { return rho_; }
  const Bytes& input() const { return input_; }
  const crypto::GroupElement& alpha() const { return alpha_; }
  bool used() const { return used_; }

 private:
  friend BlindState OprfBlindWith(ByteSpan x, const crypto::Scalar& rho);
  friend crypto::Digest OprfUnblind(const crypto::GroupElement& beta, BlindState& state);
  crypto::Scalar rho_;
  Bytes input_;
  crypto::GroupElement alpha_;
  bool used_ = false;
};

// H2(x, y) with both parts length-prefixed under tag "fedpop/H2".
crypto::Digest H2(ByteSpan x, const crypto::GroupElement& y);

crypto::Digest OprfDirect(const OprfKey& key, ByteSpan x);

// Fresh rho from Z_q \ {0}.
BlindState OprfBlind(ByteSpan x, crypto::Rng& rng);
// Deterministic blinding with a caller-chosen nonzero rho.
BlindState OprfBlindWith(ByteSpan x, const crypto::Scalar& rho);

// beta = alpha^K. Throws Error(kMembership) for the identity.
crypto::GroupElement OprfEvaluate(const crypto::GroupElement& alpha, const OprfKey& key);
// Same, parsing alpha from the wire first.
crypto::GroupElement OprfEvaluate(ByteSpan alpha_bytes, const OprfKey& key);

// H2(x, beta^(1/rho)). Throws Error(kState) if the state was used before and
// Error(kMembership) for an identity beta.
crypto::Digest OprfUnblind(const crypto::GroupElement& beta, BlindState& state);

}  // namespace fedpop::oprf

#endif  // FEDPOP_OPRF_OPRF_H_
