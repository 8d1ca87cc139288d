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

#include "fedpop/oprf/oprf.h"

#include "fedpop/status.h"

namespace fedpop::oprf {

using crypto::GroupElement;
using crypto::Scalar;

OprfKey OprfKey::FromScalar(const Scalar& k) {
  if (k.IsZero()) throw Error(ErrorCode::kParameter, "OPRF key must be nonzero");
  return OprfKey(k);
}

OprfKey OprfKey::Random(crypto::Rng& rng) { return OprfKey(Scalar::RandomNonZero(rng)); }

crypto::Digest H2(ByteSpan x, const GroupElement& y) {
  return crypto::HashToDigest(crypto::tags::kH2, {x, y.bytes()});
}

crypto::Digest OprfDirect(const OprfKey& key, ByteSpan x) {
  return H2(x, crypto::HashToGroup(x).Mul(key.scalar()));
}

BlindState OprfBlind(ByteSpan x, crypto::Rng& rng) {
  return OprfBlindWith(x, Scalar::RandomNonZero(rng));
}

BlindState OprfBlindWith(ByteSpan x, const Scalar& rho) {
  if (rho.IsZero()) throw Error(ErrorCode::kParameter, "blinding scalar must be nonzero");
  BlindState s;
  s.rho_ = rho;
  s.input_.assign(x.begin(), x.end());
  s.alpha_ = crypto::HashToGroup(x).Mul(rho);
  return s;
}

GroupElement OprfEvaluate(const GroupElement& alpha, const OprfKey& key) {
  if (alpha.IsIdentity()) {
    throw Error(ErrorCode::kMembership, "blinded element is the identity");
  }
  return alpha.Mul(key.scalar());
}

GroupElement OprfEvaluate(ByteSpan alpha_bytes, const OprfKey& key) {
  return OprfEvaluate(GroupElement::FromBytes(alpha_bytes), key);
}

crypto::Digest OprfUnblind(const GroupElement& beta, BlindState& state) {
  if (state.used_) throw Error(ErrorCode::kState, "blind state already used");
  state.used_ = true;
  if (beta.IsIdentity()) {
    throw Error(ErrorCode::kMembership, "evaluated element is the identity");
  }
  return H2(state.input_, beta.Mul(state.rho_.Inverse()));
}

}  // namespace fedpop::oprf
