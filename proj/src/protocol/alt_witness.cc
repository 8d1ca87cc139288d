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

#include "fedpop/protocol/alt_witness.h"

#include <string>

#include "fedpop/crypto/hash.h"
#include "fedpop/status.h"

namespace fedpop::protocol {

using crypto::GroupElement;

GroupElement WitnessContribution(const ts::SignerKeys& keys, const crypto::Scalar& r) {
  return GroupElement::BaseMul(keys.signing_share).Mul(r);
}

GroupElement WitnessProduct(const std::map<uint32_t, GroupElement>& contributions,
                            std::span<const uint32_t> participants) {
  if (participants.empty()) throw Error(ErrorCode::kWitness, "no participants");
  GroupElement product;
  for (uint32_t i : participants) {
    auto it = contributions.find(i);
    if (it == contributions.end()) {
      throw Error(ErrorCode::kWitness,
                  "missing witness contribution from client " + std::to_string(i));
    }
    product += it->second;
  }
  return product;
}

oprf::OprfKey WitnessFromProduct(const GroupElement& product) {
  crypto::Scalar k = crypto::HashToScalar(crypto::tags::kAltK, {product.bytes()});
  for (uint8_t retry = 1; k.IsZero(); ++retry) {
    const uint8_t ctr[1] = {retry};
    k = crypto::HashToScalar(crypto::tags::kAltK, {product.bytes(), ctr});
  }
  return oprf::OprfKey::FromScalar(k);
}

oprf::OprfKey AltGroupWitness(const std::map<uint32_t, GroupElement>& contributions,
                              std::span<const uint32_t> participants) {
  return WitnessFromProduct(WitnessProduct(contributions, participants));
}

}  // namespace fedpop::protocol
