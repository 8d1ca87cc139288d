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

#include "fedpop/crypto/group.h"

#include <sodium.h>

#include <algorithm>

#include "fedpop/bytes.h"
#include "fedpop/status.h"

namespace fedpop::crypto {

const GroupParams& DefaultGroup() {
  static const GroupParams params{"ristretto255", GroupElement::kBytes,
                                  Scalar::kBytes, 32};
  return params;
}

GroupElement GroupElement::Generator() { return BaseMul(Scalar::FromUint64(1)); }

GroupElement GroupElement::FromBytes(std::span<const uint8_t> bytes) {
  EnsureSodium();
  if (bytes.size() != kBytes) {
    throw Error(ErrorCode::kMembership, "group element encoding must be 32 bytes");
  }
  if (crypto_core_ristretto255_is_valid_point(bytes.data()) != 1) {
    throw Error(ErrorCode::kMembership, "encoding is not a group element");
  }
  GroupElement e;
  std::copy(bytes.begin(), bytes.end(), e.bytes_.begin());
  return e;
}

GroupElement GroupElement::BaseMul(const Scalar& s) {
  EnsureSodium();
  GroupElement e;
  // Returns -1 only when the result is the identity, which is all zeros.
  if (crypto_scalarmult_ristretto255_base(e.bytes_.data(), s.le_data()) != 0) {
    e.bytes_.fill(0);
  }
  return e;
}

std::string GroupElement::ToHex() const { return fedpop::ToHex(bytes_); }

bool GroupElement::IsIdentity() const {
  return std::all_of(bytes_.begin(), bytes_.end(), [](uint8_t b) { return b == 0; });
}

GroupElement GroupElement::operator+(const GroupElement& o) const {
  GroupElement r;
  crypto_core_ristretto255_add(r.bytes_.data(), bytes_.data(), o.bytes_.data());
  return r;
}

GroupElement GroupElement::operator-(const GroupElement& o) const {
  GroupElement r;
  crypto_core_ristretto255_sub(r.bytes_.data(), bytes_.data(), o.bytes_.data());
  return r;
}

GroupElement GroupElement::Mul(const Scalar& s) const {
  EnsureSodium();
  GroupElement r;
  if (crypto_scalarmult_ristretto255(r.bytes_.data(), s.le_data(),
                                     bytes_.data()) != 0) {
    r.bytes_.fill(0);
  }
  return r;
}

}  // namespace fedpop::crypto
