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

#ifndef FEDPOP_CRYPTO_GROUP_H_
#define FEDPOP_CRYPTO_GROUP_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "fedpop/crypto/scalar.h"

namespace fedpop::crypto {

// Parameters of the prime-order group every module works in.
struct GroupParams {
  std::string name;
  size_t element_bytes;
  size_t scalar_bytes;
  size_t digest_bytes;
};

const GroupParams& DefaultGroup();

// Element of the ristretto255 group in its canonical compressed encoding.
class GroupElement {
 public:
  static constexpr size_t kBytes = 32;

  // Identity.
  GroupElement() = default;

  static GroupElement Generator();
  // Rejects any encoding that is not a canonical group element.
  static GroupElement FromBytes(std::span<const uint8_t> bytes);
  // g^s.
  static GroupElement BaseMul(const Scalar& s);

  const std::array<uint8_t, kBytes>& bytes() const { return bytes_; }
  std::string ToHex() const;
  bool IsIdentity() const;

  GroupElement operator+(const GroupElement& o) const;
  GroupElement operator-(const GroupElement& o) const;
  GroupElement& operator+=(const GroupElement& o) { return *this = *this + o; }
  // Exponentiation in multiplicative notation: this^s.
  GroupElement Mul(const Scalar& s) const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  std::array<uint8_t, kBytes> bytes_{};
};

}  // namespace fedpop::crypto

#endif  // FEDPOP_CRYPTO_GROUP_H_
