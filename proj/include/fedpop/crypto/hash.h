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

#ifndef FEDPOP_CRYPTO_HASH_H_
#define FEDPOP_CRYPTO_HASH_H_

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fedpop/bytes.h"
#include "fedpop/crypto/group.h"
#include "fedpop/crypto/scalar.h"

namespace fedpop::crypto {

// 256-bit hash output.
struct Digest {
  static constexpr size_t kBytes = 32;
  std::array<uint8_t, kBytes> bytes{};

  static Digest FromBytes(std::span<const uint8_t> in);
  std::string ToHex() const { return fedpop::ToHex(bytes); }
  friend bool operator==(const Digest&, const Digest&) = default;
  friend auto operator<=>(const Digest&, const Digest&) = default;
};

namespace tags {
inline constexpr std::string_view kModel = "fedpop/model";
inline constexpr std::string_view kH1 = "fedpop/H1";
inline constexpr std::string_view kH2 = "fedpop/H2";
inline constexpr std::string_view kPair = "fedpop/pair";
inline constexpr std::string_view kBinding = "fedpop/binding";
inline constexpr std::string_view kChallenge = "fedpop/challenge";
inline constexpr std::string_view kAltK = "fedpop/altK";
}  // namespace tags

// BLAKE2b-256 over len(tag) || tag || (len(part) || part)*, lengths as
// 8-byte big-endian integers.
Digest HashToDigest(std::string_view tag, std::initializer_list<ByteSpan> parts);
Digest HashToDigest(std::string_view tag, std::span<const ByteSpan> parts);

// Same framing with a 64-byte output reduced into Z_q.
Scalar HashToScalar(std::string_view tag, std::initializer_list<ByteSpan> parts);

// Maps bytes to a non-identity group element (ristretto255 hash-to-group
// on a 64-byte domain-separated hash). Used as H1.
GroupElement HashToGroup(ByteSpan input);

}  // namespace fedpop::crypto

#endif  // FEDPOP_CRYPTO_HASH_H_
