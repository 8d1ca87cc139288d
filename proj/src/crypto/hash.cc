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

#include "fedpop/crypto/hash.h"

#include <sodium.h>

#include <algorithm>

#include "fedpop/status.h"

namespace fedpop::crypto {

namespace {

void UpdateFramed(crypto_generichash_state& st, ByteSpan part) {
  Bytes len;
  AppendU64BE(len, part.size());
  crypto_generichash_update(&st, len.data(), len.size());
  crypto_generichash_update(&st, part.data(), part.size());
}

template <size_t N>
std::array<uint8_t, N> FramedHash(std::string_view tag,
                                  std::span<const ByteSpan> parts) {
  EnsureSodium();
  crypto_generichash_state st;
  crypto_generichash_init(&st, nullptr, 0, N);
  UpdateFramed(st, AsBytes(tag));
  for (const ByteSpan& p : parts) UpdateFramed(st, p);
  std::array<uint8_t, N> out;
  crypto_generichash_final(&st, out.data(), N);
  return out;
}

}  // namespace

Digest Digest::FromBytes(std::span<const uint8_t> in) {
  if (in.size() != kBytes) throw Error(ErrorCode::kParse, "digest must be 32 bytes");
  Digest d;
  std::copy(in.begin(), in.end(), d.bytes.begin());
  return d;
}

Digest HashToDigest(std::string_view tag, std::span<const ByteSpan> parts) {
  return Digest{FramedHash<Digest::kBytes>(tag, parts)};
}

Digest HashToDigest(std::string_view tag, std::initializer_list<ByteSpan> parts) {
  return HashToDigest(tag, std::span<const ByteSpan>(parts.begin(), parts.size()));
}

Scalar HashToScalar(std::string_view tag, std::initializer_list<ByteSpan> parts) {
  auto wide = FramedHash<64>(tag, std::span<const ByteSpan>(parts.begin(), parts.size()));
  return Scalar::FromWide(wide);
}

GroupElement HashToGroup(ByteSpan input) {
  EnsureSodium();
  for (uint32_t counter = 0;; ++counter) {
    Bytes ctr;
    AppendU32BE(ctr, counter);
    auto wide = FramedHash<64>(tags::kH1, std::initializer_list<ByteSpan>{input, ctr});
    std::array<uint8_t, GroupElement::kBytes> point;
    crypto_core_ristretto255_from_hash(point.data(), wide.data());
    GroupElement e = GroupElement::FromBytes(point);
    if (!e.IsIdentity()) return e;
  }
}

}  // namespace fedpop::crypto
