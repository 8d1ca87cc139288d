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

#include "fedpop/crypto/prg.h"

#include <sodium.h>

#include <array>

#include "fedpop/status.h"

namespace fedpop::crypto {

namespace {

constexpr std::array<uint8_t, crypto_stream_chacha20_ietf_NONCEBYTES> kPrgNonce = {
    'f', 'e', 'd', 'p', 'o', 'p', '/', 'p', 'r', 'g', 0, 0};

}  // namespace

Scalar PrgCoordinate(const Digest& seed, size_t index) {
  if (index > UINT32_MAX) throw Error(ErrorCode::kParameter, "prg index out of range");
  std::array<uint8_t, 64> block{};
  crypto_stream_chacha20_ietf_xor_ic(block.data(), block.data(), block.size(),
                                     kPrgNonce.data(), static_cast<uint32_t>(index),
                                     seed.bytes.data());
  return Scalar::FromWide(block);
}

std::vector<Scalar> PrgExpand(const Digest& seed, size_t dimension) {
  if (dimension < 1) throw Error(ErrorCode::kParameter, "prg dimension must be >= 1");
  std::vector<Scalar> out;
  out.reserve(dimension);
  for (size_t j = 0; j < dimension; ++j) out.push_back(PrgCoordinate(seed, j));
  return out;
}

Digest SeedFromScalar(const Scalar& s) { return Digest{s.ToBytes()}; }

}  // namespace fedpop::crypto
