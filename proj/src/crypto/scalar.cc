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

#include "fedpop/crypto/scalar.h"

#include <sodium.h>

#include <algorithm>
#include <cstring>

#include "fedpop/bytes.h"
#include "fedpop/crypto/rng.h"
#include "fedpop/status.h"

namespace fedpop::crypto {

namespace {

constexpr std::array<uint8_t, Scalar::kBytes> kOrderBE = {
    0x10, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00,
    0x00, 0x00, 0x00, 0x00, 0x00, 0x14, 0xde, 0xf9, 0xde, 0xa2, 0xf7,
    0x9c, 0xd6, 0x58, 0x12, 0x63, 0x1a, 0x5c, 0xf5, 0xd3, 0xed};

struct SodiumInit {
  SodiumInit() {
    if (sodium_init() < 0) throw Error(ErrorCode::kState, "libsodium init failed");
  }
};

}  // namespace

void EnsureSodium() { static SodiumInit init; }

const std::array<uint8_t, Scalar::kBytes>& GroupOrderBytes() { return kOrderBE; }

Scalar Scalar::FromUint64(uint64_t v) {
  Scalar s;
  for (size_t i = 0; i < 8; ++i) s.le_[i] = static_cast<uint8_t>(v >> (8 * i));
  return s;
}

Scalar Scalar::FromBytes(std::span<const uint8_t> be) {
  if (be.size() != kBytes) {
    throw Error(ErrorCode::kParse, "scalar encoding must be 32 bytes");
  }
  if (!std::lexicographical_compare(be.begin(), be.end(), kOrderBE.begin(),
                                    kOrderBE.end())) {
    throw Error(ErrorCode::kParse, "scalar encoding is not reduced");
  }
  Scalar s;
  std::reverse_copy(be.begin(), be.end(), s.le_.begin());
  return s;
}

Scalar Scalar::FromWide(std::span<const uint8_t, 64> le) {
  EnsureSodium();
  Scalar s;
  uint8_t buf[64];
  std::memcpy(buf, le.data(), 64);
  crypto_core_ristretto255_scalar_reduce(s.le_.data(), buf);
  return s;
}

Scalar Scalar::Random(Rng& rng) {
  std::array<uint8_t, 64> wide;
  rng.Fill(wide);
  return FromWide(wide);
}

Scalar Scalar::RandomNonZero(Rng& rng) {
  for (;;) {
    Scalar s = Random(rng);
    if (!s.IsZero()) return s;
  }
}

std::array<uint8_t, Scalar::kBytes> Scalar::ToBytes() const {
  std::array<uint8_t, kBytes> be;
  std::reverse_copy(le_.begin(), le_.end(), be.begin());
  return be;
}

std::string Scalar::ToHex() const { return fedpop::ToHex(ToBytes()); }

bool Scalar::IsZero() const {
  return std::all_of(le_.begin(), le_.end(), [](uint8_t b) { return b == 0; });
}

Scalar Scalar::Inverse() const {
  EnsureSodium();
  Scalar r;
  if (crypto_core_ristretto255_scalar_invert(r.le_.data(), le_.data()) != 0 ||
      IsZero()) {
    throw Error(ErrorCode::kParameter, "inverse of zero scalar");
  }
  return r;
}

uint64_t Scalar::Low64() const {
  uint64_t v = 0;
  for (size_t i = 0; i < 8; ++i) v |= uint64_t{le_[i]} << (8 * i);
  return v;
}

bool Scalar::FitsUint64() const {
  return std::all_of(le_.begin() + 8, le_.end(), [](uint8_t b) { return b == 0; });
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r;
  crypto_core_ristretto255_scalar_add(r.le_.data(), le_.data(), o.le_.data());
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r;
  crypto_core_ristretto255_scalar_sub(r.le_.data(), le_.data(), o.le_.data());
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r;
  crypto_core_ristretto255_scalar_mul(r.le_.data(), le_.data(), o.le_.data());
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r;
  crypto_core_ristretto255_scalar_negate(r.le_.data(), le_.data());
  return r;
}

bool Scalar::IndexFits(uint64_t) {
  // Any 64-bit count is far below q.
  return true;
}

}  // namespace fedpop::crypto
