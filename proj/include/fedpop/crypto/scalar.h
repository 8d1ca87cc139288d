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

#ifndef FEDPOP_CRYPTO_SCALAR_H_
#define FEDPOP_CRYPTO_SCALAR_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>

namespace fedpop::crypto {

class Rng;

// Idempotent libsodium initialization.
void EnsureSodium();

// Element of Z_q where q is the order of the ristretto255 group,
// q = 2^252 + 27742317777372353535851937790883648493. Always reduced.
class Scalar {
 public:
  static constexpr size_t kBytes = 32;

  Scalar() = default;

  static Scalar FromUint64(uint64_t v);
  // Big-endian fixed width encoding; rejects values >= q.
  static Scalar FromBytes(std::span<const uint8_t> be);
  // Reduces an arbitrary 64-byte little-endian string mod q.
  static Scalar FromWide(std::span<const uint8_t, 64> le);
  static Scalar Random(Rng& rng);
  static Scalar RandomNonZero(Rng& rng);

  // Big-endian fixed width encoding.
  std::array<uint8_t, kBytes> ToBytes() const;
  std::string ToHex() const;

  // Native little-endian limbs as consumed by libsodium.
  const uint8_t* le_data() const { return le_.data(); }

  bool IsZero() const;
  // Throws Error(kParameter) on zero.
  Scalar Inverse() const;

  // Low 64 bits of the canonical integer.
  uint64_t Low64() const;
  // True when the canonical integer is < 2^64.
  bool FitsUint64() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar&, const Scalar&) = default;

  static bool IndexFits(uint64_t n);

 private:
  std::array<uint8_t, kBytes> le_{};
};

// q as big-endian bytes.
const std::array<uint8_t, Scalar::kBytes>& GroupOrderBytes();

}  // namespace fedpop::crypto

#endif  // FEDPOP_CRYPTO_SCALAR_H_
