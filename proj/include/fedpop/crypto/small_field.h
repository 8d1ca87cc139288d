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

#ifndef FEDPOP_CRYPTO_SMALL_FIELD_H_
#define FEDPOP_CRYPTO_SMALL_FIELD_H_

#include <cstdint>

#include "fedpop/status.h"

namespace fedpop::crypto {

// Z_P for a small prime P. Lets the Shamir code be checked by hand and by
// exhaustive enumeration.
template <uint64_t P>
struct SmallField {
  static_assert(P > 1 && P < (uint64_t{1} << 31));
  uint64_t v = 0;

  static constexpr uint64_t kModulus = P;
  static SmallField FromUint64(uint64_t x) { return {x % P}; }
  static bool IndexFits(uint64_t n) { return n < P; }

  bool IsZero() const { return v == 0; }
  SmallField operator+(SmallField o) const { return {(v + o.v) % P}; }
  SmallField operator-(SmallField o) const { return {(v + P - o.v) % P}; }
  SmallField operator*(SmallField o) const { return {(v * o.v) % P}; }
  SmallField Inverse() const {
    if (v == 0) throw Error(ErrorCode::kParameter, "inverse of zero");
    // Fermat: v^(P-2).
    uint64_t result = 1, base = v, e = P - 2;
    while (e) {
      if (e & 1) result = result * base % P;
      base = base * base % P;
      e >>= 1;
    }
    return {result};
  }
  friend bool operator==(SmallField, SmallField) = default;
};

}  // namespace fedpop::crypto

#endif  // FEDPOP_CRYPTO_SMALL_FIELD_H_
