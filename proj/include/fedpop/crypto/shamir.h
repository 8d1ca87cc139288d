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

#ifndef FEDPOP_CRYPTO_SHAMIR_H_
#define FEDPOP_CRYPTO_SHAMIR_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "fedpop/crypto/rng.h"
#include "fedpop/crypto/scalar.h"
#include "fedpop/status.h"

namespace fedpop::crypto {

// Shamir sharing is written against a field concept so the same code runs
// over Z_q and over tiny prime fields in tests. A field type provides
// + - * Inverse() IsZero() FromUint64() and IndexFits(n) (n < modulus).

template <class Field>
struct BasicShare {
  uint32_t index = 0;
  Field value{};
  friend bool operator==(const BasicShare&, const BasicShare&) = default;
};

using ShamirShare = BasicShare<Scalar>;

// Evaluates secret + a_1 x + ... + a_{t-1} x^{t-1} at x = 1..n, drawing the
// a_k from `next_coefficient`.
template <class Field, class CoefficientSource>
std::vector<BasicShare<Field>> ShareWithCoefficients(
    const Field& secret, size_t t, size_t n,
    CoefficientSource&& next_coefficient) {
  if (t < 1 || t > n) {
    throw Error(ErrorCode::kParameter, "shamir threshold must satisfy 1 <= t <= n");
  }
  if (!Field::IndexFits(n)) {
    throw Error(ErrorCode::kParameter, "share count must be below the field modulus");
  }
  std::vector<Field> coefficients;
  coefficients.reserve(t);
  coefficients.push_back(secret);
  for (size_t k = 1; k < t; ++k) coefficients.push_back(next_coefficient());

  std::vector<BasicShare<Field>> shares;
  shares.reserve(n);
  for (uint32_t x = 1; x <= n; ++x) {
    const Field fx = Field::FromUint64(x);
    Field acc = coefficients.back();
    for (size_t k = t - 1; k-- > 0;) acc = acc * fx + coefficients[k];
    shares.push_back({x, acc});
  }
  return shares;
}

// Lagrange basis polynomial for `index` over `indices`, evaluated at 0.
template <class Field>
Field LagrangeAtZero(std::span<const uint32_t> indices, uint32_t index) {
  Field num = Field::FromUint64(1);
  Field den = Field::FromUint64(1);
  const Field xi = Field::FromUint64(index);
  for (uint32_t j : indices) {
    if (j == index) continue;
    const Field xj = Field::FromUint64(j);
    num = num * xj;
    den = den * (xj - xi);
  }
  return num * den.Inverse();
}

// Interpolates at zero using the first t shares. Throws
// Error(kReconstruction) when fewer than t shares are given or an index
// repeats.
template <class Field>
Field Reconstruct(std::span<const BasicShare<Field>> shares, size_t t) {
  if (t < 1 || shares.size() < t) {
    throw Error(ErrorCode::kReconstruction, "insufficient shares");
  }
  std::unordered_set<uint32_t> seen;
  for (const auto& s : shares) {
    if (s.index == 0) {
      throw Error(ErrorCode::kReconstruction, "share index 0 is reserved");
    }
    if (!seen.insert(s.index).second) {
      throw Error(ErrorCode::kReconstruction,
                  "duplicate share index " + std::to_string(s.index));
    }
  }
  std::vector<uint32_t> indices;
  indices.reserve(t);
  for (size_t k = 0; k < t; ++k) indices.push_back(shares[k].index);
  Field secret{};
  for (size_t k = 0; k < t; ++k) {
    secret = secret + shares[k].value * LagrangeAtZero<Field>(indices, indices[k]);
  }
  return secret;
}

// Uniformly random coefficients over Z_q.
std::vector<ShamirShare> ShamirShareSecret(const Scalar& secret, size_t t,
                                           size_t n, Rng& rng);
Scalar ShamirReconstruct(std::span<const ShamirShare> shares, size_t t);

}  // namespace fedpop::crypto

#endif  // FEDPOP_CRYPTO_SHAMIR_H_
