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

#include <cstdint>
#include <string>
#include <vector>

#include "fedpop/crypto/rng.h"
#include "fedpop/crypto/shamir.h"
#include "fedpop/crypto/small_field.h"
#include "fedpop/status.h"
#include "gtest/gtest.h"

namespace fedpop::crypto {
namespace {

using F97 = SmallField<97>;
using F13 = SmallField<13>;

template <class Field>
std::vector<BasicShare<Field>> Pick(const std::vector<BasicShare<Field>>& all, uint32_t mask) {
  std::vector<BasicShare<Field>> out;
  for (size_t k = 0; k < all.size(); ++k) {
    if (mask & (1u << k)) out.push_back(all[k]);
  }
  return out;
}

TEST(ShamirSmallFieldTest, FixedCoefficientExample) {
  const auto shares =
      ShareWithCoefficients(F97::FromUint64(5), 2, 3, [] { return F97::FromUint64(3); });
  ASSERT_EQ(shares.size(), 3u);
  EXPECT_EQ(shares[0].index, 1u);
  EXPECT_EQ(shares[0].value.v, 8u);
  EXPECT_EQ(shares[1].value.v, 11u);
  EXPECT_EQ(shares[2].value.v, 14u);
}

TEST(ShamirSmallFieldTest, LagrangeByHand) {
  // f(x) = 5 + 3x: f(0) = 2*f(1) - f(2) = 16 - 11 = 5.
  const std::vector<BasicShare<F97>> shares = {{1, F97::FromUint64(8)}, {2, F97::FromUint64(11)}};
  EXPECT_EQ(Reconstruct<F97>(shares, 2).v, 5u);
}

TEST(ShamirSmallFieldTest, ConstantAndZeroPolynomials) {
  const auto constant =
      ShareWithCoefficients(F97::FromUint64(5), 1, 3, [] { return F97::FromUint64(42); });
  for (const auto& s : constant) EXPECT_EQ(s.value.v, 5u);
  const auto zero =
      ShareWithCoefficients(F97::FromUint64(0), 3, 3, [] { return F97::FromUint64(0); });
  for (uint32_t k = 0; k < 3; ++k) {
    EXPECT_EQ(zero[k].index, k + 1);
    EXPECT_EQ(zero[k].value.v, 0u);
  }
}

TEST(ShamirSmallFieldTest, ParameterGuards) {
  auto coeff = [] { return F13::FromUint64(1); };
  EXPECT_THROW(ShareWithCoefficients(F13::FromUint64(1), 4, 3, coeff), Error);
  EXPECT_THROW(ShareWithCoefficients(F13::FromUint64(1), 0, 3, coeff), Error);
  EXPECT_THROW(ShareWithCoefficients(F13::FromUint64(1), 2, 13, coeff), Error);
  EXPECT_NO_THROW(ShareWithCoefficients(F13::FromUint64(1), 2, 12, coeff));
}

// Every t-1 subset of a sharing over Z_13 is consistent with every candidate
// secret: for each candidate there is a degree t-1 polynomial through the
// subset with that constant term.
TEST(ShamirSmallFieldTest, HidingByBruteForce) {
  for (uint32_t n = 2; n <= 4; ++n) {
    for (uint32_t t = 2; t <= n; ++t) {
      uint64_t next = 7;
      auto coeff = [&next] { return F13::FromUint64(next++); };
      const auto shares = ShareWithCoefficients(F13::FromUint64(4), t, n, coeff);
      for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<uint32_t>(__builtin_popcount(mask)) != t - 1) continue;
        const auto subset = Pick(shares, mask);
        for (uint64_t candidate = 0; candidate < 13; ++candidate) {
          // Enumerate all coefficient vectors (a_1..a_{t-1}) in Z_13.
          bool found = false;
          uint64_t total = 1;
          for (uint32_t k = 1; k < t; ++k) total *= 13;
          for (uint64_t code = 0; code < total && !found; ++code) {
            std::vector<uint64_t> a(t, 0);
            a[0] = candidate;
            for (uint64_t c = code, k = 1; k < t; ++k, c /= 13) a[k] = c % 13;
            bool ok = true;
            for (const auto& s : subset) {
              uint64_t y = 0;
              for (uint32_t k = t; k-- > 0;) y = (y * s.index + a[k]) % 13;
              ok = ok && y == s.value.v;
            }
            found = ok;
          }
          ASSERT_TRUE(found) << "n=" << n << " t=" << t << " candidate=" << candidate;
        }
      }
    }
  }
}

TEST(ShamirTest, EverySubsetReconstructsExhaustively) {
  Rng rng = Rng::FromSeed(3);
  for (uint32_t n = 1; n <= 6; ++n) {
    for (uint32_t t = 1; t <= n; ++t) {
      const Scalar secret = Scalar::Random(rng);
      const auto shares = ShamirShareSecret(secret, t, n, rng);
      for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        const auto subset = Pick(shares, mask);
        if (subset.size() >= t) {
          ASSERT_EQ(ShamirReconstruct(subset, t), secret) << "n=" << n << " t=" << t;
        } else {
          ASSERT_THROW(ShamirReconstruct(subset, t), Error);
        }
      }
    }
  }
}

TEST(ShamirTest, ReconstructionErrors) {
  Rng rng = Rng::FromSeed(4);
  const auto shares = ShamirShareSecret(Scalar::FromUint64(9), 2, 3, rng);
  try {
    ShamirReconstruct(std::vector<ShamirShare>{shares[0]}, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kReconstruction);
    EXPECT_NE(std::string(e.what()).find("insufficient shares"), std::string::npos);
  }
  EXPECT_THROW(ShamirReconstruct(std::vector<ShamirShare>{shares[0], shares[0]}, 2), Error);
  std::vector<ShamirShare> zero_index = {{0, Scalar::FromUint64(1)}, shares[1]};
  EXPECT_THROW(ShamirReconstruct(zero_index, 2), Error);
  EXPECT_THROW(ShamirShareSecret(Scalar::FromUint64(1), 4, 3, rng), Error);
}

}  // namespace
}  // namespace fedpop::crypto
