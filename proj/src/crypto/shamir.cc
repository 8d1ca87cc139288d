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

#include "fedpop/crypto/shamir.h"

namespace fedpop::crypto {

std::vector<ShamirShare> ShamirShareSecret(const Scalar& secret, size_t t,
                                           size_t n, Rng& rng) {
  return ShareWithCoefficients(secret, t, n, [&rng] { return Scalar::Random(rng); });
}

Scalar ShamirReconstruct(std::span<const ShamirShare> shares, size_t t) {
  return Reconstruct<Scalar>(shares, t);
}

}  // namespace fedpop::crypto
