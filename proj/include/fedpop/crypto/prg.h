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

#ifndef FEDPOP_CRYPTO_PRG_H_
#define FEDPOP_CRYPTO_PRG_H_

#include <cstddef>
#include <span>
#include <vector>

#include "fedpop/crypto/hash.h"
#include "fedpop/crypto/scalar.h"

namespace fedpop::crypto {

// Coordinate j is the reduction mod q of ChaCha20 block j under key `seed`,
// so streams of different lengths share their common prefix and every
// coordinate can be produced independently.
std::vector<Scalar> PrgExpand(const Digest& seed, size_t dimension);

// Single coordinate of PrgExpand(seed, ...).
Scalar PrgCoordinate(const Digest& seed, size_t index);

// Seed form of a scalar (its canonical encoding).
Digest SeedFromScalar(const Scalar& s);

}  // namespace fedpop::crypto

#endif  // FEDPOP_CRYPTO_PRG_H_
