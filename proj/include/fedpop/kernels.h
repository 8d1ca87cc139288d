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

#ifndef FEDPOP_KERNELS_H_
#define FEDPOP_KERNELS_H_

#include <cstddef>
#include <span>
#include <vector>

#include "fedpop/crypto/hash.h"
#include "fedpop/crypto/scalar.h"

// Coordinate-wise field kernels behind masking and aggregation. Each kernel
// has a serial reference and an OpenMP version parallel over coordinates;
// field addition is exact, so both produce identical results.
namespace fedpop::kernels {

struct SignedSeed {
  crypto::Digest seed;
  bool subtract = false;
};

namespace serial {
// acc += sum over seeds of (+/-) PrgExpand(seed, acc.size()).
void AddMasks(std::span<crypto::Scalar> acc, std::span<const SignedSeed> seeds);
// acc += (+/-) x.
void AddVector(std::span<crypto::Scalar> acc, std::span<const crypto::Scalar> x,
               bool subtract);
// Coordinate-wise sum of equally sized vectors.
std::vector<crypto::Scalar> Sum(std::span<const std::vector<crypto::Scalar>> xs,
                                size_t dimension);
}  // namespace serial

namespace omp {
void AddMasks(std::span<crypto::Scalar> acc, std::span<const SignedSeed> seeds);
void AddVector(std::span<crypto::Scalar> acc, std::span<const crypto::Scalar> x,
               bool subtract);
std::vector<crypto::Scalar> Sum(std::span<const std::vector<crypto::Scalar>> xs,
                                size_t dimension);
}  // namespace omp

// Dispatchers: OpenMP once the work exceeds a small cutoff.
void AddMasks(std::span<crypto::Scalar> acc, std::span<const SignedSeed> seeds);
void AddVector(std::span<crypto::Scalar> acc, std::span<const crypto::Scalar> x,
               bool subtract);
std::vector<crypto::Scalar> Sum(std::span<const std::vector<crypto::Scalar>> xs,
                                size_t dimension);

}  // namespace fedpop::kernels

#endif  // FEDPOP_KERNELS_H_
