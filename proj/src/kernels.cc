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

#include "fedpop/kernels.h"

#include <omp.h>

#include "fedpop/crypto/prg.h"
#include "fedpop/status.h"

namespace fedpop::kernels {

using crypto::Scalar;

namespace {

constexpr size_t kParallelCutoff = 4096;

void CheckSizes(std::span<Scalar> acc, std::span<const Scalar> x) {
  if (acc.size() != x.size()) {
    throw Error(ErrorCode::kParameter, "vector dimensions differ");
  }
}

void CheckSizes(std::span<const std::vector<Scalar>> xs, size_t dimension) {
  for (const auto& x : xs) {
    if (x.size() != dimension) {
      throw Error(ErrorCode::kParameter, "vector dimensions differ");
    }
  }
}

}  // namespace

namespace serial {

void AddMasks(std::span<Scalar> acc, std::span<const SignedSeed> seeds) {
  if (acc.empty()) return;
  for (const SignedSeed& s : seeds) {
    std::vector<Scalar> mask = crypto::PrgExpand(s.seed, acc.size());
    for (size_t j = 0; j < acc.size(); ++j) {
      acc[j] = s.subtract ? acc[j] - mask[j] : acc[j] + mask[j];
    }
  }
}

void AddVector(std::span<Scalar> acc, std::span<const Scalar> x, bool subtract) {
  CheckSizes(acc, x);
  for (size_t j = 0; j < acc.size(); ++j) {
    acc[j] = subtract ? acc[j] - x[j] : acc[j] + x[j];
  }
}

std::vector<Scalar> Sum(std::span<const std::vector<Scalar>> xs, size_t dimension) {
  CheckSizes(xs, dimension);
  std::vector<Scalar> out(dimension);
  for (const auto& x : xs) {
    for (size_t j = 0; j < dimension; ++j) out[j] += x[j];
  }
  return out;
}

}  // namespace serial

namespace omp {

void AddMasks(std::span<Scalar> acc, std::span<const SignedSeed> seeds) {
  const auto d = static_cast<std::ptrdiff_t>(acc.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < d; ++j) {
    Scalar v = acc[j];
    for (const SignedSeed& s : seeds) {
      const Scalar m = crypto::PrgCoordinate(s.seed, static_cast<size_t>(j));
      v = s.subtract ? v - m : v + m;
    }
    acc[j] = v;
  }
}

void AddVector(std::span<Scalar> acc, std::span<const Scalar> x, bool subtract) {
  CheckSizes(acc, x);
  const auto d = static_cast<std::ptrdiff_t>(acc.size());
#pragma omp parallel for simd schedule(static)
  for (std::ptrdiff_t j = 0; j < d; ++j) {
    acc[j] = subtract ? acc[j] - x[j] : acc[j] + x[j];
  }
}

std::vector<Scalar> Sum(std::span<const std::vector<Scalar>> xs, size_t dimension) {
  CheckSizes(xs, dimension);
  std::vector<Scalar> out(dimension);
  const auto d = static_cast<std::ptrdiff_t>(dimension);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < d; ++j) {
    Scalar v;
    for (const auto& x : xs) v += x[j];
    out[j] = v;
  }
  return out;
}

}  // namespace omp

void AddMasks(std::span<Scalar> acc, std::span<const SignedSeed> seeds) {
  if (acc.size() * seeds.size() >= kParallelCutoff && omp_get_max_threads() > 1) {
    omp::AddMasks(acc, seeds);
  } else {
    serial::AddMasks(acc, seeds);
  }
}

void AddVector(std::span<Scalar> acc, std::span<const Scalar> x, bool subtract) {
  if (acc.size() >= kParallelCutoff && omp_get_max_threads() > 1) {
    omp::AddVector(acc, x, subtract);
  } else {
    serial::AddVector(acc, x, subtract);
  }
}

std::vector<Scalar> Sum(std::span<const std::vector<Scalar>> xs, size_t dimension) {
  if (dimension * xs.size() >= kParallelCutoff && omp_get_max_threads() > 1) {
    return omp::Sum(xs, dimension);
  }
  return serial::Sum(xs, dimension);
}

}  // namespace fedpop::kernels
