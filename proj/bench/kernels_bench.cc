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

#include <vector>

#include "benchmark/benchmark.h"
#include "fedpop/crypto/rng.h"
#include "fedpop/crypto/scalar.h"
#include "fedpop/kernels.h"

namespace fedpop::kernels {
namespace {

using crypto::Scalar;

std::vector<SignedSeed> Seeds(size_t count) {
  crypto::Rng rng = crypto::Rng::FromSeed(1);
  std::vector<SignedSeed> out(count);
  for (size_t k = 0; k < count; ++k) {
    rng.Fill(out[k].seed.bytes);
    out[k].subtract = k % 2 == 1;
  }
  return out;
}

std::vector<std::vector<Scalar>> Vectors(size_t count, size_t d) {
  crypto::Rng rng = crypto::Rng::FromSeed(2);
  std::vector<std::vector<Scalar>> out(count);
  for (auto& v : out) {
    for (size_t j = 0; j < d; ++j) v.push_back(Scalar::Random(rng));
  }
  return out;
}

template <void (*Kernel)(std::span<Scalar>, std::span<const SignedSeed>)>
void BM_AddMasks(benchmark::State& state) {
  const auto seeds = Seeds(static_cast<size_t>(state.range(0)));
  std::vector<Scalar> acc(static_cast<size_t>(state.range(1)));
  for (auto _ : state) {
    Kernel(acc, seeds);
    benchmark::DoNotOptimize(acc.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(1));
}

template <std::vector<Scalar> (*Kernel)(std::span<const std::vector<Scalar>>, size_t)>
void BM_Sum(benchmark::State& state) {
  const size_t d = static_cast<size_t>(state.range(1));
  const auto xs = Vectors(static_cast<size_t>(state.range(0)), d);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(xs, d));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(1));
}

BENCHMARK(BM_AddMasks<serial::AddMasks>)->Args({10, 16})->Args({100, 16})->Args({100, 1024});
BENCHMARK(BM_AddMasks<omp::AddMasks>)->Args({10, 16})->Args({100, 16})->Args({100, 1024});
BENCHMARK(BM_Sum<serial::Sum>)->Args({100, 16})->Args({100, 4096});
BENCHMARK(BM_Sum<omp::Sum>)->Args({100, 16})->Args({100, 4096});

}  // namespace
}  // namespace fedpop::kernels

BENCHMARK_MAIN();
