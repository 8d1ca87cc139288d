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

#ifndef FEDPOP_CRYPTO_RNG_H_
#define FEDPOP_CRYPTO_RNG_H_

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <string_view>

namespace fedpop::crypto {

// ChaCha20 keystream generator. Seeded instances are fully deterministic,
// which the simulator relies on for reproducible transcripts; the OS
// instance reads the system CSPRNG.
class Rng {
 public:
  using result_type = uint64_t;

  explicit Rng(const std::array<uint8_t, 32>& seed);
  static Rng FromSeed(uint64_t seed);
  static Rng Os();

  void Fill(std::span<uint8_t> out);
  uint64_t NextU64();
  // Uniform in [0, bound).
  uint64_t Uniform(uint64_t bound);
  double UniformReal();  // [0, 1)

  // Independent child stream bound to a label.
  Rng Fork(std::string_view label);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() { return NextU64(); }

 private:
  Rng() = default;
  void Refill();

  bool os_ = false;
  std::array<uint8_t, 32> key_{};
  uint32_t block_ = 0;
  uint64_t stream_ = 0;
  std::array<uint8_t, 64> buffer_{};
  size_t used_ = 64;
};

}  // namespace fedpop::crypto

#endif  // FEDPOP_CRYPTO_RNG_H_
