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

#include "fedpop/crypto/rng.h"

#include <sodium.h>

#include <cstring>

#include "fedpop/crypto/hash.h"

namespace fedpop::crypto {

Rng::Rng(const std::array<uint8_t, 32>& seed) : key_(seed) { EnsureSodium(); }

Rng Rng::FromSeed(uint64_t seed) {
  Bytes s;
  AppendU64BE(s, seed);
  return Rng(HashToDigest("fedpop/rng", {s}).bytes);
}

Rng Rng::Os() {
  EnsureSodium();
  Rng r;
  r.os_ = true;
  return r;
}

void Rng::Refill() {
  std::array<uint8_t, crypto_stream_chacha20_ietf_NONCEBYTES> nonce{};
  for (size_t i = 0; i < 8; ++i) nonce[i] = static_cast<uint8_t>(stream_ >> (8 * i));
  buffer_.fill(0);
  crypto_stream_chacha20_ietf_xor_ic(buffer_.data(), buffer_.data(), buffer_.size(),
                                     nonce.data(), block_, key_.data());
  if (++block_ == 0) ++stream_;
  used_ = 0;
}

void Rng::Fill(std::span<uint8_t> out) {
  if (os_) {
    randombytes_buf(out.data(), out.size());
    return;
  }
  size_t pos = 0;
  while (pos < out.size()) {
    if (used_ == buffer_.size()) Refill();
    size_t take = std::min(out.size() - pos, buffer_.size() - used_);
    std::memcpy(out.data() + pos, buffer_.data() + used_, take);
    used_ += take;
    pos += take;
  }
}

uint64_t Rng::NextU64() {
  std::array<uint8_t, 8> b;
  Fill(b);
  uint64_t v = 0;
  for (size_t i = 0; i < 8; ++i) v |= uint64_t{b[i]} << (8 * i);
  return v;
}

uint64_t Rng::Uniform(uint64_t bound) {
  if (bound <= 1) return 0;
  // Rejection sampling removes modulo bias.
  const uint64_t limit = max() - max() % bound;
  for (;;) {
    uint64_t v = NextU64();
    if (v < limit) return v % bound;
  }
}

double Rng::UniformReal() {
  return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
}

Rng Rng::Fork(std::string_view label) {
  std::array<uint8_t, 32> material;
  Fill(material);
  return Rng(HashToDigest("fedpop/rng-fork", {material, AsBytes(label)}).bytes);
}

}  // namespace fedpop::crypto
