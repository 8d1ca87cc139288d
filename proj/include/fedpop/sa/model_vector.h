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

#ifndef FEDPOP_SA_MODEL_VECTOR_H_
#define FEDPOP_SA_MODEL_VECTOR_H_

#include <cstdint>
#include <span>
#include <vector>

#include "fedpop/bytes.h"
#include "fedpop/crypto/hash.h"
#include "fedpop/crypto/scalar.h"

namespace fedpop::sa {

// Fixed-point encoding of reals into Z_q: resolution 2^-frac_bits, values
// clamped to [-clamp, clamp].
struct EncodingParams {
  uint32_t frac_bits = 16;
  double clamp = 8.0;
  friend bool operator==(const EncodingParams&, const EncodingParams&) = default;
};

// Throws Error(kEncoding) unless summing `max_summands` encodings cannot
// wrap around the field.
void CheckEncodingParams(const EncodingParams& params, uint64_t max_summands);

class ModelVector {
 public:
  ModelVector() = default;
  ModelVector(std::vector<crypto::Scalar> coords, EncodingParams params,
              uint64_t summands = 1)
      : coords_(std::move(coords)), params_(params), summands_(summands) {}

  size_t dimension() const { return coords_.size(); }
  const std::vector<crypto::Scalar>& coords() const { return coords_; }
  std::vector<crypto::Scalar>& mutable_coords() { return coords_; }
  const EncodingParams& params() const { return params_; }
  // Number of encodings summed into this vector; bounds the decode range.
  uint64_t summands() const { return summands_; }

  // 4-byte big-endian dimension followed by 32-byte big-endian coordinates.
  // This string is what H(M) is computed over.
  Bytes Serialize() const;
  static ModelVector Deserialize(ByteSpan bytes, EncodingParams params,
                                 uint64_t summands = 1);

  // H(M) under tag "fedpop/model".
  crypto::Digest Hash() const;

  friend bool operator==(const ModelVector& a, const ModelVector& b) {
    return a.coords_ == b.coords_;
  }

 private:
  std::vector<crypto::Scalar> coords_;
  EncodingParams params_;
  uint64_t summands_ = 1;
};

ModelVector EncodeFixedPoint(std::span<const double> x, const EncodingParams& params);

// Inverse of EncodeFixedPoint. Throws Error(kDecode) when a coordinate lies
// outside +-(summands * clamp * 2^frac_bits), which signals that masks were
// not removed.
std::vector<double> DecodeFixedPoint(const ModelVector& v);

}  // namespace fedpop::sa

#endif  // FEDPOP_SA_MODEL_VECTOR_H_
