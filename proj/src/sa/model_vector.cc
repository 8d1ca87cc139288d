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

#include "fedpop/sa/model_vector.h"

#include <algorithm>
#include <cmath>

#include "fedpop/status.h"

namespace fedpop::sa {

using crypto::Scalar;

namespace {

// log2(q) for the ristretto255 group order.
constexpr double kLog2Order = 252.0;

long double ToLongDouble(const Scalar& s) {
  const auto be = s.ToBytes();
  long double v = 0;
  for (uint8_t b : be) v = v * 256.0L + b;
  return v;
}

}  // namespace

void CheckEncodingParams(const EncodingParams& params, uint64_t max_summands) {
  if (!(params.clamp > 0) || !std::isfinite(params.clamp)) {
    throw Error(ErrorCode::kEncoding, "clamp bound must be positive and finite");
  }
  if (max_summands < 1) max_summands = 1;
  const double bits = params.frac_bits + std::ceil(std::log2(params.clamp)) +
                      std::log2(static_cast<double>(max_summands));
  if (!(bits < kLog2Order - 1)) {
    throw Error(ErrorCode::kEncoding, "encoding would wrap around the field");
  }
  // Per-coordinate rounding goes through a signed 64-bit integer.
  if (params.frac_bits + std::ceil(std::log2(params.clamp)) >= 62) {
    throw Error(ErrorCode::kEncoding, "clamp * 2^frac_bits exceeds 62 bits");
  }
}

Bytes ModelVector::Serialize() const {
  Bytes out;
  out.reserve(4 + coords_.size() * Scalar::kBytes);
  AppendU32BE(out, static_cast<uint32_t>(coords_.size()));
  for (const Scalar& c : coords_) Append(out, c.ToBytes());
  return out;
}

ModelVector ModelVector::Deserialize(ByteSpan bytes, EncodingParams params,
                                     uint64_t summands) {
  const uint32_t d = ReadU32BE(bytes);
  if (bytes.size() != 4 + uint64_t{d} * Scalar::kBytes) {
    throw Error(ErrorCode::kParse, "model vector length does not match dimension");
  }
  std::vector<Scalar> coords;
  coords.reserve(d);
  for (uint32_t j = 0; j < d; ++j) {
    coords.push_back(Scalar::FromBytes(bytes.subspan(4 + j * Scalar::kBytes, Scalar::kBytes)));
  }
  return ModelVector(std::move(coords), params, summands);
}

crypto::Digest ModelVector::Hash() const {
  const Bytes s = Serialize();
  return crypto::HashToDigest(crypto::tags::kModel, {s});
}

ModelVector EncodeFixedPoint(std::span<const double> x, const EncodingParams& params) {
  CheckEncodingParams(params, 1);
  const double scale = std::ldexp(1.0, static_cast<int>(params.frac_bits));
  std::vector<Scalar> coords;
  coords.reserve(x.size());
  for (double v : x) {
    if (std::isnan(v)) throw Error(ErrorCode::kEncoding, "NaN coordinate");
    const double clamped = std::clamp(v, -params.clamp, params.clamp);
    const long long fixed = std::llround(clamped * scale);
    const Scalar mag = Scalar::FromUint64(static_cast<uint64_t>(fixed < 0 ? -fixed : fixed));
    coords.push_back(fixed < 0 ? -mag : mag);
  }
  return ModelVector(std::move(coords), params, 1);
}

std::vector<double> DecodeFixedPoint(const ModelVector& v) {
  const EncodingParams& p = v.params();
  const long double scale = std::ldexp(1.0L, static_cast<int>(p.frac_bits));
  const long double bound =
      static_cast<long double>(v.summands()) * static_cast<long double>(p.clamp) * scale;
  std::vector<double> out;
  out.reserve(v.dimension());
  for (const Scalar& c : v.coords()) {
    const long double pos = ToLongDouble(c);
    const long double neg = ToLongDouble(-c);
    if (pos <= bound) {
      out.push_back(static_cast<double>(pos / scale));
    } else if (neg <= bound) {
      out.push_back(-static_cast<double>(neg / scale));
    } else {
      throw Error(ErrorCode::kDecode, "coordinate outside the representable range");
    }
  }
  return out;
}

}  // namespace fedpop::sa
