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

#ifndef FEDPOP_PROTOCOL_ALT_WITNESS_H_
#define FEDPOP_PROTOCOL_ALT_WITNESS_H_

#include <cstdint>
#include <map>
#include <span>

#include "fedpop/crypto/group.h"
#include "fedpop/crypto/scalar.h"
#include "fedpop/oprf/oprf.h"
#include "fedpop/ts/threshold_signature.h"

// Group witness derived from the participants instead of sampled by the
// server: each participant contributes K_i = (g^{sk_i})^{r_i}; the server
// hashes the product of all contributions into a nonzero scalar.
namespace fedpop::protocol {

crypto::GroupElement WitnessContribution(const ts::SignerKeys& keys, const crypto::Scalar& r);

// Product (group sum) of the contributions of `participants`, i.e. P.
// Throws Error(kWitness) when a participant has not contributed.
crypto::GroupElement WitnessProduct(const std::map<uint32_t, crypto::GroupElement>& contributions,
                                    std::span<const uint32_t> participants);

// K = H("fedpop/altK", P) reduced into Z_q \ {0}.
oprf::OprfKey WitnessFromProduct(const crypto::GroupElement& product);

oprf::OprfKey AltGroupWitness(const std::map<uint32_t, crypto::GroupElement>& contributions,
                              std::span<const uint32_t> participants);

}  // namespace fedpop::protocol

#endif  // FEDPOP_PROTOCOL_ALT_WITNESS_H_
