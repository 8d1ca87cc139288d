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

#ifndef FEDPOP_PROTOCOL_CODEC_H_
#define FEDPOP_PROTOCOL_CODEC_H_

#include <filesystem>
#include <vector>

#include <nlohmann/json.hpp>

#include "fedpop/protocol/types.h"

// JSON persistence for bundles, tokens, models and key material. Binary
// fields are lowercase hex. Decoders throw Error(kParse) on missing or
// malformed fields and Error(kMembership) on invalid group encodings.
namespace fedpop::protocol::codec {

using Json = nlohmann::ordered_json;

Json BundleToJson(const ProofBundle& b);  // {l, mhash, sigma, K}
ProofBundle BundleFromJson(const Json& j);

Json TokenToJson(const GlobalToken& t);  // {l, VK, R}
GlobalToken TokenFromJson(const Json& j);

Json ModelToJson(uint64_t round, const sa::ModelVector& m);
sa::ModelVector ModelFromJson(const Json& j);

Json ClientKeysToJson(const ClientKeyMaterial& k);
ClientKeyMaterial ClientKeysFromJson(const Json& j);

Json ServerKeysToJson(const ServerKeyMaterial& k);
ServerKeyMaterial ServerKeysFromJson(const Json& j);

// Throws Error(kIo) when the file cannot be read or written and
// Error(kParse) on invalid JSON.
Json ReadJsonFile(const std::filesystem::path& path);
void WriteJsonFile(const std::filesystem::path& path, const Json& j);

}  // namespace fedpop::protocol::codec

#endif  // FEDPOP_PROTOCOL_CODEC_H_
