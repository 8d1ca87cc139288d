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

#include "fedpop/protocol/codec.h"

#include <fstream>
#include <sstream>

#include "fedpop/status.h"

namespace fedpop::protocol::codec {

using crypto::GroupElement;
using crypto::Scalar;

namespace {

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::kParse, std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::string HexField(const Json& j, const char* key) {
  const Json& v = Field(j, key);
  if (!v.is_string()) throw Error(ErrorCode::kParse, std::string("field '") + key + "' is not a string");
  return v.get<std::string>();
}

template <class T>
T NumberField(const Json& j, const char* key) {
  const Json& v = Field(j, key);
  if (!v.is_number()) throw Error(ErrorCode::kParse, std::string("field '") + key + "' is not a number");
  return v.get<T>();
}

Bytes BytesField(const Json& j, const char* key, size_t size) {
  Bytes b = FromHex(HexField(j, key));
  if (b.size() != size) {
    throw Error(ErrorCode::kParse, std::string("field '") + key + "' has the wrong length");
  }
  return b;
}

Scalar ScalarField(const Json& j, const char* key) {
  return Scalar::FromBytes(BytesField(j, key, Scalar::kBytes));
}

GroupElement ElementField(const Json& j, const char* key) {
  return GroupElement::FromBytes(BytesField(j, key, GroupElement::kBytes));
}

Json EncodingJson(const sa::EncodingParams& e) {
  return Json{{"frac_bits", e.frac_bits}, {"clamp", e.clamp}};
}

sa::EncodingParams EncodingFromJson(const Json& j) {
  return {NumberField<uint32_t>(j, "frac_bits"), NumberField<double>(j, "clamp")};
}

Json ShareJson(const crypto::ShamirShare& s) {
  return Json{{"index", s.index}, {"value", s.value.ToHex()}};
}

crypto::ShamirShare ShareFromJson(const Json& j) {
  return {NumberField<uint32_t>(j, "index"), ScalarField(j, "value")};
}

Json SharePairsJson(const std::map<uint32_t, sa::SharePair>& shares) {
  Json out = Json::object();
  for (const auto& [j, p] : shares) {
    out[std::to_string(j)] = Json{{"b", ShareJson(p.b)}, {"k", ShareJson(p.k)}};
  }
  return out;
}

std::map<uint32_t, sa::SharePair> SharePairsFromJson(const Json& j) {
  std::map<uint32_t, sa::SharePair> out;
  for (const auto& [key, v] : j.items()) {
    out[static_cast<uint32_t>(std::stoul(key))] = {ShareFromJson(Field(v, "b")),
                                                   ShareFromJson(Field(v, "k"))};
  }
  return out;
}

}  // namespace

Json BundleToJson(const ProofBundle& b) {
  return Json{{"l", b.round},
              {"mhash", b.model_digest.ToHex()},
              {"sigma", ToHex(b.sigma.Serialize())},
              {"K", b.witness.scalar().ToHex()}};
}

ProofBundle BundleFromJson(const Json& j) {
  ProofBundle b;
  b.round = NumberField<uint64_t>(j, "l");
  b.model_digest = crypto::Digest::FromBytes(BytesField(j, "mhash", crypto::Digest::kBytes));
  b.sigma = ts::ThresholdSignature::Deserialize(
      BytesField(j, "sigma", ts::ThresholdSignature::kBytes));
  b.witness = oprf::OprfKey::FromScalar(ScalarField(j, "K"));
  return b;
}

Json TokenToJson(const GlobalToken& t) {
  return Json{{"l", t.round}, {"VK", t.group_key.ToHex()}, {"R", t.prf_value.ToHex()}};
}

GlobalToken TokenFromJson(const Json& j) {
  GlobalToken t;
  t.round = NumberField<uint64_t>(j, "l");
  t.group_key = ElementField(j, "VK");
  t.prf_value = crypto::Digest::FromBytes(BytesField(j, "R", crypto::Digest::kBytes));
  return t;
}

Json ModelToJson(uint64_t round, const sa::ModelVector& m) {
  Json j{{"l", round},
         {"dimension", m.dimension()},
         {"encoding", EncodingJson(m.params())},
         {"summands", m.summands()},
         {"serialized", ToHex(m.Serialize())},
         {"mhash", m.Hash().ToHex()}};
  try {
    j["values"] = sa::DecodeFixedPoint(m);
  } catch (const Error&) {
    // Out-of-range coordinates are still representable in `serialized`.
  }
  return j;
}

sa::ModelVector ModelFromJson(const Json& j) {
  sa::ModelVector m = sa::ModelVector::Deserialize(FromHex(HexField(j, "serialized")),
                                                   EncodingFromJson(Field(j, "encoding")),
                                                   NumberField<uint64_t>(j, "summands"));
  if (j.contains("mhash") && HexField(j, "mhash") != m.Hash().ToHex()) {
    throw Error(ErrorCode::kParse, "model hash does not match its serialization");
  }
  return m;
}

Json ClientKeysToJson(const ClientKeyMaterial& k) {
  Json publics = Json::object();
  for (const auto& [j, p] : k.sa.neighbor_publics) publics[std::to_string(j)] = p.ToHex();
  Json sa{{"index", k.sa.index},
          {"threshold", k.sa.threshold},
          {"dh_secret", k.sa.dh_secret.ToHex()},
          {"dh_public", k.sa.dh_public.ToHex()},
          {"self_seed", k.sa.self_seed.ToHex()},
          {"neighbor_publics", publics},
          {"outgoing_shares", SharePairsJson(k.sa.outgoing_shares)},
          {"incoming_shares", SharePairsJson(k.sa.incoming_shares)}};
  if (k.sa.protected_update) sa["protected_update"] = k.sa.protected_update->ToHex();
  Json signer{{"index", k.signer.index},
              {"signing_share", k.signer.signing_share.ToHex()},
              {"verification_share", k.signer.verification_share.ToHex()},
              {"group_key", k.signer.group_key.ToHex()},
              {"threshold", k.signer.threshold},
              {"signers", k.signer.signers}};
  return Json{{"id", k.id}, {"encoding", EncodingJson(k.encoding)}, {"sa", sa},
              {"signer", signer}};
}

ClientKeyMaterial ClientKeysFromJson(const Json& j) {
  ClientKeyMaterial k;
  k.id = NumberField<uint32_t>(j, "id");
  k.encoding = EncodingFromJson(Field(j, "encoding"));
  const Json& sa = Field(j, "sa");
  k.sa.index = NumberField<uint32_t>(sa, "index");
  k.sa.threshold = NumberField<uint32_t>(sa, "threshold");
  k.sa.dh_secret = ScalarField(sa, "dh_secret");
  k.sa.dh_public = ElementField(sa, "dh_public");
  k.sa.self_seed = ScalarField(sa, "self_seed");
  for (const auto& [key, v] : Field(sa, "neighbor_publics").items()) {
    k.sa.neighbor_publics[static_cast<uint32_t>(std::stoul(key))] =
        GroupElement::FromBytes(FromHex(v.get<std::string>()));
  }
  k.sa.outgoing_shares = SharePairsFromJson(Field(sa, "outgoing_shares"));
  k.sa.incoming_shares = SharePairsFromJson(Field(sa, "incoming_shares"));
  if (sa.contains("protected_update")) {
    k.sa.protected_update =
        crypto::Digest::FromBytes(BytesField(sa, "protected_update", crypto::Digest::kBytes));
  }
  const Json& s = Field(j, "signer");
  k.signer.index = NumberField<uint32_t>(s, "index");
  k.signer.signing_share = ScalarField(s, "signing_share");
  k.signer.verification_share = ElementField(s, "verification_share");
  k.signer.group_key = ElementField(s, "group_key");
  k.signer.threshold = NumberField<uint32_t>(s, "threshold");
  k.signer.signers = NumberField<uint32_t>(s, "signers");
  return k;
}

Json ServerKeysToJson(const ServerKeyMaterial& k) {
  Json publics = Json::array();
  for (const auto& p : k.sa.publics()) publics.push_back(p.ToHex());
  Json shares = Json::array();
  for (const auto& v : k.verification_shares) shares.push_back(v.ToHex());
  return Json{{"n", k.n},
              {"n_drop", k.n_drop},
              {"threshold", k.threshold},
              {"encoding", EncodingJson(k.encoding)},
              {"sa",
               {{"degree", k.sa.graph().degree()},
                {"threshold", k.sa.threshold()},
                {"publics", publics}}},
              {"group_key", k.group_key.ToHex()},
              {"verification_shares", shares}};
}

ServerKeyMaterial ServerKeysFromJson(const Json& j) {
  ServerKeyMaterial k;
  k.n = NumberField<uint32_t>(j, "n");
  k.n_drop = NumberField<uint32_t>(j, "n_drop");
  k.threshold = NumberField<uint32_t>(j, "threshold");
  k.encoding = EncodingFromJson(Field(j, "encoding"));
  const Json& sa = Field(j, "sa");
  const auto degree = NumberField<uint32_t>(sa, "degree");
  sa::NeighborGraph graph = degree + 1 == k.n ? sa::NeighborGraph::Complete(k.n)
                                              : sa::NeighborGraph::Harary(k.n, degree);
  std::vector<GroupElement> publics;
  for (const auto& v : Field(sa, "publics")) {
    publics.push_back(GroupElement::FromBytes(FromHex(v.get<std::string>())));
  }
  if (publics.size() != k.n) throw Error(ErrorCode::kParse, "public key count mismatch");
  k.sa = sa::SAServerState(std::move(graph), NumberField<uint32_t>(sa, "threshold"),
                           std::move(publics));
  k.group_key = ElementField(j, "group_key");
  for (const auto& v : Field(j, "verification_shares")) {
    k.verification_shares.push_back(GroupElement::FromBytes(FromHex(v.get<std::string>())));
  }
  if (k.verification_shares.size() != k.n) {
    throw Error(ErrorCode::kParse, "verification share count mismatch");
  }
  return k;
}

Json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
  }
}

void WriteJsonFile(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw Error(ErrorCode::kIo, "short write to " + path.string());
}

}  // namespace fedpop::protocol::codec
