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

#include "fedpop/sim/message.h"

#include <nlohmann/json.hpp>

#include "fedpop/status.h"

namespace fedpop::sim {

std::string RoleName(Role role) {
  switch (role) {
    case Role::kClient: return "client";
    case Role::kFlServer: return "fl_server";
    case Role::kServiceProvider: return "service_provider";
  }
  return "unknown";
}

std::string EndpointName(const Endpoint& e) {
  if (e.role == Role::kClient && e.id != 0) return "client/" + std::to_string(e.id);
  return RoleName(e.role);
}

std::string EnvelopeJson(const Message& m) {
  nlohmann::ordered_json j;
  j["round"] = m.round;
  j["type"] = m.type;
  j["payload-hex"] = ToHex(m.payload);
  return j.dump();
}

Message ParseEnvelope(const std::string& json, Endpoint from, Endpoint to) {
  try {
    const auto j = nlohmann::json::parse(json);
    Message m;
    m.round = j.at("round").get<uint64_t>();
    m.type = j.at("type").get<std::string>();
    m.payload = FromHex(j.at("payload-hex").get<std::string>());
    m.from = from;
    m.to = to;
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("bad envelope: ") + e.what());
  }
}

void RoundTranscript::Append(const Message& m) {
  TranscriptEntry e;
  e.seq = entries_.size();
  e.from = m.from;
  e.to = m.to;
  e.round = m.round;
  e.type = m.type;
  e.payload = m.payload;
  e.envelope_bytes = EnvelopeJson(m).size();
  entries_.push_back(std::move(e));
}

uint64_t RoundTranscript::EnvelopeBytes(Role from, Role to) const {
  uint64_t total = 0;
  for (const auto& e : entries_) {
    if (e.from.role == from && e.to.role == to) total += e.envelope_bytes;
  }
  return total;
}

std::string RoundTranscript::ToJsonLines() const {
  std::string out;
  for (const auto& e : entries_) {
    nlohmann::ordered_json j;
    j["seq"] = e.seq;
    j["from"] = EndpointName(e.from);
    j["to"] = EndpointName(e.to);
    j["round"] = e.round;
    j["type"] = e.type;
    j["payload-hex"] = ToHex(e.payload);
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace fedpop::sim
