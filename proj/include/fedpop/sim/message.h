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

#ifndef FEDPOP_SIM_MESSAGE_H_
#define FEDPOP_SIM_MESSAGE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "fedpop/bytes.h"

namespace fedpop::sim {

enum class Role { kClient, kFlServer, kServiceProvider };

std::string RoleName(Role role);

// Client ids are local bookkeeping of the simulator. Parties that must stay
// anonymous (the Prove client) use id 0.
struct Endpoint {
  Role role = Role::kClient;
  uint32_t id = 0;
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

std::string EndpointName(const Endpoint& e);

// Protocol step a message belongs to; a client that drops at step S never
// receives messages of step >= S.
enum class Stage : uint32_t { kTrain = 0, kRecovery = 1, kSign = 2, kDeliver = 3 };

struct Message {
  uint64_t round = 0;
  std::string type;
  Endpoint from;
  Endpoint to;
  Stage stage = Stage::kTrain;
  Bytes payload;
};

// Wire envelope {"round", "type", "payload-hex"} as compact JSON.
std::string EnvelopeJson(const Message& m);
Message ParseEnvelope(const std::string& json, Endpoint from, Endpoint to);

struct TranscriptEntry {
  uint64_t seq = 0;
  Endpoint from;
  Endpoint to;
  uint64_t round = 0;
  std::string type;
  Bytes payload;
  size_t envelope_bytes = 0;
};

// Append-only log of delivered messages.
class RoundTranscript {
 public:
  void Append(const Message& m);
  const std::vector<TranscriptEntry>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }

  uint64_t EnvelopeBytes(Role from, Role to) const;
  // One JSON object per line.
  std::string ToJsonLines() const;

 private:
  std::vector<TranscriptEntry> entries_;
};

}  // namespace fedpop::sim

#endif  // FEDPOP_SIM_MESSAGE_H_
