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

#ifndef FEDPOP_SIM_TRANSPORT_H_
#define FEDPOP_SIM_TRANSPORT_H_

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "fedpop/crypto/rng.h"
#include "fedpop/sim/message.h"

namespace fedpop::sim {

enum class DropStep : uint32_t { kBeforeProtect = 0, kAfterProtect = 1, kBeforeSign = 2 };

std::string DropStepName(DropStep step);
DropStep ParseDropStep(const std::string& name);

// Which clients stop responding in a round, and from which step on.
class DropoutSchedule {
 public:
  DropoutSchedule() = default;

  void Drop(uint32_t client, DropStep step) { drops_[client] = step; }
  std::optional<DropStep> StepFor(uint32_t client) const;
  // True when `client` no longer takes part in `stage`.
  bool Silenced(uint32_t client, Stage stage) const;
  std::set<uint32_t> Dropped() const;
  size_t size() const { return drops_.size(); }
  bool empty() const { return drops_.empty(); }
  const std::map<uint32_t, DropStep>& drops() const { return drops_; }

 private:
  std::map<uint32_t, DropStep> drops_;
};

// floor(rate * n) distinct clients from 1..n, chosen by a seeded shuffle.
DropoutSchedule SampleDropout(double rate, uint32_t n, uint64_t seed,
                              DropStep step = DropStep::kBeforeProtect);

enum class DeliveryOrder { kFifo, kSeededShuffle };

// In-process transport with one inbound queue per party. FIFO delivers the
// globally oldest message next; seeded shuffle picks a random non-empty
// queue, keeping per-party order.
class Transport {
 public:
  explicit Transport(DeliveryOrder order = DeliveryOrder::kFifo, uint64_t seed = 0);

  void SetSchedule(const DropoutSchedule* schedule) { schedule_ = schedule; }
  void Send(Message m);
  // Next deliverable message; discarded messages are skipped and counted.
  // Every returned message is appended to the transcript.
  std::optional<Message> Next();
  bool Empty() const;

  const RoundTranscript& transcript() const { return transcript_; }
  size_t delivered() const { return transcript_.size(); }
  size_t discarded() const { return discarded_; }

 private:
  bool Discard(const Message& m) const;

  DeliveryOrder order_;
  crypto::Rng rng_;
  const DropoutSchedule* schedule_ = nullptr;
  uint64_t next_seq_ = 0;
  std::map<Endpoint, std::deque<std::pair<uint64_t, Message>>> queues_;
  RoundTranscript transcript_;
  size_t discarded_ = 0;
};

}  // namespace fedpop::sim

#endif  // FEDPOP_SIM_TRANSPORT_H_
