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

#ifndef FEDPOP_SIM_ROUND_H_
#define FEDPOP_SIM_ROUND_H_

#include <optional>
#include <string>
#include <vector>

#include "fedpop/sim/message.h"
#include "fedpop/sim/transport.h"

namespace fedpop::sim {

class Party {
 public:
  virtual ~Party() = default;
  virtual Endpoint endpoint() const = 0;
  // Messages a party emits before receiving anything.
  virtual std::vector<Message> Start() { return {}; }
  virtual std::vector<Message> Handle(const Message& m) = 0;
};

enum class OutcomeCode { kSuccess, kThresholdFailure, kUnmaskable, kAborted };

std::string OutcomeName(OutcomeCode code);

struct Completion {
  OutcomeCode code = OutcomeCode::kSuccess;
  std::string detail;
};

// The party that owns the protocol's timeouts. A timeout fires whenever the
// transport is quiescent, which stands in for the wall-clock deadline.
class Coordinator : public Party {
 public:
  virtual std::vector<Message> OnTimeout() = 0;
  virtual std::optional<Completion> completion() const = 0;
  virtual std::string DescribeState() const = 0;
};

struct RoundOutcome {
  OutcomeCode code = OutcomeCode::kSuccess;
  std::string detail;
  RoundTranscript transcript;
  size_t delivered = 0;
  size_t discarded = 0;
};

// Steps all parties to quiescence. Throws Error(kSimulator) when nothing is
// runnable but the coordinator has not completed.
// The coordinator may also appear in `parties`.
RoundOutcome RunRound(const std::vector<Party*>& parties, Coordinator& coordinator,
                      const DropoutSchedule& schedule, Transport& transport,
                      size_t max_timeouts = 64);

}  // namespace fedpop::sim

#endif  // FEDPOP_SIM_ROUND_H_
