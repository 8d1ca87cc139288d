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

#include "fedpop/sim/round.h"

#include <map>

#include "fedpop/status.h"

namespace fedpop::sim {

std::string OutcomeName(OutcomeCode code) {
  switch (code) {
    case OutcomeCode::kSuccess: return "success";
    case OutcomeCode::kThresholdFailure: return "threshold-failure";
    case OutcomeCode::kUnmaskable: return "unmaskable";
    case OutcomeCode::kAborted: return "aborted";
  }
  return "unknown";
}

RoundOutcome RunRound(const std::vector<Party*>& parties, Coordinator& coordinator,
                      const DropoutSchedule& schedule, Transport& transport,
                      size_t max_timeouts) {
  std::map<Endpoint, Party*> directory;
  for (Party* p : parties) directory[p->endpoint()] = p;
  directory[coordinator.endpoint()] = &coordinator;
  transport.SetSchedule(&schedule);

  for (auto& [ep, p] : directory) {
    for (Message& m : p->Start()) transport.Send(std::move(m));
  }

  for (size_t timeouts = 0;; ++timeouts) {
    while (auto m = transport.Next()) {
      auto it = directory.find(m->to);
      if (it == directory.end()) {
        throw Error(ErrorCode::kSimulator, "message to unknown party " + EndpointName(m->to));
      }
      for (Message& out : it->second->Handle(*m)) transport.Send(std::move(out));
    }
    if (coordinator.completion()) break;
    if (timeouts >= max_timeouts) {
      throw Error(ErrorCode::kSimulator,
                  "timeout budget exhausted; " + coordinator.DescribeState());
    }
    std::vector<Message> out = coordinator.OnTimeout();
    if (out.empty() && !coordinator.completion()) {
      throw Error(ErrorCode::kSimulator,
                  "deadlock: no runnable party; " + coordinator.DescribeState());
    }
    for (Message& m : out) transport.Send(std::move(m));
  }

  transport.SetSchedule(nullptr);
  RoundOutcome outcome;
  outcome.code = coordinator.completion()->code;
  outcome.detail = coordinator.completion()->detail;
  outcome.transcript = transport.transcript();
  outcome.delivered = transport.delivered();
  outcome.discarded = transport.discarded();
  return outcome;
}

}  // namespace fedpop::sim
