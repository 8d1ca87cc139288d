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

#include "fedpop/sim/transport.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "fedpop/status.h"

namespace fedpop::sim {

std::string DropStepName(DropStep step) {
  switch (step) {
    case DropStep::kBeforeProtect: return "before-protect";
    case DropStep::kAfterProtect: return "after-protect";
    case DropStep::kBeforeSign: return "before-sign";
  }
  return "unknown";
}

DropStep ParseDropStep(const std::string& name) {
  if (name == "before-protect") return DropStep::kBeforeProtect;
  if (name == "after-protect") return DropStep::kAfterProtect;
  if (name == "before-sign") return DropStep::kBeforeSign;
  throw Error(ErrorCode::kParameter, "unknown drop step '" + name + "'");
}

std::optional<DropStep> DropoutSchedule::StepFor(uint32_t client) const {
  auto it = drops_.find(client);
  if (it == drops_.end()) return std::nullopt;
  return it->second;
}

bool DropoutSchedule::Silenced(uint32_t client, Stage stage) const {
  auto step = StepFor(client);
  return step && static_cast<uint32_t>(stage) >= static_cast<uint32_t>(*step);
}

std::set<uint32_t> DropoutSchedule::Dropped() const {
  std::set<uint32_t> out;
  for (const auto& [c, s] : drops_) out.insert(c);
  return out;
}

DropoutSchedule SampleDropout(double rate, uint32_t n, uint64_t seed, DropStep step) {
  if (!(rate >= 0.0) || !(rate < 1.0)) {
    throw Error(ErrorCode::kParameter, "dropout rate must lie in [0, 1)");
  }
  // The epsilon keeps products such as 0.3 * 10 from flooring to 2.
  const auto count = static_cast<uint32_t>(std::floor(rate * n + 1e-9));
  std::vector<uint32_t> ids(n);
  std::iota(ids.begin(), ids.end(), 1u);
  crypto::Rng rng = crypto::Rng::FromSeed(seed);
  DropoutSchedule schedule;
  for (uint32_t k = 0; k < count; ++k) {
    const auto pick = k + static_cast<uint32_t>(rng.Uniform(n - k));
    std::swap(ids[k], ids[pick]);
    schedule.Drop(ids[k], step);
  }
  return schedule;
}

Transport::Transport(DeliveryOrder order, uint64_t seed)
    : order_(order), rng_(crypto::Rng::FromSeed(seed)) {}

void Transport::Send(Message m) {
  Endpoint to = m.to;
  queues_[to].emplace_back(next_seq_++, std::move(m));
}

bool Transport::Empty() const {
  return std::all_of(queues_.begin(), queues_.end(),
                     [](const auto& q) { return q.second.empty(); });
}

bool Transport::Discard(const Message& m) const {
  return schedule_ != nullptr && m.to.role == Role::kClient &&
         schedule_->Silenced(m.to.id, m.stage);
}

std::optional<Message> Transport::Next() {
  for (;;) {
    std::vector<std::deque<std::pair<uint64_t, Message>>*> ready;
    for (auto& [ep, q] : queues_) {
      if (!q.empty()) ready.push_back(&q);
    }
    if (ready.empty()) return std::nullopt;
    std::deque<std::pair<uint64_t, Message>>* chosen = nullptr;
    if (order_ == DeliveryOrder::kFifo) {
      chosen = *std::min_element(ready.begin(), ready.end(), [](auto* a, auto* b) {
        return a->front().first < b->front().first;
      });
    } else {
      chosen = ready[rng_.Uniform(ready.size())];
    }
    Message m = std::move(chosen->front().second);
    chosen->pop_front();
    if (Discard(m)) {
      ++discarded_;
      continue;
    }
    transcript_.Append(m);
    return m;
  }
}

}  // namespace fedpop::sim
