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

#include "fedpop/protocol/ideal.h"

#include <string>

#include "fedpop/status.h"

namespace fedpop::protocol {

void IdealFedPoP::Setup(const std::vector<uint32_t>& clients, uint32_t n_drop) {
  std::set<uint32_t> ids(clients.begin(), clients.end());
  if (ids.size() != clients.size()) throw Error(ErrorCode::kParameter, "duplicate client id");
  if (n_drop >= clients.size()) throw Error(ErrorCode::kParameter, "n_drop must be below n");
  clients_ = std::move(ids);
  threshold_ = static_cast<uint32_t>(clients.size()) - n_drop;
  rounds_.clear();
}

bool IdealFedPoP::Generate(uint64_t round, const std::map<uint32_t, Model>& contributions,
                           const std::set<uint32_t>& participants) {
  Round r;
  for (uint32_t i : participants) {
    if (!clients_.contains(i) || !contributions.contains(i)) {
      throw Error(ErrorCode::kParameter, "participant without a contribution");
    }
  }
  r.participants = participants;
  r.success = participants.size() >= threshold_;
  if (r.success) {
    for (const auto& [i, update] : contributions) {
      if (r.model.empty()) r.model.assign(update.size(), 0);
      for (size_t j = 0; j < update.size(); ++j) r.model[j] += update[j];
    }
  } else {
    r.participants.clear();
  }
  rounds_[round] = std::move(r);
  return rounds_[round].success;
}

const IdealFedPoP::Model& IdealFedPoP::Reveal(uint64_t round) {
  auto it = rounds_.find(round);
  if (it == rounds_.end() || !it->second.success) {
    throw Error(ErrorCode::kLookup, "no completed round " + std::to_string(round));
  }
  it->second.revealed = true;
  return it->second.model;
}

int IdealFedPoP::Prove(uint64_t round, uint32_t client, const Model& claimed) const {
  auto it = rounds_.find(round);
  if (it == rounds_.end() || !it->second.revealed) return 0;
  const Round& r = it->second;
  return r.participants.contains(client) && r.model == claimed ? 1 : 0;
}

const std::set<uint32_t>& IdealFedPoP::participants(uint64_t round) const {
  auto it = rounds_.find(round);
  if (it == rounds_.end()) throw Error(ErrorCode::kLookup, "unknown round");
  return it->second.participants;
}

}  // namespace fedpop::protocol
