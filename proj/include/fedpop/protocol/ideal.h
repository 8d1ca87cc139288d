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

#ifndef FEDPOP_PROTOCOL_IDEAL_H_
#define FEDPOP_PROTOCOL_IDEAL_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

// Trusted-party reference for the proof-of-participation functionality. It
// sees every input in the clear and answers Prove queries by membership and
// model equality alone. Used as the oracle for conformance tests.
namespace fedpop::protocol {

class IdealFedPoP {
 public:
  using Model = std::vector<int64_t>;  // fixed-point sums, exact

  // Throws Error(kParameter) on duplicate ids or n_drop >= n.
  void Setup(const std::vector<uint32_t>& clients, uint32_t n_drop);

  uint32_t threshold() const { return threshold_; }

  // `contributions`: updates of clients that submitted one. `participants`:
  // clients that stayed until the end of the round. Returns true when the
  // round succeeds, i.e. at least t participants remained.
  bool Generate(uint64_t round, const std::map<uint32_t, Model>& contributions,
                const std::set<uint32_t>& participants);

  // Throws Error(kLookup) for unknown or failed rounds.
  const Model& Reveal(uint64_t round);

  // 1 iff `round` was revealed, `client` participated in it and the claimed
  // model equals the revealed one.
  int Prove(uint64_t round, uint32_t client, const Model& claimed) const;

  const std::set<uint32_t>& participants(uint64_t round) const;

 private:
  struct Round {
    bool success = false;
    Model model;
    std::set<uint32_t> participants;
    bool revealed = false;
  };

  std::set<uint32_t> clients_;
  uint32_t threshold_ = 0;
  std::map<uint64_t, Round> rounds_;
};

}  // namespace fedpop::protocol

#endif  // FEDPOP_PROTOCOL_IDEAL_H_
