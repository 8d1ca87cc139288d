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

#include <nlohmann/json.hpp>
#include <algorithm>
#include <set>
#include <sstream>
#include <vector>

#include "fedpop/sim/message.h"
#include "fedpop/sim/round.h"
#include "fedpop/sim/transport.h"
#include "fedpop/status.h"
#include "gtest/gtest.h"

namespace fedpop::sim {
namespace {

Message Msg(Endpoint from, Endpoint to, std::string type, Stage stage = Stage::kTrain) {
  Message m;
  m.round = 1;
  m.type = std::move(type);
  m.from = from;
  m.to = to;
  m.stage = stage;
  m.payload = {1, 2, 3};
  return m;
}

constexpr Endpoint kServer{Role::kFlServer, 0};
Endpoint Client(uint32_t i) { return {Role::kClient, i}; }

TEST(DropoutTest, SampleCountsAndDeterminism) {
  EXPECT_TRUE(SampleDropout(0.0, 10, 1).empty());
  EXPECT_EQ(SampleDropout(0.1, 10, 1).size(), 1u);
  EXPECT_EQ(SampleDropout(0.3, 10, 1).size(), 3u);
  EXPECT_EQ(SampleDropout(0.7, 100, 1).size(), 70u);
  EXPECT_EQ(SampleDropout(0.25, 10, 1).size(), 2u);
  EXPECT_EQ(SampleDropout(0.5, 25, 3).drops(), SampleDropout(0.5, 25, 3).drops());
  EXPECT_NE(SampleDropout(0.5, 25, 3).Dropped(), SampleDropout(0.5, 25, 4).Dropped());
  for (uint32_t c : SampleDropout(0.5, 25, 3).Dropped()) {
    EXPECT_GE(c, 1u);
    EXPECT_LE(c, 25u);
  }
  EXPECT_THROW(SampleDropout(1.0, 10, 1), Error);
  EXPECT_THROW(SampleDropout(-0.1, 10, 1), Error);
}

TEST(DropoutTest, SampleIsRoughlyUniform) {
  std::vector<int> hits(11, 0);
  for (uint64_t seed = 0; seed < 2000; ++seed) {
    for (uint32_t c : SampleDropout(0.3, 10, seed).Dropped()) ++hits[c];
  }
  for (uint32_t c = 1; c <= 10; ++c) {
    EXPECT_NEAR(hits[c], 600, 120);
  }
}

TEST(DropoutTest, StepNamesAndSilencing) {
  for (DropStep s : {DropStep::kBeforeProtect, DropStep::kAfterProtect, DropStep::kBeforeSign}) {
    EXPECT_EQ(ParseDropStep(DropStepName(s)), s);
  }
  EXPECT_THROW(ParseDropStep("never"), Error);
  DropoutSchedule s;
  s.Drop(2, DropStep::kAfterProtect);
  EXPECT_FALSE(s.Silenced(2, Stage::kTrain));
  EXPECT_TRUE(s.Silenced(2, Stage::kRecovery));
  EXPECT_TRUE(s.Silenced(2, Stage::kDeliver));
  EXPECT_FALSE(s.Silenced(3, Stage::kDeliver));
}

TEST(TransportTest, FifoPreservesSendOrder) {
  Transport t;
  t.Send(Msg(Client(1), kServer, "a"));
  t.Send(Msg(kServer, Client(2), "b"));
  t.Send(Msg(Client(3), kServer, "c"));
  std::string order;
  while (auto m = t.Next()) order += m->type;
  EXPECT_EQ(order, "abc");
  EXPECT_TRUE(t.Empty());
  EXPECT_EQ(t.transcript().entries()[2].seq, 2u);
}

TEST(TransportTest, ShuffleIsSeededAndKeepsPerReceiverOrder) {
  auto run = [](uint64_t seed) {
    Transport t(DeliveryOrder::kSeededShuffle, seed);
    for (uint32_t i = 1; i <= 6; ++i) {
      t.Send(Msg(kServer, Client(i), "x" + std::to_string(i)));
      t.Send(Msg(kServer, Client(i), "y" + std::to_string(i)));
    }
    std::vector<std::string> out;
    while (auto m = t.Next()) out.push_back(m->type);
    return out;
  };
  const auto a = run(5);
  EXPECT_EQ(a, run(5));
  std::set<std::vector<std::string>> orders;
  for (uint64_t seed = 0; seed < 10; ++seed) orders.insert(run(seed));
  EXPECT_GT(orders.size(), 1u);
  for (uint32_t i = 1; i <= 6; ++i) {
    auto x = std::find(a.begin(), a.end(), "x" + std::to_string(i));
    auto y = std::find(a.begin(), a.end(), "y" + std::to_string(i));
    EXPECT_LT(x, y);
  }
}

TEST(TransportTest, DropsMessagesToSilencedClients) {
  DropoutSchedule s;
  s.Drop(1, DropStep::kBeforeSign);
  Transport t;
  t.SetSchedule(&s);
  t.Send(Msg(kServer, Client(1), "train", Stage::kTrain));
  t.Send(Msg(kServer, Client(1), "sign", Stage::kSign));
  t.Send(Msg(Client(1), kServer, "late", Stage::kSign));
  std::vector<std::string> seen;
  while (auto m = t.Next()) seen.push_back(m->type);
  EXPECT_EQ(seen, (std::vector<std::string>{"train", "late"}));
  EXPECT_EQ(t.discarded(), 1u);
  EXPECT_EQ(t.delivered(), 2u);
}

TEST(EnvelopeTest, RoundTripAndErrors) {
  const Message m = Msg(Client(1), kServer, "masked_update");
  const std::string json = EnvelopeJson(m);
  EXPECT_EQ(json, R"({"round":1,"type":"masked_update","payload-hex":"010203"})");
  const Message back = ParseEnvelope(json, m.from, m.to);
  EXPECT_EQ(back.type, m.type);
  EXPECT_EQ(back.payload, m.payload);
  EXPECT_EQ(back.round, 1u);
  try {
    ParseEnvelope(R"({"round":1,"type":"x"})", m.from, m.to);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
  }
  EXPECT_THROW(ParseEnvelope("{", m.from, m.to), Error);
}

TEST(TranscriptTest, JsonLinesAndByteAccounting) {
  RoundTranscript tr;
  tr.Append(Msg(Client(4), kServer, "a"));
  tr.Append(Msg(kServer, Client(4), "b"));
  tr.Append(Msg(Client(5), kServer, "c"));
  std::istringstream in(tr.ToJsonLines());
  std::string line;
  uint64_t seq = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j.at("seq").get<uint64_t>(), seq++);
    EXPECT_EQ(j.at("round").get<uint64_t>(), 1u);
    EXPECT_TRUE(j.contains("from"));
    EXPECT_TRUE(j.contains("to"));
    EXPECT_EQ(j.at("payload-hex"), "010203");
  }
  EXPECT_EQ(seq, 3u);
  EXPECT_EQ(tr.entries()[0].envelope_bytes, EnvelopeJson(Msg(Client(4), kServer, "a")).size());
  EXPECT_EQ(tr.EnvelopeBytes(Role::kClient, Role::kFlServer),
            tr.entries()[0].envelope_bytes + tr.entries()[2].envelope_bytes);
  EXPECT_EQ(EndpointName(Client(4)), "client/4");
}

// Coordinator that waits for n pings and never finishes on timeout.
class Collector : public Coordinator {
 public:
  Collector(uint32_t n, bool finish_on_timeout) : n_(n), finish_(finish_on_timeout) {}
  Endpoint endpoint() const override { return kServer; }
  std::vector<Message> Start() override {
    std::vector<Message> out;
    for (uint32_t i = 1; i <= n_; ++i) out.push_back(Msg(kServer, Client(i), "ping"));
    return out;
  }
  std::vector<Message> Handle(const Message&) override {
    if (++got_ == n_) done_ = Completion{};
    return {};
  }
  std::vector<Message> OnTimeout() override {
    if (finish_) done_ = Completion{OutcomeCode::kThresholdFailure, "short"};
    return {};
  }
  std::optional<Completion> completion() const override { return done_; }
  std::string DescribeState() const override { return std::to_string(got_) + " pongs"; }
  uint32_t got() const { return got_; }

 private:
  uint32_t n_;
  bool finish_;
  uint32_t got_ = 0;
  std::optional<Completion> done_;
};

class Echo : public Party {
 public:
  explicit Echo(uint32_t id) : id_(id) {}
  Endpoint endpoint() const override { return Client(id_); }
  std::vector<Message> Handle(const Message&) override {
    return {Msg(Client(id_), kServer, "pong")};
  }

 private:
  uint32_t id_;
};

TEST(RunRoundTest, CompletesAndTimesOut) {
  std::vector<Echo> echoes = {Echo(1), Echo(2), Echo(3)};
  std::vector<Party*> parties;
  for (auto& e : echoes) parties.push_back(&e);

  Collector all(3, false);
  Transport t1;
  const RoundOutcome ok = RunRound(parties, all, {}, t1);
  EXPECT_EQ(ok.code, OutcomeCode::kSuccess);
  EXPECT_EQ(ok.delivered, 6u);

  DropoutSchedule s;
  s.Drop(2, DropStep::kBeforeProtect);
  Collector partial(3, true);
  Transport t2;
  const RoundOutcome short_round = RunRound(parties, partial, s, t2);
  EXPECT_EQ(short_round.code, OutcomeCode::kThresholdFailure);
  EXPECT_EQ(partial.got(), 2u);
  EXPECT_EQ(short_round.discarded, 1u);

  Collector stuck(3, false);
  Transport t3;
  try {
    RunRound(parties, stuck, s, t3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSimulator);
  }
}

}  // namespace
}  // namespace fedpop::sim
