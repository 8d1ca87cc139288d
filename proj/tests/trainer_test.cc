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

#include <cmath>
#include <vector>

#include "fedpop/status.h"
#include "fedpop/trainer/trainer.h"
#include "gtest/gtest.h"

namespace fedpop::trainer {
namespace {

TrainerSpec Linear() {
  TrainerSpec s;
  s.kind = TrainerKind::kLinear;
  s.dimension = 4;
  s.samples = 64;
  s.learning_rate = 0.1;
  return s;
}

TEST(TrainerTest, KindNames) {
  EXPECT_EQ(ParseTrainerKind("synthetic"), TrainerKind::kSynthetic);
  EXPECT_EQ(ParseTrainerKind(TrainerKindName(TrainerKind::kLinear)), TrainerKind::kLinear);
  EXPECT_THROW(ParseTrainerKind("cnn"), Error);
}

TEST(TrainerTest, SyntheticIsDeterministicPerClient) {
  TrainerSpec s;
  const auto a = LocalTrain(s, 1);
  EXPECT_EQ(a.size(), 16u);
  EXPECT_EQ(a, LocalTrain(s, 1));
  EXPECT_NE(a, LocalTrain(s, 2));
  for (double x : a) {
    EXPECT_GE(x, -1.0);
    EXPECT_LT(x, 1.0);
  }
}

TEST(TrainerTest, OneEpochMatchesGradientOracle) {
  const TrainerSpec s = Linear();
  const std::vector<double> w0 = {0.1, -0.2, 0.3, 0.0};
  const Dataset d = LinearDataset(s, 7);
  // Oracle: w1 = w0 - lr * (2/N) X^T (X w0 - y).
  std::vector<double> expected(4, 0.0);
  for (size_t k = 0; k < d.targets.size(); ++k) {
    double r = -d.targets[k];
    for (size_t j = 0; j < 4; ++j) r += d.features[k][j] * w0[j];
    for (size_t j = 0; j < 4; ++j) {
      expected[j] -= s.learning_rate * 2.0 * r * d.features[k][j] / d.targets.size();
    }
  }
  const auto update = LocalTrain(s, 7, w0);
  for (size_t j = 0; j < 4; ++j) EXPECT_NEAR(update[j], expected[j], 1e-12);
}

TEST(TrainerTest, ZeroLearningRateGivesZeroUpdate) {
  TrainerSpec s = Linear();
  s.learning_rate = 0;
  for (double u : LocalTrain(s, 3, std::vector<double>{1, 2, 3, 4})) EXPECT_EQ(u, 0.0);
}

TEST(TrainerTest, FederatedAveragingReducesLoss) {
  TrainerSpec s = Linear();
  s.shared_data = true;
  const Dataset d = LinearDataset(s, 0);
  std::vector<double> global(4, 0.0);
  double prev = MeanSquaredError(d, global);
  for (int round = 0; round < 5; ++round) {
    std::vector<double> sum(4, 0.0);
    for (uint64_t c = 1; c <= 5; ++c) {
      const auto u = LocalTrain(s, c, global);
      for (size_t j = 0; j < 4; ++j) sum[j] += u[j];
    }
    for (size_t j = 0; j < 4; ++j) global[j] += sum[j] / 5;
    const double loss = MeanSquaredError(d, global);
    EXPECT_LE(loss, prev);
    prev = loss;
  }
}

TEST(TrainerTest, UpdatesAreClamped) {
  TrainerSpec s = Linear();
  s.learning_rate = 50;
  s.clamp = 0.5;
  for (double u : LocalTrain(s, 1)) EXPECT_LE(std::abs(u), 0.5);
}

TEST(TrainerTest, RejectsBadShapes) {
  TrainerSpec s = Linear();
  EXPECT_THROW(LocalTrain(s, 1, std::vector<double>{1.0}), Error);
  s.dimension = 0;
  EXPECT_THROW(LocalTrain(s, 1), Error);
}

}  // namespace
}  // namespace fedpop::trainer
