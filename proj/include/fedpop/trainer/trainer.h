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

#ifndef FEDPOP_TRAINER_TRAINER_H_
#define FEDPOP_TRAINER_TRAINER_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

// Local update producers standing in for real model training.
namespace fedpop::trainer {

enum class TrainerKind { kSynthetic, kLinear };

std::string TrainerKindName(TrainerKind kind);
TrainerKind ParseTrainerKind(const std::string& name);

struct TrainerSpec {
  TrainerKind kind = TrainerKind::kSynthetic;
  uint32_t dimension = 16;
  uint64_t data_seed = 1;
  // Linear regression task.
  uint32_t samples = 32;
  double learning_rate = 0.05;
  uint32_t epochs = 1;
  double noise = 0.01;
  // Every client draws the same dataset (client seed ignored for data).
  bool shared_data = false;
  // Updates are clipped to [-clamp, clamp].
  double clamp = 8.0;
};

struct Dataset {
  std::vector<std::vector<double>> features;
  std::vector<double> targets;
};

// Seeded synthetic regression data for one client.
Dataset LinearDataset(const TrainerSpec& spec, uint64_t client_seed);
double MeanSquaredError(const Dataset& data, std::span<const double> weights);

// Synthetic: deterministic vector in [-1, 1]^d. Linear: weight delta after
// `epochs` full-batch gradient steps from `global_model` on the client data.
// An empty global model means all zeros.
std::vector<double> LocalTrain(const TrainerSpec& spec, uint64_t client_seed,
                               std::span<const double> global_model = {});

}  // namespace fedpop::trainer

#endif  // FEDPOP_TRAINER_TRAINER_H_
