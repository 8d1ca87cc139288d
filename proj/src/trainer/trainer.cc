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

#include "fedpop/trainer/trainer.h"

#include <algorithm>

#include "fedpop/bytes.h"
#include "fedpop/crypto/hash.h"
#include "fedpop/crypto/rng.h"
#include "fedpop/status.h"

namespace fedpop::trainer {

namespace {

crypto::Rng SeededRng(std::string_view label, uint64_t a, uint64_t b) {
  Bytes s;
  AppendU64BE(s, a);
  AppendU64BE(s, b);
  return crypto::Rng(crypto::HashToDigest(label, {s}).bytes);
}

}  // namespace

std::string TrainerKindName(TrainerKind kind) {
  return kind == TrainerKind::kSynthetic ? "synthetic" : "linear";
}

TrainerKind ParseTrainerKind(const std::string& name) {
  if (name == "synthetic") return TrainerKind::kSynthetic;
  if (name == "linear") return TrainerKind::kLinear;
  throw Error(ErrorCode::kParameter, "unknown trainer kind '" + name + "'");
}

Dataset LinearDataset(const TrainerSpec& spec, uint64_t client_seed) {
  crypto::Rng truth = SeededRng("fedpop/trainer/truth", spec.data_seed, 0);
  std::vector<double> w_true(spec.dimension);
  for (double& w : w_true) w = 2.0 * truth.UniformReal() - 1.0;

  crypto::Rng rng = SeededRng("fedpop/trainer/data", spec.data_seed,
                              spec.shared_data ? 0 : client_seed);
  Dataset data;
  data.features.resize(spec.samples, std::vector<double>(spec.dimension));
  data.targets.resize(spec.samples);
  for (uint32_t s = 0; s < spec.samples; ++s) {
    double y = 0;
    for (uint32_t j = 0; j < spec.dimension; ++j) {
      data.features[s][j] = 2.0 * rng.UniformReal() - 1.0;
      y += data.features[s][j] * w_true[j];
    }
    data.targets[s] = y + spec.noise * (2.0 * rng.UniformReal() - 1.0);
  }
  return data;
}

double MeanSquaredError(const Dataset& data, std::span<const double> weights) {
  if (data.targets.empty()) return 0;
  double loss = 0;
  for (size_t s = 0; s < data.targets.size(); ++s) {
    double pred = 0;
    for (size_t j = 0; j < weights.size(); ++j) pred += data.features[s][j] * weights[j];
    loss += (pred - data.targets[s]) * (pred - data.targets[s]);
  }
  return loss / static_cast<double>(data.targets.size());
}

std::vector<double> LocalTrain(const TrainerSpec& spec, uint64_t client_seed,
                               std::span<const double> global_model) {
  if (spec.dimension == 0) throw Error(ErrorCode::kParameter, "trainer dimension must be >= 1");
  if (!global_model.empty() && global_model.size() != spec.dimension) {
    throw Error(ErrorCode::kParameter, "global model dimension mismatch");
  }
  std::vector<double> update(spec.dimension, 0.0);
  if (spec.kind == TrainerKind::kSynthetic) {
    crypto::Rng rng = SeededRng("fedpop/trainer/synthetic", spec.data_seed, client_seed);
    for (double& u : update) u = 2.0 * rng.UniformReal() - 1.0;
  } else {
    const Dataset data = LinearDataset(spec, client_seed);
    std::vector<double> w(spec.dimension, 0.0);
    if (!global_model.empty()) w.assign(global_model.begin(), global_model.end());
    const double scale = 2.0 / static_cast<double>(std::max<uint32_t>(spec.samples, 1));
    for (uint32_t e = 0; e < spec.epochs; ++e) {
      std::vector<double> grad(spec.dimension, 0.0);
      for (uint32_t s = 0; s < spec.samples; ++s) {
        double residual = -data.targets[s];
        for (uint32_t j = 0; j < spec.dimension; ++j) residual += data.features[s][j] * w[j];
        for (uint32_t j = 0; j < spec.dimension; ++j) {
          grad[j] += scale * residual * data.features[s][j];
        }
      }
      for (uint32_t j = 0; j < spec.dimension; ++j) w[j] -= spec.learning_rate * grad[j];
    }
    for (uint32_t j = 0; j < spec.dimension; ++j) {
      update[j] = w[j] - (global_model.empty() ? 0.0 : global_model[j]);
    }
  }
  for (double& u : update) u = std::clamp(u, -spec.clamp, spec.clamp);
  return update;
}

}  // namespace fedpop::trainer
