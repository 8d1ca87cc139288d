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

#ifndef FEDPOP_CLI_BENCH_H_
#define FEDPOP_CLI_BENCH_H_

#include <cstdint>
#include <string>
#include <vector>

#include "fedpop/protocol/codec.h"
#include "fedpop/protocol/types.h"
#include "fedpop/trainer/trainer.h"

namespace fedpop::cli {

struct BenchGrid {
  std::vector<uint32_t> n = {10, 25, 50, 100};
  std::vector<double> dropout = {0.1, 0.3, 0.5, 0.7};
  uint32_t dim = 16;
  trainer::TrainerKind trainer = trainer::TrainerKind::kSynthetic;
  bool alt_witness = false;

  // {"n": [...], "dropout": [...], "dim": d, "trainer": name, "alt_witness": b};
  // absent keys keep their defaults.
  static BenchGrid FromJson(const protocol::codec::Json& j);
};

// One Generate + Prove execution. The threshold is set so the round
// tolerates exactly the sampled dropout: n_drop = floor(rate * n).
struct BenchSample {
  bool ok = false;
  protocol::GenerateTimings timings;
  double prove_client = 0;
  double prove_sp = 0;
  uint64_t bytes_sp_to_client = 0;
  uint64_t bytes_client_to_sp = 0;
};

BenchSample RunBenchSample(uint32_t n, double rate, uint64_t seed, const BenchGrid& grid);

struct BenchRow {
  uint32_t n = 0;
  uint32_t ndrop = 0;
  uint32_t t = 0;
  size_t ok = 0;  // successful repetitions
  double sa_train = 0;
  double ts_sign = 0;
  double sa_agg = 0;
  double ts_agg = 0;
  double prove_client = 0;
  double prove_sp = 0;
  uint64_t bytes_sp_to_client = 0;
  uint64_t bytes_client_to_sp = 0;
};

double Median(std::vector<double> values);
double Mean(const std::vector<double>& values);

// Per-column means over the successful samples.
BenchRow Summarize(uint32_t n, double rate, const std::vector<BenchSample>& samples);

uint32_t DropCount(double rate, uint32_t n);

std::string CsvHeader();
// Rows without a successful repetition print NA in every measured column.
std::string CsvLine(const BenchRow& row);

}  // namespace fedpop::cli

#endif  // FEDPOP_CLI_BENCH_H_
