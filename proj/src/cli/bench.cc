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

#include "fedpop/cli/bench.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "fedpop/protocol/generate.h"
#include "fedpop/protocol/prove.h"
#include "fedpop/protocol/setup.h"
#include "fedpop/status.h"

namespace fedpop::cli {

using protocol::codec::Json;

BenchGrid BenchGrid::FromJson(const Json& j) {
  BenchGrid g;
  try {
    if (j.contains("n")) g.n = j.at("n").get<std::vector<uint32_t>>();
    if (j.contains("dropout")) g.dropout = j.at("dropout").get<std::vector<double>>();
    g.dim = j.value("dim", g.dim);
    if (j.contains("trainer")) {
      g.trainer = trainer::ParseTrainerKind(j.at("trainer").get<std::string>());
    }
    g.alt_witness = j.value("alt_witness", g.alt_witness);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("grid file: ") + e.what());
  }
  if (g.n.empty() || g.dropout.empty()) throw Error(ErrorCode::kParse, "empty grid");
  return g;
}

uint32_t DropCount(double rate, uint32_t n) {
  return static_cast<uint32_t>(std::floor(rate * n + 1e-9));
}

BenchSample RunBenchSample(uint32_t n, double rate, uint64_t seed, const BenchGrid& grid) {
  crypto::Rng rng = crypto::Rng::FromSeed(seed);
  protocol::SetupParams params;
  params.n = n;
  params.n_drop = DropCount(rate, n);
  protocol::SetupResult keys = protocol::SetupPhase(params, rng);

  protocol::GenerateOptions options;
  options.round = 1;
  options.seed = rng.NextU64();
  options.trainer.kind = grid.trainer;
  options.trainer.dimension = grid.dim;
  options.trainer.data_seed = seed;
  options.alt_witness = grid.alt_witness;
  const sim::DropoutSchedule schedule = sim::SampleDropout(rate, n, rng.NextU64());
  protocol::GenerateResult gen =
      protocol::GeneratePhase(keys.clients, keys.server, schedule, options);

  BenchSample sample;
  sample.timings = gen.timings;
  if (!gen.ok()) return sample;
  protocol::FlServerArchive archive;
  archive.Record(gen);
  protocol::ServiceProvider sp;
  protocol::Reveal(archive, 1, sp);
  protocol::ProveOptions prove_options;
  prove_options.sp_seed = rng.NextU64();
  const protocol::ProveResult proof =
      protocol::ProvePhase(gen.bundles.begin()->second, sp, 1, prove_options);
  sample.ok = proof.sp_decision == 1 && proof.client_decision == 1;
  sample.prove_client = proof.client_seconds;
  sample.prove_sp = proof.sp_seconds;
  sample.bytes_sp_to_client = proof.bytes_sp_to_client;
  sample.bytes_client_to_sp = proof.bytes_client_to_sp;
  return sample;
}

double Median(std::vector<double> values) {
  if (values.empty()) throw Error(ErrorCode::kParameter, "median of nothing");
  std::sort(values.begin(), values.end());
  const size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

double Mean(const std::vector<double>& values) {
  if (values.empty()) throw Error(ErrorCode::kParameter, "mean of nothing");
  return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

BenchRow Summarize(uint32_t n, double rate, const std::vector<BenchSample>& samples) {
  BenchRow row;
  row.n = n;
  row.ndrop = DropCount(rate, n);
  row.t = n - row.ndrop;
  std::vector<double> cols[8];
  for (const BenchSample& s : samples) {
    if (!s.ok) continue;
    ++row.ok;
    cols[0].push_back(s.timings.client_sa_train);
    cols[1].push_back(s.timings.client_ts_sign);
    cols[2].push_back(s.timings.server_sa_agg);
    cols[3].push_back(s.timings.server_ts_agg);
    cols[4].push_back(s.prove_client);
    cols[5].push_back(s.prove_sp);
    cols[6].push_back(static_cast<double>(s.bytes_sp_to_client));
    cols[7].push_back(static_cast<double>(s.bytes_client_to_sp));
  }
  if (row.ok == 0) return row;
  row.sa_train = Mean(cols[0]);
  row.ts_sign = Mean(cols[1]);
  row.sa_agg = Mean(cols[2]);
  row.ts_agg = Mean(cols[3]);
  row.prove_client = Mean(cols[4]);
  row.prove_sp = Mean(cols[5]);
  row.bytes_sp_to_client = static_cast<uint64_t>(std::llround(Mean(cols[6])));
  row.bytes_client_to_sp = static_cast<uint64_t>(std::llround(Mean(cols[7])));
  return row;
}

std::string CsvHeader() {
  return "n,ndrop,t,sa_train_s,ts_sign_s,sa_agg_s,ts_agg_s,prove_client_s,prove_sp_s,"
         "bytes_sp_to_client,bytes_client_to_sp";
}

std::string CsvLine(const BenchRow& row) {
  std::ostringstream os;
  os << row.n << ',' << row.ndrop << ',' << row.t;
  if (row.ok == 0) {
    for (int k = 0; k < 8; ++k) os << ",NA";
    return os.str();
  }
  os.precision(6);
  os << std::fixed << ',' << row.sa_train << ',' << row.ts_sign << ',' << row.sa_agg << ','
     << row.ts_agg << ',' << row.prove_client << ',' << row.prove_sp << ','
     << row.bytes_sp_to_client << ',' << row.bytes_client_to_sp;
  return os.str();
}

}  // namespace fedpop::cli
