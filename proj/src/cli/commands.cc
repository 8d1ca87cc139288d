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

#include "fedpop/cli/commands.h"

#include <fstream>

#include "fedpop/cli/bench.h"
#include "fedpop/protocol/generate.h"
#include "fedpop/protocol/prove.h"
#include "fedpop/status.h"

namespace fedpop::cli {

namespace fs = std::filesystem;
namespace codec = protocol::codec;
using codec::Json;

namespace {

// Maps library errors to exit codes: unreadable or invalid input is a usage
// error, everything else a general failure.
int Report(const std::exception& e, std::ostream& err) {
  err << "error: " << e.what() << '\n';
  if (const auto* fe = dynamic_cast<const Error*>(&e)) {
    switch (fe->code()) {
      case ErrorCode::kParse:
      case ErrorCode::kParameter:
      case ErrorCode::kMembership:
      case ErrorCode::kEncoding:
      case ErrorCode::kIo:
        return kExitUsage;
      default:
        return kExitError;
    }
  }
  if (dynamic_cast<const Json::exception*>(&e) != nullptr) return kExitUsage;
  return kExitError;
}

void WriteText(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << text;
}

}  // namespace

int CmdSetup(const SetupArgs& args, std::ostream& out, std::ostream& err) {
  try {
    if (args.dim < 1) throw Error(ErrorCode::kParameter, "--dim must be at least 1");
    RunConfig config;
    config.n = args.n;
    config.n_drop = args.ndrop;
    config.dim = args.dim;
    config.seed = args.seed;
    const protocol::SetupResult keys = KeysForRound(config, 1);
    const StoreLayout store{args.out};
    fs::create_directories(store.root);
    codec::WriteJsonFile(store.config(), config.ToJson());
    WriteKeys(store, 1, keys);
    out << "store: " << store.root.string() << "\n"
        << "n=" << config.n << " ndrop=" << config.n_drop << " t=" << keys.server.threshold
        << " degree=" << keys.server.sa.graph().degree()
        << " t_sa=" << keys.server.sa.threshold() << "\n"
        << "VK: " << keys.server.group_key.ToHex() << "\n";
    return kExitOk;
  } catch (const std::exception& e) {
    return Report(e, err);
  }
}

int CmdGenerate(const GenerateArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const StoreLayout store{args.store};
    const RunConfig config = RunConfig::FromJson(codec::ReadJsonFile(store.config()));
    const fs::path dir = store.round_dir(args.round);
    if (fs::exists(dir / "outcome.json")) {
      err << "error: round " << args.round << " was already generated in " << dir.string()
          << "\n";
      return kExitError;
    }
    protocol::SetupResult keys = fs::exists(store.keys(args.round) / "server.json")
                                     ? ReadKeys(store, args.round)
                                     : KeysForRound(config, args.round);

    const sim::DropoutSchedule schedule =
        sim::SampleDropout(args.dropout_rate, config.n, DropoutSeed(config, args.round),
                           sim::ParseDropStep(args.drop_step));
    protocol::GenerateOptions options;
    options.round = args.round;
    options.trainer.kind = trainer::ParseTrainerKind(args.trainer);
    options.trainer.dimension = config.dim;
    options.trainer.data_seed = config.seed;
    options.trainer.clamp = config.encoding.clamp;
    options.alt_witness = args.alt_witness;
    options.retain_model = args.retain_model;
    options.seed = crypto::Rng::FromSeed(config.seed)
                       .Fork("generate/" + std::to_string(args.round))
                       .NextU64();
    const protocol::GenerateResult result =
        protocol::GeneratePhase(keys.clients, keys.server, schedule, options);

    // Persist the keys with the protected update recorded.
    WriteKeys(store, args.round, keys);
    fs::create_directories(dir);
    WriteText(dir / "transcript.jsonl", result.outcome.transcript.ToJsonLines());

    Json outcome{{"round", args.round},
                 {"outcome", sim::OutcomeName(result.outcome.code)},
                 {"detail", result.outcome.detail},
                 {"n", config.n},
                 {"ndrop", config.n_drop},
                 {"t", keys.server.threshold},
                 {"dropout_rate", args.dropout_rate},
                 {"drop_step", args.drop_step},
                 {"dropped", schedule.Dropped()},
                 {"online", result.online},
                 {"signers", result.signers},
                 {"bundles", result.bundles.size()},
                 {"alt_witness", args.alt_witness},
                 {"messages_delivered", result.outcome.delivered},
                 {"messages_discarded", result.outcome.discarded},
                 {"timings",
                  {{"client_sa_train_s", result.timings.client_sa_train},
                   {"client_ts_sign_s", result.timings.client_ts_sign},
                   {"server_sa_agg_s", result.timings.server_sa_agg},
                   {"server_ts_agg_s", result.timings.server_ts_agg}}}};
    codec::WriteJsonFile(dir / "outcome.json", outcome);

    out << "round " << args.round << ": " << sim::OutcomeName(result.outcome.code);
    if (!result.outcome.detail.empty()) out << " (" << result.outcome.detail << ")";
    out << "\n";
    if (!result.ok()) return kExitRoundFailed;

    codec::WriteJsonFile(dir / "token.json", codec::TokenToJson(*result.token));
    codec::WriteJsonFile(dir / "model.json", codec::ModelToJson(args.round, *result.model));
    fs::create_directories(dir / "bundles");
    for (const auto& [id, bundle] : result.bundles) {
      Json j = codec::BundleToJson(bundle);
      if (bundle.model) j["model"] = codec::ModelToJson(args.round, *bundle.model);
      codec::WriteJsonFile(store.bundle(args.round, id), j);
    }
    out << "bundles: " << result.bundles.size() << " in " << (dir / "bundles").string() << "\n"
        << "token: " << (dir / "token.json").string() << "\n";
    return kExitOk;
  } catch (const std::exception& e) {
    return Report(e, err);
  }
}

int CmdProve(const ProveArgs& args, std::ostream& out, std::ostream& err) {
  protocol::ProofBundle bundle;
  protocol::ServiceProvider sp;
  uint64_t round = 0;
  try {
    bundle = codec::BundleFromJson(codec::ReadJsonFile(args.bundle));
    const protocol::GlobalToken token = codec::TokenFromJson(codec::ReadJsonFile(args.token));
    const fs::path model_path = args.model.value_or(args.token.parent_path() / "model.json");
    sp.Store(codec::ModelFromJson(codec::ReadJsonFile(model_path)), token);
    round = token.round;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    const protocol::ProveResult result = protocol::ProvePhase(bundle, sp, round);
    if (args.transcript) WriteText(*args.transcript, result.transcript.ToJsonLines());
    out << "decision: " << (result.sp_decision == 1 ? "accept" : "reject") << " ("
        << protocol::VerdictName(result.verdict) << ")\n"
        << "client decision: " << result.client_decision << "\n"
        << "bytes_sp_to_client: " << result.bytes_sp_to_client << "\n"
        << "bytes_client_to_sp: " << result.bytes_client_to_sp << "\n";
    return result.sp_decision == 1 && result.client_decision == 1 ? kExitOk : kExitReject;
  } catch (const std::exception& e) {
    return Report(e, err);
  }
}

int CmdBench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  try {
    if (args.reps < 1) throw Error(ErrorCode::kParameter, "--reps must be at least 1");
    const BenchGrid grid =
        args.grid_file ? BenchGrid::FromJson(codec::ReadJsonFile(*args.grid_file)) : BenchGrid{};
    std::ofstream file;
    if (args.csv) {
      file.open(*args.csv);
      if (!file) throw Error(ErrorCode::kIo, "cannot write " + args.csv->string());
    }
    std::ostream& csv = args.csv ? static_cast<std::ostream&>(file) : out;
    csv << CsvHeader() << '\n';
    for (uint32_t n : grid.n) {
      for (double rate : grid.dropout) {
        std::vector<BenchSample> samples;
        for (uint32_t rep = 0; rep < args.reps; ++rep) {
          samples.push_back(RunBenchSample(n, rate, args.seed + rep, grid));
        }
        const BenchRow row = Summarize(n, rate, samples);
        csv << CsvLine(row) << '\n' << std::flush;
        err << "n=" << n << " dropout=" << rate << ": " << row.ok << "/" << args.reps
            << " rounds succeeded\n";
      }
    }
    return kExitOk;
  } catch (const std::exception& e) {
    return Report(e, err);
  }
}

}  // namespace fedpop::cli
