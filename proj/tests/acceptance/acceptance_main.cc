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

// Acceptance harness: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fedpop/cli/bench.h"
#include "fedpop/crypto/group.h"
#include "fedpop/crypto/hash.h"
#include "fedpop/crypto/rng.h"
#include "fedpop/oprf/oprf.h"
#include "fedpop/protocol/alt_witness.h"
#include "fedpop/protocol/generate.h"
#include "fedpop/protocol/ideal.h"
#include "fedpop/protocol/prove.h"
#include "fedpop/protocol/setup.h"
#include "fedpop/sa/model_vector.h"
#include "fedpop/status.h"
#include "fedpop/ts/threshold_signature.h"

namespace fedpop {
namespace {

using protocol::GeneratePhase;
using protocol::GenerateOptions;
using protocol::GenerateResult;
using protocol::IdealFedPoP;
using protocol::ProofBundle;
using protocol::ProvePhase;
using protocol::ServiceProvider;
using protocol::SetupResult;

using Clock = std::chrono::steady_clock;

double Since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool pass = true;
  std::string detail;
  void Fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

void Report(int id, const Verdict& v, std::vector<bool>& all) {
  std::printf("criterion %d: %s %s\n", id, v.pass ? "PASS" : "FAIL", v.detail.c_str());
  std::fflush(stdout);
  all.push_back(v.pass);
}

SetupResult Keys(uint32_t n, uint32_t n_drop, uint64_t seed) {
  crypto::Rng rng = crypto::Rng::FromSeed(seed);
  protocol::SetupParams p;
  p.n = n;
  p.n_drop = n_drop;
  return protocol::SetupPhase(p, rng);
}

// Fixed-point oracle: clamp to +-8, scale by 2^16, round to nearest.
IdealFedPoP::Model ToFixed(const std::vector<double>& x) {
  IdealFedPoP::Model out;
  for (double v : x) out.push_back(std::llround(std::clamp(v, -8.0, 8.0) * 65536.0));
  return out;
}

IdealFedPoP::Model DecodedToFixed(const sa::ModelVector& m) {
  IdealFedPoP::Model out;
  for (double v : sa::DecodeFixedPoint(m)) out.push_back(std::llround(v * 65536.0));
  return out;
}

int Decide(const ProofBundle& b, const ServiceProvider& sp, uint64_t round) {
  if (!sp.Contains(round)) return 0;
  const protocol::ProveResult r = ProvePhase(b, sp, round);
  return r.sp_decision;
}

// ---------------------------------------------------------------- 1 and 8

struct ScenarioRound {
  uint64_t round = 0;
  GenerateResult result;
  sa::ModelVector model;  // revealed model, successful rounds only
};

Verdict Conformance(bool alt_witness, size_t& scenarios, double& seconds) {
  Verdict v;
  const auto start = Clock::now();
  scenarios = 0;
  const std::vector<sim::DropStep> steps = {sim::DropStep::kBeforeProtect,
                                            sim::DropStep::kAfterProtect,
                                            sim::DropStep::kBeforeSign};
  for (uint32_t n : {4u, 6u, 10u}) {
    const uint32_t n_drop = n / 3;
    const uint32_t t = n - n_drop;
    std::vector<uint32_t> ids(n);
    for (uint32_t i = 0; i < n; ++i) ids[i] = i + 1;
    IdealFedPoP ideal;
    ideal.Setup(ids, n_drop);
    ServiceProvider sp;
    std::vector<ScenarioRound> history;
    uint64_t round = 0;

    for (uint32_t d = 0; d <= n - t + 1; ++d) {
      for (sim::DropStep step : steps) {
        if (d == 0 && step != sim::DropStep::kBeforeProtect) continue;
        ++round;
        ++scenarios;
        const std::string tag = "n=" + std::to_string(n) + " d=" + std::to_string(d) +
                                " step=" + sim::DropStepName(step);
        const sim::DropoutSchedule schedule =
            sim::SampleDropout(static_cast<double>(d) / n, n, 1000 * n + round, step);
        if (schedule.size() != d) {
          v.Fail(tag + ": dropout sampler gave " + std::to_string(schedule.size()));
          continue;
        }

        SetupResult keys = Keys(n, n_drop, 77 * n + round);
        GenerateOptions o;
        o.round = round;
        o.trainer.dimension = 3;
        o.seed = round * 31 + n;
        o.alt_witness = alt_witness;
        GenerateResult r = GeneratePhase(keys.clients, keys.server, schedule, o);

        // Reference: contributions are updates that reached the server;
        // participants are clients that stayed to the end.
        std::map<uint32_t, IdealFedPoP::Model> contributions;
        std::set<uint32_t> participants;
        for (uint32_t i = 1; i <= n; ++i) {
          const auto s = schedule.StepFor(i);
          if (!s || *s != sim::DropStep::kBeforeProtect) {
            if (r.updates.contains(i)) contributions[i] = ToFixed(r.updates.at(i));
          }
          if (!s) participants.insert(i);
        }
        const bool ideal_ok = ideal.Generate(round, contributions, participants);
        if (ideal_ok != r.ok()) {
          v.Fail(tag + ": real outcome " + sim::OutcomeName(r.outcome.code) +
                 " disagrees with reference");
          continue;
        }

        ScenarioRound sr{round, r, {}};
        bool revealed = false;
        if (r.ok()) {
          protocol::FlServerArchive archive;
          archive.Record(r);
          protocol::Reveal(archive, round, sp);
          sr.model = *r.model;
          const IdealFedPoP::Model& ref = ideal.Reveal(round);
          if (DecodedToFixed(sr.model) != ref) v.Fail(tag + ": revealed model differs");
          revealed = true;
        } else {
          try {
            ideal.Reveal(round);
            v.Fail(tag + ": reference revealed a failed round");
          } catch (const Error&) {
          }
        }
        const IdealFedPoP::Model claimed = revealed ? ideal.Reveal(round) : IdealFedPoP::Model{};

        // Foreign model used by cheating bundles: any other revealed model.
        const ScenarioRound* previous = nullptr;
        for (auto it = history.rbegin(); it != history.rend(); ++it) {
          if (it->result.ok()) {
            previous = &*it;
            break;
          }
        }

        for (uint32_t i = 1; i <= n; ++i) {
          auto compare = [&](const std::string& what, int real, int reference) {
            if (real != reference) {
              v.Fail(tag + " client " + std::to_string(i) + " " + what + ": real " +
                     std::to_string(real) + ", reference " + std::to_string(reference));
            }
          };
          const auto bundle = r.bundles.find(i);
          if (bundle != r.bundles.end()) {
            // Honest proof.
            compare("honest", Decide(bundle->second, sp, round), ideal.Prove(round, i, claimed));
            // Foreign model claimed under this round's proof material.
            ProofBundle foreign = bundle->second;
            const sa::ModelVector other = sa::EncodeFixedPoint(std::vector<double>{1, 2, 3}, {});
            foreign.model_digest = other.Hash();
            compare("foreign-model", Decide(foreign, sp, round),
                    ideal.Prove(round, i, DecodedToFixed(other)));
          } else if (revealed) {
            // Dropped client forges from public data: revealed digest, a
            // random witness and a signature lifted from an earlier round.
            ProofBundle forged;
            forged.round = round;
            forged.model_digest = sr.model.Hash();
            crypto::Rng rng = crypto::Rng::FromSeed(round * 1000 + i);
            forged.witness = oprf::OprfKey::Random(rng);
            if (previous) forged.sigma = previous->result.bundles.begin()->second.sigma;
            compare("dropped-forger", Decide(forged, sp, round), ideal.Prove(round, i, claimed));
          }
          // Cross-round: a bundle from an earlier round shown for this one.
          if (previous && previous->result.bundles.contains(i)) {
            const ProofBundle& old = previous->result.bundles.at(i);
            compare("cross-round", Decide(old, sp, round),
                    ideal.Prove(round, i, DecodedToFixed(previous->model)));
          }
        }
        history.push_back(std::move(sr));
      }
    }
  }
  seconds = Since(start);
  if (scenarios < 20) v.Fail("only " + std::to_string(scenarios) + " scenarios");
  if (seconds >= 60) v.Fail("runtime " + std::to_string(seconds) + " s");
  if (v.pass) {
    std::ostringstream ss;
    ss << scenarios << " scenarios in " << seconds << " s";
    v.detail = ss.str();
  }
  return v;
}

// ---------------------------------------------------------------- 2

Verdict Aggregation() {
  Verdict v;
  const auto start = Clock::now();
  double worst = 0;
  for (uint32_t n : {4u, 10u, 25u}) {
    const uint32_t n_drop = n / 2;
    const double tol = n * std::ldexp(1.0, -17);
    for (uint32_t trial = 0; trial < 100; ++trial) {
      crypto::Rng rng = crypto::Rng::FromSeed(n * 100000 + trial);
      const uint32_t d = static_cast<uint32_t>(rng.Uniform(n_drop + 1));
      SetupResult keys = Keys(n, n_drop, rng.NextU64());
      std::map<uint32_t, std::vector<double>> plain;
      for (uint32_t i = 1; i <= n; ++i) {
        std::vector<double> x(8);
        for (double& c : x) c = 16.0 * rng.UniformReal() - 8.0;
        plain[i] = x;
      }
      GenerateOptions o;
      o.trainer.dimension = 8;
      o.seed = rng.NextU64();
      o.update_override = [&plain](uint32_t i) { return plain.at(i); };
      const auto schedule = sim::SampleDropout(static_cast<double>(d) / n, n, rng.NextU64());
      const GenerateResult r = GeneratePhase(keys.clients, keys.server, schedule, o);
      if (!r.ok()) {
        v.Fail("n=" + std::to_string(n) + " trial " + std::to_string(trial) + " failed: " +
               r.outcome.detail);
        continue;
      }
      const auto got = sa::DecodeFixedPoint(*r.model);
      for (size_t j = 0; j < 8; ++j) {
        double expected = 0;
        for (uint32_t i = 1; i <= n; ++i) {
          if (!schedule.StepFor(i)) expected += plain[i][j];
        }
        const double err = std::abs(got[j] - expected);
        worst = std::max(worst, err / tol);
        if (err > tol) {
          v.Fail("n=" + std::to_string(n) + " trial " + std::to_string(trial) + " error " +
                 std::to_string(err));
        }
      }
    }
  }
  const double seconds = Since(start);
  if (seconds >= 120) v.Fail("runtime " + std::to_string(seconds) + " s");
  if (v.pass) {
    std::ostringstream ss;
    ss << "300 trials in " << seconds << " s, worst error " << worst << " of tolerance";
    v.detail = ss.str();
  }
  return v;
}

// ---------------------------------------------------------------- 3

struct Partials {
  ts::SigningSession session;
  std::vector<ts::PartialSignature> partials;
};

Partials SignSubset(const ts::KeygenResult& kg, const std::vector<uint32_t>& signers,
                    const crypto::Digest& m, uint64_t id, crypto::Rng& rng) {
  std::map<uint32_t, ts::SignerNonces> nonces;
  std::vector<ts::NonceCommitment> cs;
  for (uint32_t i : signers) {
    nonces.emplace(i, ts::SignerNonces::Generate(i, rng));
    cs.push_back(nonces.at(i).commitment());
  }
  Partials p{ts::OpenSession(id, m, kg.group_key, cs, kg.keys[0].threshold), {}};
  for (uint32_t i : signers) p.partials.push_back(ts::TsSign(p.session, kg.keys[i - 1], nonces.at(i), m));
  return p;
}

Verdict ThresholdBoundary() {
  Verdict v;
  crypto::Rng rng = crypto::Rng::FromSeed(3);
  size_t accepted = 0, refused = 0, forgeries = 0;
  uint64_t round = 0;
  for (uint32_t n = 1; n <= 6; ++n) {
    for (uint32_t t = 1; t <= n; ++t) {
      ++round;
      const std::string tag = "n=" + std::to_string(n) + " t=" + std::to_string(t);
      const ts::KeygenResult kg = ts::TsKeygen(t, n, rng);
      const sa::ModelVector model =
          sa::EncodeFixedPoint(std::vector<double>{static_cast<double>(round)}, {});
      const crypto::Digest m = model.Hash();
      const oprf::OprfKey k = oprf::OprfKey::Random(rng);
      protocol::GlobalToken token{round, kg.group_key, oprf::OprfDirect(k, kg.group_key.bytes())};
      ServiceProvider sp;
      sp.Store(model, token);
      auto prove = [&](const ts::ThresholdSignature& sigma) {
        ProofBundle b{round, m, sigma, k, std::nullopt};
        return ProvePhase(b, sp, round).sp_decision;
      };

      // Earlier honest sessions: same message, and a different message.
      std::vector<uint32_t> everyone;
      for (uint32_t i = 1; i <= n; ++i) everyone.push_back(i);
      const Partials old_same = SignSubset(kg, everyone, m, 1, rng);
      const Partials old_other = SignSubset(kg, everyone, crypto::HashToDigest("other", {}), 2, rng);

      for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<uint32_t> s;
        for (uint32_t i = 0; i < n; ++i) {
          if (mask & (1u << i)) s.push_back(i + 1);
        }
        if (s.size() >= t) {
          const Partials p = SignSubset(kg, s, m, 100 + mask, rng);
          const auto sigma = ts::TsSignAgg(p.partials, p.session, t, kg.verification_shares);
          if (prove(sigma) != 1) v.Fail(tag + ": honest subset rejected");
          ++accepted;
          continue;
        }
        // Fewer than t signers: no session can be opened...
        std::vector<ts::NonceCommitment> cs;
        for (uint32_t i : s) cs.push_back(ts::SignerNonces::Generate(i, rng).commitment());
        try {
          ts::OpenSession(200 + mask, m, kg.group_key, cs, t);
          v.Fail(tag + ": sub-threshold session opened");
        } catch (const Error&) {
        }
        // ...and their partials inside a full session do not aggregate.
        const Partials full = SignSubset(kg, everyone, m, 300 + mask, rng);
        std::vector<ts::PartialSignature> mine;
        for (const auto& ps : full.partials) {
          if (std::find(s.begin(), s.end(), ps.index) != s.end()) mine.push_back(ps);
        }
        try {
          ts::TsSignAgg(mine, full.session, t, kg.verification_shares);
          v.Fail(tag + ": sub-threshold partials aggregated");
        } catch (const Error&) {
        }
        ++refused;

        if (s.size() != t - 1) continue;
        // (t-1)-coalition forgeries. The coalition fills the missing slot.
        std::vector<uint32_t> outsiders;
        for (uint32_t i = 1; i <= n; ++i) {
          if (std::find(s.begin(), s.end(), i) == s.end()) outsiders.push_back(i);
        }
        const uint32_t victim = outsiders.front();
        std::vector<uint32_t> with_victim = s;
        with_victim.push_back(victim);
        std::sort(with_victim.begin(), with_victim.end());

        std::vector<std::pair<std::string, ts::PartialSignature>> fillers;
        // Reused share: a coalition member signs again in the victim's slot.
        {
          crypto::Rng local = crypto::Rng::FromSeed(mask);
          std::map<uint32_t, ts::SignerNonces> nonces;
          std::vector<ts::NonceCommitment> c2;
          for (uint32_t i : with_victim) {
            nonces.emplace(i, ts::SignerNonces::Generate(i, local));
            c2.push_back(nonces.at(i).commitment());
          }
          const ts::SigningSession session = ts::OpenSession(400 + mask, m, kg.group_key, c2, t);
          std::vector<ts::PartialSignature> ps;
          for (uint32_t i : s) ps.push_back(ts::TsSign(session, kg.keys[i - 1], nonces.at(i), m));
          if (!s.empty()) {
            ts::SignerKeys stolen = kg.keys[s.front() - 1];
            stolen.index = victim;
            try {
              ps.push_back(ts::TsSign(session, stolen, nonces.at(victim), m));
            } catch (const Error&) {
              ps.push_back({victim, crypto::Scalar::Random(local)});
            }
          } else {
            ps.push_back({victim, crypto::Scalar::Random(local)});
          }
          fillers.clear();
          // Replayed partials of the victim from earlier sessions.
          for (const auto& old : {old_same, old_other}) {
            for (const auto& p : old.partials) {
              if (p.index == victim) fillers.push_back({"replay", p});
            }
          }
          auto attempt = [&](const std::string& what, std::vector<ts::PartialSignature> parts) {
            ++forgeries;
            bool aggregated = true;
            try {
              ts::TsSignAgg(parts, session, t, kg.verification_shares);
            } catch (const Error&) {
              aggregated = false;
            }
            if (aggregated) v.Fail(tag + ": " + what + " forgery aggregated");
            crypto::Scalar z;
            for (const auto& p : parts) z += p.response;
            const ts::ThresholdSignature forged{ts::GroupCommitment(session), z};
            if (ts::TsVerify(forged, m, kg.group_key) || prove(forged) != 0) {
              v.Fail(tag + ": " + what + " forgery accepted");
            }
          };
          attempt("reused-share", ps);
          for (const auto& [what, p] : fillers) {
            std::vector<ts::PartialSignature> replay(ps.begin(), ps.end() - 1);
            replay.push_back(p);
            attempt(what, replay);
          }
          // Whole signatures from the earlier sessions replayed on m.
          const auto other_sigma =
              ts::TsSignAgg(old_other.partials, old_other.session, t, kg.verification_shares);
          ++forgeries;
          if (prove(other_sigma) != 0) v.Fail(tag + ": cross-message signature accepted");
        }
      }
    }
  }
  if (v.pass) {
    std::ostringstream ss;
    ss << accepted << " subsets accepted, " << refused << " refused, " << forgeries
       << " forgeries rejected";
    v.detail = ss.str();
  }
  return v;
}

// ---------------------------------------------------------------- 4

Verdict OprfIdentity(const std::function<oprf::OprfKey(crypto::Rng&)>& key_source) {
  Verdict v;
  crypto::Rng rng = crypto::Rng::FromSeed(4);
  for (int trial = 0; trial < 1000; ++trial) {
    const oprf::OprfKey k = key_source(rng);
    Bytes x(1 + rng.Uniform(96));
    rng.Fill(x);
    oprf::BlindState st = oprf::OprfBlind(x, rng);
    const crypto::Digest y = oprf::OprfUnblind(oprf::OprfEvaluate(st.alpha(), k), st);
    if (y != oprf::OprfDirect(k, x)) v.Fail("mismatch at trial " + std::to_string(trial));
  }
  if (v.pass) v.detail = "1000 roundtrips bit-exact";
  return v;
}

// ---------------------------------------------------------------- 5

Verdict Unlinkability(bool alt_witness) {
  Verdict v;
  const uint32_t n = 6;
  std::set<Bytes> vks, sigmas, ks, rs;
  std::map<std::string, std::set<Bytes>> payloads;  // per message type, across rounds
  const int rounds = 5;
  for (int round = 1; round <= rounds; ++round) {
    SetupResult keys = Keys(n, 2, 500 + round);
    GenerateOptions o;
    o.round = round;
    o.trainer.dimension = 4;
    o.seed = 900 + round;
    o.alt_witness = alt_witness;
    const GenerateResult r =
        GeneratePhase(keys.clients, keys.server, sim::SampleDropout(0.2, n, round), o);
    if (!r.ok() || r.bundles.size() < 2) {
      v.Fail("round " + std::to_string(round) + " did not produce two bundles");
      continue;
    }
    protocol::FlServerArchive archive;
    archive.Record(r);
    ServiceProvider sp;
    protocol::Reveal(archive, round, sp);

    protocol::ProveOptions po;
    po.fixed_rho = crypto::Scalar::FromUint64(0x5eed);
    std::set<std::string> transcripts;
    std::set<Bytes> round_sigmas, round_ks;
    for (const auto& [id, b] : r.bundles) {
      const protocol::ProveResult p = ProvePhase(b, sp, round, po);
      if (p.sp_decision != 1) v.Fail("round " + std::to_string(round) + " proof rejected");
      transcripts.insert(p.transcript.ToJsonLines());
      round_sigmas.insert(b.sigma.Serialize());
      const auto kb = b.witness.scalar().ToBytes();
      round_ks.insert(Bytes(kb.begin(), kb.end()));
      if (id == r.bundles.begin()->first) {
        for (const auto& e : p.transcript.entries()) {
          if (e.type == "decision") continue;
          if (!payloads[e.type].insert(e.payload).second) {
            v.Fail("field " + e.type + " repeats across rounds");
          }
        }
      }
    }
    if (transcripts.size() != 1) {
      v.Fail("round " + std::to_string(round) + ": " + std::to_string(transcripts.size()) +
             " distinct transcripts for " + std::to_string(r.bundles.size()) + " clients");
    }
    if (round_sigmas.size() != 1 || round_ks.size() != 1) {
      v.Fail("round " + std::to_string(round) + ": clients hold different sigma or K");
    }
    const auto& vk = r.token->group_key.bytes();
    if (!vks.insert(Bytes(vk.begin(), vk.end())).second) v.Fail("VK repeats");
    if (!sigmas.insert(*round_sigmas.begin()).second) v.Fail("sigma repeats");
    if (!ks.insert(*round_ks.begin()).second) v.Fail("K repeats");
    const auto& rv = r.token->prf_value.bytes;
    if (!rs.insert(Bytes(rv.begin(), rv.end())).second) v.Fail("R repeats");
  }
  if (v.pass) {
    v.detail = std::to_string(rounds) +
               " rounds: same-round transcripts identical, VK/sigma/K/R and wire fields fresh";
  }
  return v;
}

// ---------------------------------------------------------------- 6 and 7

size_t Inversions(const std::vector<double>& curve) {
  size_t count = 0;
  for (size_t k = 1; k < curve.size(); ++k) {
    if (curve[k] > curve[k - 1]) ++count;
  }
  return count;
}

std::string Curve(const std::vector<double>& c) {
  std::ostringstream ss;
  for (size_t k = 0; k < c.size(); ++k) ss << (k ? "," : "") << c[k] * 1e3;
  return ss.str();
}

void TimingAndBytes(Verdict& timing, Verdict& bytes) {
  const std::vector<uint32_t> ns = {10, 25, 50, 100};
  const std::vector<double> rates = {0.1, 0.3, 0.5, 0.7};
  const int reps = 10;
  cli::BenchGrid grid;
  double worst_prove = 0, ts_overhead_100 = 0;
  uint64_t max_sp = 0, max_client = 0;
  std::ostringstream curves;
  for (uint32_t n : ns) {
    std::vector<double> sa_agg, ts_agg, ts_sign;
    for (size_t ri = 0; ri < rates.size(); ++ri) {
      std::vector<double> a, b, c, overhead;
      for (int rep = 0; rep < reps; ++rep) {
        const cli::BenchSample s = cli::RunBenchSample(n, rates[ri], n * 1000 + ri * 100 + rep, grid);
        if (!s.ok) {
          timing.Fail("n=" + std::to_string(n) + " rate " + std::to_string(rates[ri]) +
                      " sample failed");
          continue;
        }
        a.push_back(s.timings.server_sa_agg);
        b.push_back(s.timings.server_ts_agg);
        c.push_back(s.timings.client_ts_sign);
        overhead.push_back(s.timings.server_ts_agg + s.timings.client_ts_sign_total);
        worst_prove = std::max(worst_prove, s.prove_client + s.prove_sp);
        max_sp = std::max(max_sp, s.bytes_sp_to_client);
        max_client = std::max(max_client, s.bytes_client_to_sp);
      }
      if (a.empty()) return;
      sa_agg.push_back(cli::Median(a));
      ts_agg.push_back(cli::Median(b));
      ts_sign.push_back(cli::Median(c));
      if (n == 100) ts_overhead_100 = std::max(ts_overhead_100, cli::Median(overhead));
    }
    const std::pair<const char*, const std::vector<double>*> named[] = {
        {"sa_agg", &sa_agg}, {"ts_agg", &ts_agg}, {"ts_sign", &ts_sign}};
    for (const auto& [name, curve] : named) {
      curves << " n=" << n << " " << name << "[ms]=" << Curve(*curve);
      if (Inversions(*curve) > 1) {
        timing.Fail("n=" + std::to_string(n) + " " + name + " has " +
                    std::to_string(Inversions(*curve)) + " inversions: " + Curve(*curve));
      }
    }
  }
  std::fprintf(stderr, "timing medians:%s\n", curves.str().c_str());
  if (worst_prove >= 1.0) timing.Fail("prove took " + std::to_string(worst_prove) + " s");
  if (ts_overhead_100 >= 10.0) {
    timing.Fail("n=100 generate overhead beyond SA " + std::to_string(ts_overhead_100) + " s");
  }
  if (timing.pass) {
    std::ostringstream ss;
    ss << "curves non-increasing within one inversion; prove max " << worst_prove * 1e3
       << " ms; n=100 TS overhead " << ts_overhead_100 << " s";
    timing.detail = ss.str();
  }
  if (max_sp > 400 || max_client > 1300) {
    bytes.Fail("SP->client " + std::to_string(max_sp) + " B, client->SP " +
               std::to_string(max_client) + " B");
  } else {
    bytes.detail = "SP->client " + std::to_string(max_sp) + " B, client->SP " +
                   std::to_string(max_client) + " B";
  }
}

}  // namespace
}  // namespace fedpop

int main() {
  using namespace fedpop;
  std::vector<bool> all;
  Verdict c1, c8;
  size_t scenarios = 0;
  double seconds = 0;
  try {
    c1 = Conformance(false, scenarios, seconds);
  } catch (const std::exception& e) {
    c1.Fail(std::string("exception: ") + e.what());
  }
  Report(1, c1, all);

  Verdict c2;
  try {
    c2 = Aggregation();
  } catch (const std::exception& e) {
    c2.Fail(std::string("exception: ") + e.what());
  }
  Report(2, c2, all);

  Verdict c3;
  try {
    c3 = ThresholdBoundary();
  } catch (const std::exception& e) {
    c3.Fail(std::string("exception: ") + e.what());
  }
  Report(3, c3, all);

  Verdict c4;
  try {
    c4 = OprfIdentity([](crypto::Rng& rng) { return oprf::OprfKey::Random(rng); });
  } catch (const std::exception& e) {
    c4.Fail(std::string("exception: ") + e.what());
  }
  Report(4, c4, all);

  Verdict c5;
  try {
    c5 = Unlinkability(false);
  } catch (const std::exception& e) {
    c5.Fail(std::string("exception: ") + e.what());
  }
  Report(5, c5, all);

  Verdict c6, c7;
  try {
    TimingAndBytes(c6, c7);
  } catch (const std::exception& e) {
    c6.Fail(std::string("exception: ") + e.what());
    c7.Fail(std::string("exception: ") + e.what());
  }
  Report(6, c6, all);
  Report(7, c7, all);

  try {
    Verdict a = Conformance(true, scenarios, seconds);
    Verdict b = OprfIdentity([](crypto::Rng& rng) {
      // K derived from a random group product, as in the alternative path.
      return protocol::WitnessFromProduct(crypto::GroupElement::BaseMul(crypto::Scalar::Random(rng)));
    });
    Verdict c = Unlinkability(true);
    if (!a.pass) c8.Fail("conformance: " + a.detail);
    if (!b.pass) c8.Fail("oprf: " + b.detail);
    if (!c.pass) c8.Fail("unlinkability: " + c.detail);
    if (c8.pass) c8.detail = "alternative witness path: " + a.detail + "; " + b.detail;
  } catch (const std::exception& e) {
    c8.Fail(std::string("exception: ") + e.what());
  }
  Report(8, c8, all);

  return std::all_of(all.begin(), all.end(), [](bool b) { return b; }) ? 0 : 1;
}
