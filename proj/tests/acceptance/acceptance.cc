// tests/acceptance/acceptance.cc

// Copyright 2026  The asp-lab Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails. `--only <substring>` runs the matching checks.

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cstdarg>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "asplab/data/manifest.h"
#include "asplab/data/splits.h"
#include "asplab/data/synth.h"
#include "asplab/eval/attention.h"
#include "asplab/eval/metrics.h"
#include "asplab/eval/report.h"
#include "asplab/eval/results.h"
#include "asplab/eval/ttest.h"
#include "asplab/model/trainer.h"
#include "asplab/pooling/aggregation.h"
#include "asplab/pooling/asp.h"
#include "cli.h"
#include "oracles/grad_cases.h"
#include "oracles/oracles.h"
#include "oracles/reference_values.h"
#include "unit/test_util.h"

namespace asplab {
namespace {

using K = AggregationMode::Kind;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string Format(const char *fmt, ...) __attribute__((format(printf, 1, 2)));
std::string Format(const char *fmt, ...) {
  char buf[1024];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, args);
  va_end(args);
  return buf;
}

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

Outcome GradientCorrectness() {
  const auto start = Clock::now();
  double worst_op = 0.0, worst_model = 0.0;
  std::string failures;
  for (const auto &c : testing::OpCases()) {
    const GradCheckReport r = GradCheck(
        [&](Graph &g, std::span<const Var> p) { return testing::Contract(g, c.op(g, p)); },
        c.inputs, 1e-5, 1e-4);
    worst_op = std::max(worst_op, r.max_rel_error);
    if (!r.pass) failures += " " + c.name;
  }
  for (K kind : {K::kLayerWiseAsp, K::kTimeWiseAspLayerMean, K::kTimeWiseAspSingleLayer,
                 K::kMeanMeanBaseline, K::kSingleLayerMeanBaseline})
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      const GradCheckReport r = testing::CheckTinyModel(kind, seed);
      worst_model = std::max(worst_model, r.max_rel_error);
      if (!r.pass) failures += " " + ModeName(kind) + "/seed" + std::to_string(seed);
    }
  const double secs = Seconds(start);
  Outcome o;
  o.pass = failures.empty() && secs < 30.0;
  o.detail = Format("%zu ops (h=1e-5) max rel err %.2e; tiny model d=6 a_h=3 hidden [4] N=5, "
                    "5 modes x 3 seeds (h=1e-4) max rel err %.2e; tol 1e-4; %.2f s (< 30 s)",
                    testing::OpCases().size(), worst_op, worst_model, secs);
  if (!failures.empty()) o.detail += "; failed:" + failures;
  return o;
}

Outcome AspOracle() {
  Rng rng(20260101);
  double worst_z = 0.0, worst_alpha = 0.0, worst_sum = 0.0, min_sd = INFINITY;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = rng.UniformInt(1, 10), d = rng.UniformInt(1, 8),
                      h = rng.UniformInt(1, 8);
    const AspParams p = InitAspParams(d, h, trial % 5 != 4, rng);
    const Tensor x = testing::RandomMatrix(n, d, rng, trial % 10 == 0 ? 1e-6 : 1.5);
    const auto [pooled, map] = AspForward(x, p);
    const oracle::AspOutput ref = oracle::Asp(x, p);
    for (std::size_t i = 0; i < 2 * d; ++i)
      worst_z = std::max(worst_z, std::abs(pooled.z[i] - static_cast<double>(ref.z[i])));
    for (std::size_t c = 0; c < d; ++c) {
      double sum = 0.0;
      for (std::size_t t = 0; t < n; ++t) {
        worst_alpha = std::max(
            worst_alpha, std::abs(map.alpha.at(c, t) - static_cast<double>(ref.alpha[c][t])));
        sum += map.alpha.at(c, t);
      }
      worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
      min_sd = std::min(min_sd, pooled.z[d + c]);
    }
  }
  Outcome o;
  o.pass = worst_z <= 1e-10 && worst_alpha <= 1e-10 && worst_sum <= 1e-10 &&
           min_sd >= std::sqrt(kVarianceFloor);
  o.detail = Format("100 instances N<=10 d<=8: max |z - oracle| %.2e, max |alpha - oracle| %.2e, "
                    "max |row sum - 1| %.2e (tol 1e-10); min sigma %.3e (>= 1e-4)",
                    worst_z, worst_alpha, worst_sum, min_sd);
  return o;
}

Outcome AggregationOracle() {
  Rng rng(77);
  double worst = 0.0;
  std::size_t tensors = 0;
  auto check = [&](std::size_t l, std::size_t t, std::size_t d) {
    const EmbeddingTensor e = testing::RandomEmbedding(l, t, d, rng);
    const Tensor lw = LayerwiseMatrix(e);
    const auto lref = oracle::Layerwise(e);
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t k = 0; k < d; ++k)
        worst = std::max(worst, std::abs(lw.at(i, k) - static_cast<double>(lref[i][k])));
    for (std::size_t layer = 0; layer <= l; layer += std::max<std::size_t>(1, l / 3)) {
      const Tensor tw = TimewiseMatrix(e, layer);
      const auto tref = oracle::Timewise(e, layer);
      for (std::size_t i = 0; i < t; ++i)
        for (std::size_t k = 0; k < d; ++k)
          worst = std::max(worst, std::abs(tw.at(i, k) - static_cast<double>(tref[i][k])));
    }
    ++tensors;
  };
  check(24, 50, 32);
  check(1, 1, 1);
  for (int i = 0; i < 50; ++i)
    check(rng.UniformInt(1, 24), rng.UniformInt(1, 50), rng.UniformInt(1, 32));
  Outcome o;
  o.pass = worst <= 1e-12;
  o.detail = Format("%zu random tensors up to 24x50x32: max |error| %.2e (tol 1e-12)", tensors,
                    worst);
  return o;
}

Outcome StatisticsOracle() {
  double worst_pcc = 0.0, worst_t = 0.0, worst_p = 0.0;
  bool dof_ok = true;
  std::string headline;
  for (const auto &c : reference::PccCases())
    worst_pcc = std::max(worst_pcc, std::abs(Pcc(c.y, c.yhat) - c.pcc));
  for (const auto &c : reference::TTestCases()) {
    const std::vector<double> zeros(c.d.size(), 0.0);
    const TTestResult r = PairedTTest(c.d, zeros);
    worst_t = std::max(worst_t, std::abs(r.t_statistic - c.t));
    worst_p = std::max(worst_p, std::abs(r.p_value - c.p));
    dof_ok = dof_ok && r.dof == c.dof;
    if (headline.empty())
      headline = Format("t=%.4f p=%.5f dof=%d", r.t_statistic, r.p_value, r.dof);
  }
  Rng rng(5);
  double worst_affine = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = rng.UniformInt(3, 100);
    std::vector<double> y(n), yhat(n), ya(n), ha(n);
    const double a = rng.Uniform(0.01, 100.0), b = rng.Uniform(-50.0, 50.0);
    const double c = rng.Uniform(0.01, 100.0), d = rng.Uniform(-50.0, 50.0);
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = rng.Normal();
      yhat[i] = rng.Uniform() * y[i] + rng.Normal();
      ya[i] = a * y[i] + b;
      ha[i] = c * yhat[i] + d;
    }
    const double r = Pcc(y, yhat);
    worst_affine = std::max({worst_affine, std::abs(Pcc(ya, yhat) - r), std::abs(Pcc(y, ha) - r)});
  }
  Outcome o;
  o.pass = worst_pcc <= 1e-8 && worst_t <= 1e-8 && worst_p <= 1e-8 && dof_ok &&
           worst_affine <= 1e-10;
  o.detail = Format("fixture %s; max |PCC err| %.2e, |t err| %.2e, |p err| %.2e (tol 1e-8); "
                    "affine invariance over 100 trials %.2e (tol 1e-10)",
                    headline.c_str(), worst_pcc, worst_t, worst_p, worst_affine);
  return o;
}

// A synthetic dataset written to disk and split, ready for training.
struct PlantedData {
  SynthDataset dataset;
  std::filesystem::path manifest;
  std::vector<UtteranceRecord> records;
  SplitAssignment assignment;
};

PlantedData MakeData(const SynthOptions &options, const SplitFractions &fractions,
                     const std::filesystem::path &dir) {
  PlantedData d;
  d.dataset = GenerateSynthetic(options);
  d.manifest = WriteSynthetic(d.dataset, dir);
  d.records = ReadManifest(d.manifest);
  d.assignment = MakeSplits(d.records, options.descriptor, fractions, options.seed);
  return d;
}

// Default optimizer settings except the learning rate (see README); layer 4 for
// the single-layer modes of an 8-layer synthetic stack.
ExperimentConfig SynthConfig(K kind, std::uint64_t seed) {
  ExperimentConfig c;
  c.mode = {kind, 4};
  c.heads = 5;
  c.lr = 1e-3;
  c.seed = seed;
  return c;
}

struct ModeRun {
  EvalResult result;
  TrainResult train;
  std::vector<AttentionMap> maps;
  std::vector<int> ratings;
};

ModeRun TrainAndEvaluate(const PlantedData &d, const ExperimentConfig &config) {
  const auto train = LoadExamples(d.manifest, d.records, d.assignment, Split::kTrain, config);
  const auto dev = LoadExamples(d.manifest, d.records, d.assignment, Split::kDev, config);
  const auto test = LoadExamples(d.manifest, d.records, d.assignment, Split::kTest, config);
  ModeRun run;
  run.train = Train(config, train, dev);
  run.result = MakeEvalResult(config, UtteranceIds(test), Targets(test),
                              Predict(run.train.params, test));
  if (config.mode.UsesAsp())
    for (const Example &ex : test) {
      run.maps.push_back(*Forward(ex.input, config, run.train.params).attention);
      run.ratings.push_back(static_cast<int>(ex.target));
    }
  return run;
}

std::string PccText(const EvalResult &r) {
  return r.pcc ? Format("%.4f", *r.pcc) : std::string("undefined");
}

Outcome PlantedTemporalCue() {
  const auto start = Clock::now();
  testing::TempDir dir("accept-temporal");
  SynthOptions opt;
  opt.task = SynthTask::kTemporalCue;
  opt.seed = 7;
  const PlantedData d = MakeData(opt, {}, dir.path());
  const ModeRun asp = TrainAndEvaluate(d, SynthConfig(K::kTimeWiseAspLayerMean, 7));
  const ModeRun base = TrainAndEvaluate(d, SynthConfig(K::kMeanMeanBaseline, 7));
  const TTestResult t = PairedTTest(asp.result.squared_errors, base.result.squared_errors);
  const double secs = Seconds(start);
  Outcome o;
  o.pass = asp.result.pcc && *asp.result.pcc >= 0.8 && asp.result.mse < base.result.mse &&
           t.p_value < 0.05 && secs < 600.0;
  o.detail = Format("n=300 L=8 D=64 noise 1.0 seed 7, lr 1e-3: time_wise_asp_layer_mean a_h=5 "
                    "test PCC %s MSE %.4f vs mean_mean_baseline MSE %.4f; paired t=%.3f "
                    "p=%.3g (n_test=%zu); %.1f s (< 600 s)",
                    PccText(asp.result).c_str(), asp.result.mse, base.result.mse, t.t_statistic,
                    t.p_value, asp.result.n, secs);
  return o;
}

std::size_t ArgmaxAbsDiff(const std::vector<double> &a, const std::vector<double> &b) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < a.size(); ++k)
    if (std::abs(a[k] - b[k]) > std::abs(a[best] - b[best])) best = k;
  return best + 1;
}

Outcome PlantedLayerCue() {
  testing::TempDir dir("accept-layer");
  SynthOptions opt;
  opt.task = SynthTask::kLayerCue;
  opt.seed = 7;
  const PlantedData d = MakeData(opt, {}, dir.path());
  const ModeRun asp = TrainAndEvaluate(d, SynthConfig(K::kLayerWiseAsp, 7));
  const ModeRun base = TrainAndEvaluate(d, SynthConfig(K::kMeanMeanBaseline, 7));
  const TTestResult t = PairedTTest(asp.result.squared_errors, base.result.squared_errors);
  const RatingGroupedAttention prof =
      AttentionProfile(asp.maps, asp.ratings, opt.descriptor);
  const RatingProfile &r1 = prof.groups[0], &r7 = prof.groups[6];
  Outcome o;
  if (r1.count == 0 || r7.count == 0) {
    o.detail = Format("test split has %zu rating-1 and %zu rating-7 utterances", r1.count,
                      r7.count);
    return o;
  }
  const std::size_t raw_arg = ArgmaxAbsDiff(r7.raw, r1.raw);
  const std::size_t scaled_arg = ArgmaxAbsDiff(r7.scaled, r1.scaled);
  o.pass = asp.result.mse < base.result.mse && t.p_value < 0.05 && raw_arg == d.dataset.cue_layer;
  o.detail = Format("seed 7, lr 1e-3, planted layer %zu: layer_wise_asp a_h=5 test MSE %.4f vs "
                    "mean_mean_baseline %.4f, paired t=%.3f p=%.3g; argmax |r7 - r1| over "
                    "group-mean profiles = layer %zu (n1=%zu, n7=%zu; min-max scaled profiles "
                    "give layer %zu)",
                    d.dataset.cue_layer, asp.result.mse, base.result.mse, t.t_statistic,
                    t.p_value, raw_arg, r1.count, r7.count, scaled_arg);
  return o;
}

Outcome NullTask() {
  const std::vector<K> modes = {K::kMeanMeanBaseline, K::kSingleLayerMeanBaseline,
                                K::kLayerWiseAsp, K::kTimeWiseAspLayerMean,
                                K::kTimeWiseAspSingleLayer};
  const std::vector<std::uint64_t> seeds = {1, 2, 3};
  std::map<K, int> pcc_ok;
  std::map<std::pair<K, K>, int> significant;
  double max_abs_pcc = 0.0;
  std::string seed_notes;
  for (std::uint64_t seed : seeds) {
    testing::TempDir dir("accept-null");
    SynthOptions opt;
    opt.task = SynthTask::kNull;
    opt.seed = seed;
    const PlantedData d = MakeData(opt, {0.4, 0.2, 0.4}, dir.path());
    std::map<K, EvalResult> results;
    for (K kind : modes) {
      results[kind] = TrainAndEvaluate(d, SynthConfig(kind, seed)).result;
      const double r = results[kind].pcc.value_or(0.0);
      max_abs_pcc = std::max(max_abs_pcc, std::abs(r));
      pcc_ok[kind] += std::abs(r) < 0.2;
    }
    int sig_this_seed = 0;
    for (std::size_t i = 0; i < modes.size(); ++i)
      for (std::size_t j = i + 1; j < modes.size(); ++j) {
        const TTestResult t = PairedTTest(results[modes[i]].squared_errors,
                                          results[modes[j]].squared_errors);
        significant[{modes[i], modes[j]}] += t.significant_at_5pct;
        sig_this_seed += t.significant_at_5pct;
      }
    seed_notes += Format("%sseed %llu: %d/10 pairs significant", seed_notes.empty() ? "" : ", ",
                         static_cast<unsigned long long>(seed), sig_this_seed);
  }
  const int majority = static_cast<int>(seeds.size()) / 2 + 1;
  bool pass = true;
  int modes_ok = 0, pairs_ok = 0;
  for (K kind : modes) {
    const bool ok = pcc_ok[kind] >= majority;
    modes_ok += ok;
    pass = pass && ok;
  }
  for (const auto &[pair, count] : significant) {
    const bool ok = static_cast<int>(seeds.size()) - count >= majority;
    pairs_ok += ok;
    pass = pass && ok;
  }
  Outcome o;
  o.pass = pass;
  o.detail = Format("3 seeds, n=300, split 0.4/0.2/0.4, lr 1e-3: %d/5 modes with |PCC| < 0.2 in a "
                    "majority of seeds (max |PCC| %.3f); %d/10 pairs not significant in a "
                    "majority of seeds (%s)",
                    modes_ok, max_abs_pcc, pairs_ok, seed_notes.c_str());
  return o;
}

std::string Slurp(const std::filesystem::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the CLI with stdout silenced.
int Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "asp_lab");
  std::fflush(stdout);
  const int saved = ::dup(STDOUT_FILENO);
  const int null = ::open("/dev/null", O_WRONLY);
  ::dup2(null, STDOUT_FILENO);
  ::close(null);
  const int code = RunCli(args);
  std::fflush(stdout);
  ::dup2(saved, STDOUT_FILENO);
  ::close(saved);
  return code;
}

Outcome Determinism() {
  testing::TempDir dir("accept-determinism");
  std::vector<std::filesystem::path> runs;
  int worst_code = 0;
  for (const char *name : {"a", "b"}) {
    const auto root = dir.path() / name;
    const std::string data = (root / "data").string(), manifest = data + "/manifest.jsonl",
                      split = data + "/split.json", run = (root / "run").string();
    worst_code = std::max(worst_code, Cli({"synth", "--task", "temporal_cue", "--seed", "11",
                                           "--out", data}));
    worst_code = std::max(worst_code, Cli({"split", "--manifest", manifest, "--seed", "11"}));
    worst_code = std::max(worst_code, Cli({"train", "--manifest", manifest, "--split", split,
                                           "--mode", "time_wise_asp_layer_mean", "--seed", "11",
                                           "--max-epochs", "10", "--out", run}));
    worst_code = std::max(worst_code, Cli({"eval", "--checkpoint", run + "/checkpoint.aspc",
                                           "--manifest", manifest, "--split", split}));
    worst_code = std::max(worst_code, Cli({"attn-map", "--checkpoint", run + "/checkpoint.aspc",
                                           "--manifest", manifest, "--split", split}));
    runs.push_back(root);
  }
  const std::vector<std::string> files = {"data/manifest.jsonl", "data/split.json",
                                          "run/checkpoint.aspc", "run/history.json",
                                          "run/eval.csv",        "run/eval.json",
                                          "run/attention.csv"};
  std::string differing;
  std::size_t bytes = 0;
  for (const auto &f : files) {
    const std::string a = Slurp(runs[0] / f), b = Slurp(runs[1] / f);
    if (a.empty() || a != b) differing += " " + f;
    bytes += a.size();
  }
  std::size_t embeddings = 0;
  for (const auto &entry : std::filesystem::directory_iterator(runs[0] / "data" / "emb")) {
    const auto other = runs[1] / "data" / "emb" / entry.path().filename();
    if (Slurp(entry.path()) != Slurp(other)) differing += " " + entry.path().filename().string();
    ++embeddings;
  }
  Outcome o;
  o.pass = worst_code == 0 && differing.empty();
  o.detail = Format("two synth -> split -> train -> eval runs (seed 11): %zu artifacts (%zu bytes) "
                    "and %zu embedding files byte-identical",
                    files.size(), bytes, embeddings);
  if (worst_code != 0) o.detail += Format("; a command exited with %d", worst_code);
  if (!differing.empty()) o.detail += "; differing:" + differing;
  return o;
}

Outcome ReportFixture() {
  std::vector<EvalResult> results;
  const std::filesystem::path dir = std::filesystem::path(ASPLAB_TEST_SOURCE_DIR) / "fixtures" /
                                    "table2";
  for (int exp = 1; exp <= 14; ++exp)
    for (auto &r : ReadResults(dir / Format("exp%02d.json", exp))) results.push_back(std::move(r));
  const std::string table = RenderTable(results, {});
  std::vector<std::string> rows;
  std::istringstream in(table);
  std::vector<int> order;
  for (std::string line; std::getline(in, line);) {
    int exp = 0;
    if (std::sscanf(line.c_str(), "%d &", &exp) == 1) {
      order.push_back(exp);
      rows.push_back(line);
    }
  }
  std::vector<int> expected(14);
  for (int i = 0; i < 14; ++i) expected[i] = i + 1;
  const bool layout = order == expected &&
                      table.find(" & & & & PCC & MSE & PCC & MSE & PCC & MSE & PCC & MSE & PCC & "
                                 "MSE \\\\") != std::string::npos &&
                      table.find("ASP OVER LAYER") < table.find("\n3 & ") &&
                      table.find("ASP OVER TIME") < table.find("\n7 & ");
  const bool exp1 = rows.size() == 14 &&
                    rows[0].rfind("1 & Mean & Mean & - & 0.684 & 0.760 & ", 0) == 0;
  const bool exp8 = rows.size() == 14 && rows[7].find("& 0.583 & 0.820 \\\\") != std::string::npos;
  const bool best8 = rows.size() == 14 && rows[7].find("ML PCC, ML MSE") != std::string::npos;
  // Every value in the fixtures printed with exactly three decimals.
  std::size_t cells = 0;
  bool three = true;
  for (const auto &row : rows) {
    std::istringstream cols(row);
    std::string cell;
    int index = 0;
    while (std::getline(cols, cell, '&')) {
      if (index++ < 4) continue;
      const auto b = cell.find_first_not_of(' ');
      const auto e = cell.find_first_of(" \\", b);
      const std::string v = cell.substr(b, e - b);
      three = three && v.size() == 5 && v[1] == '.';
      ++cells;
    }
  }
  Outcome o;
  o.pass = layout && exp1 && exp8 && best8 && three && cells == 140;
  o.detail = Format("14 fixture rows in table order: layout %s; Exp 1 \"0.684 & 0.760\" %s; "
                    "Exp 8 \"0.583 & 0.820\" %s and best-in-column (Exp 7-10, monoloudness) %s; "
                    "%zu cells with three decimals %s",
                    layout ? "ok" : "WRONG", exp1 ? "ok" : "MISSING", exp8 ? "ok" : "MISSING",
                    best8 ? "ok" : "MISSING", cells, three ? "ok" : "WRONG");
  return o;
}

Outcome SplitProperty() {
  Rng rng(2026);
  std::size_t violations = 0, utterances = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto records = testing::RandomManifest(rng);
    const SplitFractions f = trial % 2 ? SplitFractions{} : SplitFractions{0.5, 0.25, 0.25};
    const SplitAssignment a = MakeSplits(records, "intelligibility", f, trial);
    std::map<std::string, std::set<Split>> seen;
    for (const auto &r : records) {
      const auto it = a.find(r.utterance_id);
      if (it == a.end()) continue;
      seen[r.speaker_id].insert(it->second);
      ++utterances;
    }
    for (const auto &[speaker, splits] : seen) violations += splits.size() > 1;
  }
  Outcome o;
  o.pass = violations == 0;
  o.detail = Format("1000 random manifests (%zu assigned utterances): %zu speakers in more than "
                    "one split",
                    utterances, violations);
  return o;
}

struct Criterion {
  const char *name;
  Outcome (*run)();
};

}  // namespace
}  // namespace asplab

int main(int argc, char **argv) {
  using namespace asplab;
  const Criterion criteria[] = {
      {"gradient correctness", GradientCorrectness},
      {"ASP oracle equivalence", AspOracle},
      {"aggregation oracle equivalence", AggregationOracle},
      {"statistics oracle", StatisticsOracle},
      {"planted temporal cue", PlantedTemporalCue},
      {"planted layer cue", PlantedLayerCue},
      {"null-task sanity", NullTask},
      {"determinism", Determinism},
      {"report fixture", ReportFixture},
      {"split property", SplitProperty},
  };
  std::string only;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::strcmp(argv[i], "--only") == 0) only = argv[i + 1];
  int failed = 0, ran = 0;
  for (const auto &c : criteria) {
    if (!only.empty() && std::string(c.name).find(only) == std::string::npos) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    ++ran;
    failed += !o.pass;
    std::printf("%s  %s: %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", ran - failed, ran);
  return failed == 0 ? 0 : 1;
}
