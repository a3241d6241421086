// tools/cli.cc

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

#include "cli.h"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "asplab/data/manifest.h"
#include "asplab/data/synth.h"
#include "asplab/error.h"
#include "asplab/eval/attention.h"
#include "asplab/eval/report.h"
#include "asplab/model/trainer.h"
#include "asplab/rng.h"
#include "json.hpp"

namespace asplab {

using nlohmann::json;
namespace fs = std::filesystem;

std::filesystem::path OutputRoot() {
  const char *env = std::getenv("ASP_LAB_OUT");
  return env != nullptr && *env != '\0' ? fs::path(env) : fs::path("asp_lab_out");
}

namespace {

std::string UtcNow() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void WriteText(const fs::path &path, const std::string &text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  out << text;
}

void WriteJson(const fs::path &path, const json &j) { WriteText(path, j.dump(1) + "\n"); }

json ReadJsonFile(const fs::path &path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::exception &e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

std::string FormatOptional(const std::optional<double> &v) {
  if (!v) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", *v);
  return buf;
}

// Training flags. Values start at the config defaults; only flags actually
// given on the command line override the config file.
struct ConfigFlags {
  ExperimentConfig defaults;
  std::string config_file;
  std::string descriptor = defaults.descriptor;
  std::string mode = ModeName(defaults.mode.kind);
  std::size_t layer = defaults.mode.layer;
  std::size_t heads = defaults.heads;
  bool global_context = defaults.global_context;
  double eps_var = defaults.eps_var;
  double lr = defaults.lr;
  std::size_t batch_size = defaults.batch_size;
  double beta1 = defaults.beta1;
  double beta2 = defaults.beta2;
  double adam_eps = defaults.adam_eps;
  std::size_t patience = defaults.patience;
  std::size_t max_epochs = defaults.max_epochs;
  std::uint64_t seed = defaults.seed;
  std::vector<std::size_t> hidden_sizes = defaults.hidden_sizes;
  std::map<std::string, CLI::Option *> given;
};

void AddConfigFlags(CLI::App *app, ConfigFlags *f, bool with_mode) {
  app->add_option("--config", f->config_file, "JSON config file; flags override its values");
  auto add = [&](const std::string &key, CLI::Option *opt) { f->given[key] = opt; };
  add("descriptor", app->add_option("--descriptor", f->descriptor, "Rated descriptor to regress"));
  if (with_mode) {
    add("mode", app->add_option("--mode", f->mode,
                                "layer_wise_asp | time_wise_asp_layer_mean | "
                                "time_wise_asp_single_layer | mean_mean_baseline | "
                                "single_layer_mean_baseline"));
    add("heads", app->add_option("--heads", f->heads, "Attention bottleneck width"));
  }
  add("layer", app->add_option("--layer", f->layer, "1-based layer for single-layer modes"));
  add("global_context",
      app->add_option("--global-context", f->global_context,
                      "Append utterance mean/std to the attention input"));
  add("eps_var", app->add_option("--eps-var", f->eps_var, "Variance floor of attentive std"));
  add("lr", app->add_option("--lr", f->lr, "Adam learning rate"));
  add("batch_size", app->add_option("--batch-size", f->batch_size, "Mini-batch size"));
  add("beta1", app->add_option("--beta1", f->beta1, "Adam beta1"));
  add("beta2", app->add_option("--beta2", f->beta2, "Adam beta2"));
  add("adam_eps", app->add_option("--adam-eps", f->adam_eps, "Adam epsilon"));
  add("patience", app->add_option("--patience", f->patience,
                                  "Epochs without dev MSE improvement before stopping"));
  add("max_epochs", app->add_option("--max-epochs", f->max_epochs, "Epoch limit"));
  add("seed", app->add_option("--seed", f->seed, "Seed for init and shuffle streams"));
  add("hidden_sizes", app->add_option("--hidden", f->hidden_sizes,
                                      "Hidden layer widths, comma separated")
                          ->delimiter(','));
}

ExperimentConfig BuildConfig(const ConfigFlags &f) {
  ExperimentConfig c;
  if (!f.config_file.empty()) {
    if (!fs::exists(f.config_file))
      throw ConfigError("config", "file '" + f.config_file + "' does not exist");
    json j;
    try {
      std::ifstream in(f.config_file);
      j = json::parse(in);
    } catch (const json::exception &e) {
      throw ConfigError("config", e.what());
    }
    c.MergeJson(j);
  }
  json flags = json::object();
  auto given = [&](const std::string &key) {
    auto it = f.given.find(key);
    return it != f.given.end() && it->second->count() > 0;
  };
  if (given("descriptor")) flags["descriptor"] = f.descriptor;
  if (given("mode")) flags["mode"] = f.mode;
  if (given("layer")) flags["layer"] = f.layer;
  if (given("heads")) flags["heads"] = f.heads;
  if (given("global_context")) flags["global_context"] = f.global_context;
  if (given("eps_var")) flags["eps_var"] = f.eps_var;
  if (given("lr")) flags["lr"] = f.lr;
  if (given("batch_size")) flags["batch_size"] = f.batch_size;
  if (given("beta1")) flags["beta1"] = f.beta1;
  if (given("beta2")) flags["beta2"] = f.beta2;
  if (given("adam_eps")) flags["adam_eps"] = f.adam_eps;
  if (given("patience")) flags["patience"] = f.patience;
  if (given("max_epochs")) flags["max_epochs"] = f.max_epochs;
  if (given("seed")) flags["seed"] = f.seed;
  if (given("hidden_sizes")) flags["hidden_sizes"] = f.hidden_sizes;
  c.MergeJson(flags);
  c.Validate();
  return c;
}

struct LoadedData {
  std::vector<UtteranceRecord> records;
  SplitAssignment assignment;
};

LoadedData LoadData(const fs::path &manifest, const fs::path &split) {
  if (!fs::exists(manifest)) throw DataError("manifest '" + manifest.string() + "' not found");
  if (!fs::exists(split)) throw DataError("split file '" + split.string() + "' not found");
  LoadedData d;
  d.records = ReadManifest(manifest);
  ValidateRecords(d.records);
  d.assignment = ReadSplitFile(split);
  CheckSpeakerExclusive(d.records, d.assignment);
  return d;
}

struct TrainedRun {
  Checkpoint checkpoint;
  fs::path dir;
  fs::path run_file;
  json run;
};

// Trains one configuration and writes checkpoint.aspc, history.json,
// config.json and run.json into `dir`.
TrainedRun TrainToDirectory(const ExperimentConfig &config, const fs::path &manifest,
                            const fs::path &split, const fs::path &dir, std::size_t log_every,
                            const std::string &log_prefix) {
  const std::string started = UtcNow();
  const LoadedData data = LoadData(manifest, split);
  const auto train = LoadExamples(manifest, data.records, data.assignment, Split::kTrain, config);
  const auto dev = LoadExamples(manifest, data.records, data.assignment, Split::kDev, config);
  EpochCallback log;
  if (log_every > 0)
    log = [&](const EpochRecord &r) {
      if (r.epoch % log_every != 0) return;
      std::fprintf(stderr, "%sepoch %zu train_mse=%.6f dev_mse=%.6f dev_pcc=%s\n",
                   log_prefix.c_str(), r.epoch, r.train_mse, r.dev_mse,
                   FormatOptional(r.dev_pcc).c_str());
    };
  TrainResult result = Train(config, train, dev, log);

  TrainedRun run;
  run.dir = dir;
  run.checkpoint = {config, std::move(result.params), result.best_dev_mse, result.best_epoch,
                    result.rng_state};
  fs::create_directories(dir);
  SaveCheckpoint(run.checkpoint, dir / "checkpoint.aspc");
  WriteJson(dir / "history.json", HistoryJson(result.history));
  WriteJson(dir / "config.json", config.ToJson());

  const std::string hash = config.Hash();
  char run_id[17];
  std::snprintf(run_id, sizeof(run_id), "%016llx",
                static_cast<unsigned long long>(
                    Fnv1a64(hash + "|" + fs::absolute(manifest).lexically_normal().string() +
                            "|" + fs::absolute(split).lexically_normal().string())));
  json j;
  j["run_id"] = run_id;
  j["config_hash"] = hash;
  j["config"] = config.ToJson();
  j["manifest"] = manifest.string();
  j["split"] = split.string();
  j["checkpoint"] = (dir / "checkpoint.aspc").string();
  j["history"] = (dir / "history.json").string();
  j["eval_json"] = nullptr;
  j["eval_csv"] = nullptr;
  j["best_dev_mse"] = result.best_dev_mse;
  j["best_epoch"] = result.best_epoch;
  j["epochs_run"] = result.history.size();
  j["started_at"] = started;
  j["finished_at"] = UtcNow();
  run.run = j;
  run.run_file = dir / "run.json";
  WriteJson(run.run_file, j);

  const auto &best = result.history.at(result.best_epoch - 1);
  std::printf("%sbest dev MSE=%.6f PCC=%s epoch=%zu\n", log_prefix.c_str(), result.best_dev_mse,
              FormatOptional(best.dev_pcc).c_str(), result.best_epoch);
  return run;
}

// Writes eval.json and eval.csv next to each other and records them in
// run.json when one exists in `dir`.
void WriteEval(const EvalResult &r, const fs::path &dir) {
  fs::create_directories(dir);
  WriteResultsJson({r}, dir / "eval.json");
  WriteText(dir / "eval.csv", ResultsCsv(std::span<const EvalResult>(&r, 1)));
  const fs::path run_file = dir / "run.json";
  if (fs::exists(run_file)) {
    json run = ReadJsonFile(run_file);
    run["eval_json"] = (dir / "eval.json").string();
    run["eval_csv"] = (dir / "eval.csv").string();
    run["evaluated_at"] = UtcNow();
    WriteJson(run_file, run);
  }
}

std::vector<EvalResult> LoadComparable(const std::vector<std::string> &files,
                                       const std::string &manifest, const std::string &split,
                                       Split which) {
  std::vector<EvalResult> out;
  for (const std::string &f : files) {
    if (fs::path(f).extension() == ".aspc") {
      if (manifest.empty() || split.empty())
        throw ConfigError("manifest", "checkpoints can only be compared with --manifest and --split");
      out.push_back(EvaluateCheckpoint(LoadCheckpoint(f), manifest, split, which));
    } else {
      for (EvalResult &r : ReadResults(f)) out.push_back(std::move(r));
    }
  }
  return out;
}

// "3-6" or "8".
std::pair<int, int> ParseExpRange(const std::string &text) {
  const auto dash = text.find('-');
  try {
    if (dash == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dash)), std::stoi(text.substr(dash + 1))};
  } catch (const std::exception &) {
    throw ConfigError("group-test", "bad experiment range '" + text + "'");
  }
}

// Configuration of a numbered experiment, derived from `base`.
ExperimentConfig GridConfig(const ExperimentConfig &base, int exp_id) {
  using K = AggregationMode::Kind;
  static constexpr std::size_t kHeads[] = {1, 5, 64, 128};
  ExperimentConfig c = base;
  if (exp_id == 1) {
    c.mode.kind = K::kMeanMeanBaseline;
  } else if (exp_id == 2) {
    c.mode.kind = K::kSingleLayerMeanBaseline;
  } else if (exp_id >= 3 && exp_id <= 14) {
    c.mode.kind = exp_id <= 6 ? K::kLayerWiseAsp
                  : exp_id <= 10 ? K::kTimeWiseAspLayerMean
                                 : K::kTimeWiseAspSingleLayer;
    c.heads = kHeads[(exp_id - 3) % 4];
  } else {
    throw ConfigError("experiments", "experiment ids run from 1 to 14, got " +
                                         std::to_string(exp_id));
  }
  return c;
}

int CmdSynth(const SynthOptions &options, std::string out) {
  const fs::path dir = out.empty() ? OutputRoot() / "synth" /
                                         (SynthTaskName(options.task) + "-seed" +
                                          std::to_string(options.seed))
                                   : fs::path(out);
  const SynthDataset ds = GenerateSynthetic(options);
  const fs::path manifest = WriteSynthetic(ds, dir);
  std::printf("%s\n", manifest.string().c_str());
  return kExitOk;
}

int CmdSplit(const std::string &manifest, const std::string &descriptor,
             const SplitFractions &fractions, std::uint64_t seed, std::string out) {
  if (!fs::exists(manifest)) throw DataError("manifest '" + manifest + "' not found");
  const auto records = ReadManifest(manifest);
  ValidateRecords(records);
  const SplitAssignment a = MakeSplits(records, descriptor, fractions, seed);
  const fs::path path = out.empty() ? fs::path(manifest).parent_path() / "split.json" : fs::path(out);
  WriteSplitFile(a, path);
  std::size_t counts[3] = {0, 0, 0};
  for (const auto &[id, s] : a) ++counts[static_cast<int>(s)];
  std::printf("%s train=%zu dev=%zu test=%zu\n", path.string().c_str(), counts[0], counts[1],
              counts[2]);
  return kExitOk;
}

int CmdEval(const std::string &checkpoint, const std::string &manifest, const std::string &split,
            const std::string &split_name, std::string out) {
  const Checkpoint c = LoadCheckpoint(checkpoint);
  const EvalResult r = EvaluateCheckpoint(c, manifest, split, ParseSplit(split_name));
  const fs::path dir = out.empty() ? fs::path(checkpoint).parent_path() : fs::path(out);
  WriteEval(r, dir);
  std::printf("%s MSE=%.6f PCC=%s n=%zu\n", split_name.c_str(), r.mse,
              FormatOptional(r.pcc).c_str(), r.n);
  return kExitOk;
}

int CmdCompare(const std::vector<std::string> &a_files, const std::vector<std::string> &b_files,
               const std::string &manifest, const std::string &split,
               const std::string &split_name) {
  const Split which = ParseSplit(split_name);
  const auto a = LoadComparable(a_files, manifest, split, which);
  const auto b = LoadComparable(b_files, manifest, split, which);
  for (const auto *group : {&a, &b})
    for (const EvalResult &r : *group)
      if (r.descriptor != a.front().descriptor)
        throw AnalysisError("compare: results cover different descriptors");
  const TTestResult t = GroupComparison(a, b);
  std::printf("paired t-test on squared errors (%zu vs %zu runs, n=%d): t=%.6f p=%.6g dof=%d "
              "mean_diff=%.6f\n",
              a.size(), b.size(), t.dof + 1, t.t_statistic, t.p_value, t.dof, t.mean_difference);
  if (t.significant_at_5pct)
    std::printf("verdict: %s has significantly lower MSE at 5%%\n",
                t.mean_difference < 0.0 ? "A" : "B");
  else
    std::printf("verdict: no significant difference at 5%%\n");
  return kExitOk;
}

int CmdAttnMap(const std::string &checkpoint, const std::string &manifest,
               const std::string &split, const std::string &split_name, std::string out) {
  const Checkpoint c = LoadCheckpoint(checkpoint);
  if (!c.config.mode.UsesAsp())
    throw ConfigError("mode", "attention maps need an ASP mode, checkpoint uses " +
                                  ModeName(c.config.mode.kind));
  const LoadedData data = LoadData(manifest, split);
  const auto examples =
      LoadExamples(manifest, data.records, data.assignment, ParseSplit(split_name), c.config);
  std::vector<AttentionMap> maps;
  std::vector<int> ratings;
  for (const Example &e : examples) {
    maps.push_back(*Forward(e.input, c.config, c.params).attention);
    ratings.push_back(static_cast<int>(e.target));
  }
  const RatingGroupedAttention profile = AttentionProfile(maps, ratings, c.config.descriptor);
  const fs::path dir = out.empty() ? fs::path(checkpoint).parent_path() : fs::path(out);
  std::span<const RatingGroupedAttention> one(&profile, 1);
  WriteText(dir / "attention.csv", AttentionCsv(one));
  WriteText(dir / "attention.svg", AttentionSvg(one));
  std::printf("%s\n%s\n", (dir / "attention.csv").string().c_str(),
              (dir / "attention.svg").string().c_str());
  for (const RatingProfile &g : profile.groups)
    std::printf("rating %d: n=%zu%s\n", g.rating, g.count, g.degenerate ? " (constant)" : "");
  return kExitOk;
}

int CmdReport(const std::vector<std::string> &files, const std::vector<std::string> &group_tests,
              const std::string &format, const std::string &out) {
  std::vector<EvalResult> results;
  for (const std::string &f : files)
    for (EvalResult &r : ReadResults(f)) results.push_back(std::move(r));
  if (results.empty()) throw DataError("report: no results in the given files");

  std::vector<LabeledTest> tests;
  for (const std::string &spec : group_tests) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
      throw ConfigError("group-test", "expected A:B ranges such as 3-6:7-10, got '" + spec + "'");
    const auto [a_lo, a_hi] = ParseExpRange(spec.substr(0, colon));
    const auto [b_lo, b_hi] = ParseExpRange(spec.substr(colon + 1));
    for (auto d : kDescriptors) {
      std::vector<EvalResult> a, b;
      for (const EvalResult &r : results) {
        if (r.descriptor != d) continue;
        if (r.labels.exp_id >= a_lo && r.labels.exp_id <= a_hi) a.push_back(r);
        if (r.labels.exp_id >= b_lo && r.labels.exp_id <= b_hi) b.push_back(r);
      }
      if (a.empty() || b.empty()) continue;
      tests.push_back({std::string(d) + ": Exp. " + spec.substr(0, colon) + " vs Exp. " +
                           spec.substr(colon + 1),
                       GroupComparison(a, b)});
    }
  }
  ReportFormat f;
  if (format == "text") f = ReportFormat::kText;
  else if (format == "csv") f = ReportFormat::kCsv;
  else throw ConfigError("format", "expected text or csv, got '" + format + "'");
  const std::string text = RenderReport(results, tests, f);
  if (out.empty()) std::fputs(text.c_str(), stdout);
  else WriteText(out, text);
  return kExitOk;
}

int CmdGrid(const ExperimentConfig &base, const std::string &manifest, const std::string &split,
            const std::vector<std::string> &experiments, std::size_t jobs, std::size_t log_every,
            std::string out) {
  std::vector<int> ids;
  for (const std::string &e : experiments) {
    const auto [lo, hi] = ParseExpRange(e);
    for (int i = lo; i <= hi; ++i) ids.push_back(i);
  }
  std::vector<ExperimentConfig> configs;
  for (int id : ids) configs.push_back(GridConfig(base, id));
  for (const auto &c : configs) c.Validate();
  LoadData(manifest, split);  // fail early on bad inputs

  const fs::path root = out.empty() ? OutputRoot() / "grid" / base.descriptor : fs::path(out);
  std::vector<std::optional<EvalResult>> results(ids.size());
  std::vector<std::exception_ptr> errors(ids.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < ids.size(); i = next++) {
      try {
        char name[16];
        std::snprintf(name, sizeof(name), "exp%02d", ids[i]);
        const TrainedRun run = TrainToDirectory(configs[i], manifest, split, root / name,
                                                log_every, std::string(name) + ": ");
        EvalResult r = EvaluateCheckpoint(run.checkpoint, manifest, split, Split::kTest);
        WriteEval(r, run.dir);
        results[i] = std::move(r);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t j = 0; j < std::max<std::size_t>(1, std::min(jobs, ids.size())); ++j)
    pool.emplace_back(worker);
  for (auto &t : pool) t.join();
  for (auto &e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<EvalResult> all;
  for (auto &r : results) all.push_back(std::move(*r));
  WriteResultsJson(all, root / "results.json");
  WriteText(root / "results.csv", ResultsCsv(all));
  WriteText(root / "table.txt", RenderTable(all, {}));
  std::printf("%s\n", (root / "table.txt").string().c_str());
  return kExitOk;
}

}  // namespace

EvalResult EvaluateCheckpoint(const Checkpoint &checkpoint, const fs::path &manifest_path,
                              const fs::path &split_path, Split split) {
  const LoadedData data = LoadData(manifest_path, split_path);
  const auto examples =
      LoadExamples(manifest_path, data.records, data.assignment, split, checkpoint.config);
  if (examples.empty())
    throw DataError(std::string(SplitName(split)) + " split has no rated utterances");
  return MakeEvalResult(checkpoint.config, UtteranceIds(examples), Targets(examples),
                        Predict(checkpoint.params, examples));
}

int RunCli(int argc, const char *const *argv) {
  CLI::App app{"asp-lab: attentive statistics pooling experiments on frozen speech embeddings",
               "asp_lab"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  app.set_version_flag("--version", "0.1.0");

  // synth
  SynthOptions synth;
  std::string synth_task = SynthTaskName(synth.task), synth_out;
  auto *s = app.add_subcommand("synth", "Write a synthetic planted-cue dataset");
  s->add_option("--task", synth_task, "temporal_cue | layer_cue | null");
  s->add_option("--n", synth.n_utterances, "Number of utterances (>= 30)");
  s->add_option("--layers", synth.layers, "Layers L");
  s->add_option("--frames-min", synth.frames_min, "Shortest utterance in frames");
  s->add_option("--frames-max", synth.frames_max, "Longest utterance in frames");
  s->add_option("--dim", synth.dim, "Feature dim D");
  s->add_option("--noise", synth.noise_sigma, "Gaussian noise sigma");
  s->add_option("--seed", synth.seed, "Generator seed");
  s->add_option("--speakers", synth.speakers, "Speaker count; 0 picks max(3, n/10)");
  s->add_option("--cue-layer", synth.cue_layer, "Planted layer for layer_cue; 0 draws one");
  s->add_option("--descriptor", synth.descriptor, "Descriptor the ratings are stored under");
  s->add_option("--out", synth_out, "Output directory (default $ASP_LAB_OUT/synth/<task>-seed<seed>)");

  // split
  std::string split_manifest, split_descriptor = "intelligibility", split_out;
  SplitFractions fractions;
  std::uint64_t split_seed = 0;
  auto *sp = app.add_subcommand("split", "Speaker-exclusive train/dev/test split");
  sp->add_option("--manifest", split_manifest, "Manifest JSONL")->required();
  sp->add_option("--descriptor", split_descriptor, "Only utterances rated for it are split");
  sp->add_option("--train", fractions.train, "Train fraction");
  sp->add_option("--dev", fractions.dev, "Dev fraction");
  sp->add_option("--test", fractions.test, "Test fraction");
  sp->add_option("--seed", split_seed, "Split seed");
  sp->add_option("--out", split_out, "Split file (default split.json next to the manifest)");

  // train
  ConfigFlags train_flags;
  std::string train_manifest, train_split, train_out;
  std::size_t train_log = 0;
  auto *tr = app.add_subcommand("train", "Train one configuration");
  tr->add_option("--manifest", train_manifest, "Manifest JSONL")->required();
  tr->add_option("--split", train_split, "Split file")->required();
  AddConfigFlags(tr, &train_flags, true);
  tr->add_option("--log-every", train_log, "Print progress every N epochs; 0 is silent");
  tr->add_option("--out", train_out, "Run directory (default $ASP_LAB_OUT/runs/<config hash>)");

  // eval
  std::string ev_ckpt, ev_manifest, ev_split, ev_which = "test", ev_out;
  auto *ev = app.add_subcommand("eval", "Evaluate a checkpoint on one split");
  ev->add_option("--checkpoint", ev_ckpt, "Checkpoint (.aspc)")->required();
  ev->add_option("--manifest", ev_manifest, "Manifest JSONL")->required();
  ev->add_option("--split", ev_split, "Split file")->required();
  ev->add_option("--on", ev_which, "train | dev | test");
  ev->add_option("--out", ev_out, "Output directory (default: the checkpoint's)");

  // compare
  std::vector<std::string> cmp_a, cmp_b;
  std::string cmp_manifest, cmp_split, cmp_which = "test";
  auto *cmp = app.add_subcommand(
      "compare", "Paired t-test on per-sample squared errors; several files per side "
                 "compare group means");
  cmp->add_option("--a", cmp_a, "Results JSON or checkpoints of group A")->required();
  cmp->add_option("--b", cmp_b, "Results JSON or checkpoints of group B")->required();
  cmp->add_option("--manifest", cmp_manifest, "Manifest, needed for checkpoints");
  cmp->add_option("--split", cmp_split, "Split file, needed for checkpoints");
  cmp->add_option("--on", cmp_which, "Split evaluated for checkpoints");

  // attn-map
  std::string at_ckpt, at_manifest, at_split, at_which = "test", at_out;
  auto *at = app.add_subcommand("attn-map", "Attention profiles grouped by rating (CSV + SVG)");
  at->add_option("--checkpoint", at_ckpt, "Checkpoint of an ASP mode")->required();
  at->add_option("--manifest", at_manifest, "Manifest JSONL")->required();
  at->add_option("--split", at_split, "Split file")->required();
  at->add_option("--on", at_which, "train | dev | test");
  at->add_option("--out", at_out, "Output directory (default: the checkpoint's)");

  // report
  std::vector<std::string> rep_files, rep_tests;
  std::string rep_format = "text", rep_out;
  auto *rep = app.add_subcommand("report", "Render result files as a results table");
  rep->add_option("results", rep_files, "Result JSON files")->required();
  rep->add_option("--group-test", rep_tests,
                  "Group t-test per descriptor between experiment ranges, e.g. 3-6:7-10");
  rep->add_option("--format", rep_format, "text | csv");
  rep->add_option("--out", rep_out, "Output file (default stdout)");

  // grid
  ConfigFlags grid_flags;
  std::string grid_manifest, grid_split, grid_out;
  std::vector<std::string> grid_exps = {"1-14"};
  std::size_t grid_jobs = 1, grid_log = 0;
  auto *gr = app.add_subcommand("grid", "Train and evaluate the numbered experiment grid");
  gr->add_option("--manifest", grid_manifest, "Manifest JSONL")->required();
  gr->add_option("--split", grid_split, "Split file")->required();
  AddConfigFlags(gr, &grid_flags, false);
  gr->add_option("--experiments", grid_exps, "Experiment ids or ranges (1-14)")->delimiter(',');
  gr->add_option("--jobs", grid_jobs, "Configurations trained in parallel");
  gr->add_option("--log-every", grid_log, "Print progress every N epochs; 0 is silent");
  gr->add_option("--out", grid_out, "Output directory (default $ASP_LAB_OUT/grid/<descriptor>)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (app.got_subcommand(s)) {
      synth.task = ParseSynthTask(synth_task);
      return CmdSynth(synth, synth_out);
    }
    if (app.got_subcommand(sp))
      return CmdSplit(split_manifest, split_descriptor, fractions, split_seed, split_out);
    if (app.got_subcommand(tr)) {
      const ExperimentConfig config = BuildConfig(train_flags);
      const fs::path dir = train_out.empty() ? OutputRoot() / "runs" / config.Hash()
                                             : fs::path(train_out);
      TrainToDirectory(config, train_manifest, train_split, dir, train_log, "");
      std::printf("%s\n", (dir / "checkpoint.aspc").string().c_str());
      return kExitOk;
    }
    if (app.got_subcommand(ev)) return CmdEval(ev_ckpt, ev_manifest, ev_split, ev_which, ev_out);
    if (app.got_subcommand(cmp))
      return CmdCompare(cmp_a, cmp_b, cmp_manifest, cmp_split, cmp_which);
    if (app.got_subcommand(at)) return CmdAttnMap(at_ckpt, at_manifest, at_split, at_which, at_out);
    if (app.got_subcommand(rep)) return CmdReport(rep_files, rep_tests, rep_format, rep_out);
    if (app.got_subcommand(gr))
      return CmdGrid(BuildConfig(grid_flags), grid_manifest, grid_split, grid_exps, grid_jobs,
                     grid_log, grid_out);
  } catch (const ConfigError &e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const DataError &e) {
    std::fprintf(stderr, "data error: %s\n", e.what());
    return kExitData;
  } catch (const ShapeError &e) {
    std::fprintf(stderr, "data error: %s\n", e.what());
    return kExitData;
  } catch (const AnalysisError &e) {
    std::fprintf(stderr, "analysis error: %s\n", e.what());
    return kExitAnalysis;
  } catch (const fs::filesystem_error &e) {
    std::fprintf(stderr, "data error: %s\n", e.what());
    return kExitData;
  } catch (const std::exception &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return kExitConfig;
}

int RunCli(const std::vector<std::string> &args) {
  std::vector<const char *> argv;
  for (const std::string &a : args) argv.push_back(a.c_str());
  return RunCli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace asplab
