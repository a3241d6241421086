// eval/results.cc

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

#include "asplab/eval/results.h"

#include <cstdio>
#include <fstream>

#include "asplab/error.h"
#include "asplab/eval/metrics.h"

namespace asplab {

using nlohmann::json;

ExperimentLabels LabelsFor(const ExperimentConfig &config) {
  using K = AggregationMode::Kind;
  static constexpr int kHeadGrid[] = {1, 5, 64, 128};
  auto slot = [&](int base) {
    for (int i = 0; i < 4; ++i)
      if (static_cast<std::size_t>(kHeadGrid[i]) == config.heads) return base + i;
    return 0;
  };
  ExperimentLabels l;
  const std::string layer = std::to_string(config.mode.layer);
  switch (config.mode.kind) {
    case K::kMeanMeanBaseline:
      l = {1, "Mean", "Mean", 0};
      break;
    case K::kSingleLayerMeanBaseline:
      l = {2, layer, "Mean", 0};
      break;
    case K::kLayerWiseAsp:
      l = {slot(3), "ASP", "Mean", static_cast<int>(config.heads)};
      break;
    case K::kTimeWiseAspLayerMean:
      l = {slot(7), "Mean", "ASP", static_cast<int>(config.heads)};
      break;
    case K::kTimeWiseAspSingleLayer:
      l = {slot(11), layer, "ASP", static_cast<int>(config.heads)};
      break;
  }
  return l;
}

EvalResult MakeEvalResult(const ExperimentConfig &config, std::vector<std::string> ids,
                          std::vector<double> targets, std::vector<double> predictions) {
  if (ids.size() != targets.size())
    throw AnalysisError("eval: utterance ids and targets differ in length");
  EvalResult r;
  r.descriptor = config.descriptor;
  r.config_id = config.Hash();
  r.labels = LabelsFor(config);
  r.squared_errors = SquaredErrors(predictions, targets);
  r.mse = Mse(predictions, targets);
  try {
    r.pcc = Pcc(targets, predictions);
  } catch (const AnalysisError &) {
    r.pcc.reset();
  }
  r.n = ids.size();
  r.utterance_ids = std::move(ids);
  r.targets = std::move(targets);
  r.predictions = std::move(predictions);
  return r;
}

TTestResult GroupComparison(const std::vector<EvalResult> &group_a,
                            const std::vector<EvalResult> &group_b) {
  if (group_a.empty() || group_b.empty())
    throw AnalysisError("group comparison: both groups must be non-empty");
  const EvalResult &ref = group_a.front();
  auto check = [&](const EvalResult &r) {
    if (r.squared_errors.empty())
      throw AnalysisError("group comparison: result '" + r.config_id +
                          "' carries no per-sample errors");
    if (r.utterance_ids != ref.utterance_ids || r.squared_errors.size() != ref.utterance_ids.size())
      throw AnalysisError("group comparison: results are not aligned on the same test samples");
  };
  auto mean_errors = [&](const std::vector<EvalResult> &group) {
    std::vector<double> m(ref.utterance_ids.size(), 0.0);
    for (const EvalResult &r : group) {
      check(r);
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += r.squared_errors[i];
    }
    for (double &v : m) v /= static_cast<double>(group.size());
    return m;
  };
  const std::vector<double> a = mean_errors(group_a);
  const std::vector<double> b = mean_errors(group_b);
  return PairedTTest(a, b);
}

json ToJson(const EvalResult &r) {
  json j;
  j["descriptor"] = r.descriptor;
  j["config_id"] = r.config_id;
  j["exp_id"] = r.labels.exp_id;
  j["layer_mode"] = r.labels.layer_mode;
  j["time_mode"] = r.labels.time_mode;
  j["heads"] = r.labels.heads;
  j["n"] = r.n;
  j["mse"] = r.mse;
  j["pcc"] = r.pcc ? json(*r.pcc) : json(nullptr);
  j["utterance_ids"] = r.utterance_ids;
  j["targets"] = r.targets;
  j["predictions"] = r.predictions;
  j["squared_errors"] = r.squared_errors;
  return j;
}

EvalResult EvalResultFromJson(const json &j) {
  try {
    EvalResult r;
    r.descriptor = j.at("descriptor").get<std::string>();
    r.config_id = j.value("config_id", std::string());
    r.labels.exp_id = j.value("exp_id", 0);
    r.labels.layer_mode = j.value("layer_mode", std::string());
    r.labels.time_mode = j.value("time_mode", std::string());
    r.labels.heads = j.value("heads", 0);
    r.mse = j.at("mse").get<double>();
    if (j.contains("pcc") && !j["pcc"].is_null()) r.pcc = j["pcc"].get<double>();
    r.utterance_ids = j.value("utterance_ids", std::vector<std::string>());
    r.targets = j.value("targets", std::vector<double>());
    r.predictions = j.value("predictions", std::vector<double>());
    r.squared_errors = j.value("squared_errors", std::vector<double>());
    r.n = j.value("n", r.squared_errors.size());
    if (!r.squared_errors.empty() && r.squared_errors.size() != r.utterance_ids.size())
      throw DataError("squared_errors and utterance_ids differ in length");
    return r;
  } catch (const json::exception &e) {
    throw DataError(std::string("malformed result record: ") + e.what());
  }
}

std::vector<EvalResult> ReadResults(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open results file '" + path.string() + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception &e) {
    throw DataError(path.string() + ": " + e.what());
  }
  std::vector<EvalResult> out;
  if (j.is_array()) {
    for (const auto &item : j) out.push_back(EvalResultFromJson(item));
  } else {
    out.push_back(EvalResultFromJson(j));
  }
  return out;
}

void WriteResultsJson(const std::vector<EvalResult> &results, const std::filesystem::path &path) {
  json j = json::array();
  for (const auto &r : results) j.push_back(ToJson(r));
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  out << (results.size() == 1 ? j[0] : j).dump(1) << '\n';
}

std::string ResultsCsv(std::span<const EvalResult> results) {
  std::string out = "exp_id,layer_mode,time_mode,heads,descriptor,pcc,mse,n\n";
  char buf[256];
  for (const auto &r : results) {
    std::string pcc = "nan";
    if (r.pcc) {
      std::snprintf(buf, sizeof(buf), "%.6f", *r.pcc);
      pcc = buf;
    }
    std::snprintf(buf, sizeof(buf), "%d,%s,%s,%s,%s,%s,%.6f,%zu\n", r.labels.exp_id,
                  r.labels.layer_mode.c_str(), r.labels.time_mode.c_str(),
                  r.labels.heads ? std::to_string(r.labels.heads).c_str() : "-",
                  r.descriptor.c_str(), pcc.c_str(), r.mse, r.n);
    out += buf;
  }
  return out;
}

}  // namespace asplab
