// asplab/eval/results.h

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

#ifndef ASPLAB_EVAL_RESULTS_H_
#define ASPLAB_EVAL_RESULTS_H_

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "asplab/eval/ttest.h"
#include "asplab/model/config.h"
#include "json.hpp"

namespace asplab {

// Row labels of the results table. Experiments follow the fixed grid
//   1      mean/mean baseline           2      layer-l/mean baseline
//   3-6    ASP over layers, heads 1, 5, 64, 128
//   7-10   ASP over time on the layer mean, heads 1, 5, 64, 128
//   11-14  ASP over time on layer l, heads 1, 5, 64, 128
// and exp_id is 0 for configurations outside it.
struct ExperimentLabels {
  int exp_id = 0;
  std::string layer_mode;  // "Mean", "ASP" or the layer number
  std::string time_mode;   // "Mean" or "ASP"
  int heads = 0;           // 0 when the mode has no attention
};

ExperimentLabels LabelsFor(const ExperimentConfig &config);

struct EvalResult {
  std::string descriptor;
  std::string config_id;
  ExperimentLabels labels;
  std::vector<std::string> utterance_ids;
  std::vector<double> targets;
  std::vector<double> predictions;
  std::vector<double> squared_errors;  // aligned to utterance_ids
  double mse = 0.0;
  std::optional<double> pcc;  // absent when predictions are constant
  std::size_t n = 0;
};

EvalResult MakeEvalResult(const ExperimentConfig &config, std::vector<std::string> utterance_ids,
                          std::vector<double> targets, std::vector<double> predictions);

// Per-sample squared errors averaged over each group's runs, then paired.
// Throws AnalysisError for empty groups, runs without per-sample errors or
// runs evaluated on different utterances (or in a different order).
TTestResult GroupComparison(const std::vector<EvalResult> &group_a,
                            const std::vector<EvalResult> &group_b);

nlohmann::json ToJson(const EvalResult &r);
EvalResult EvalResultFromJson(const nlohmann::json &j);

// A results file holds one EvalResult object or an array of them.
std::vector<EvalResult> ReadResults(const std::filesystem::path &path);
void WriteResultsJson(const std::vector<EvalResult> &results, const std::filesystem::path &path);

// exp_id,layer_mode,time_mode,heads,descriptor,pcc,mse,n
std::string ResultsCsv(std::span<const EvalResult> results);

}  // namespace asplab

#endif  // ASPLAB_EVAL_RESULTS_H_
