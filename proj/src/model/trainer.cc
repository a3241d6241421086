// model/trainer.cc

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

#include "asplab/model/trainer.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "asplab/error.h"
#include "asplab/eval/metrics.h"
#include "asplab/model/adam.h"

namespace asplab {

namespace {

constexpr std::size_t kPredictBatch = 256;

}  // namespace

std::vector<Example> LoadExamples(const std::filesystem::path &manifest_path,
                                  const std::vector<UtteranceRecord> &records,
                                  const SplitAssignment &assignment, Split split,
                                  const ExperimentConfig &config) {
  std::vector<Example> out;
  for (const UtteranceRecord &r : SelectSplit(records, assignment, split)) {
    if (!r.HasRating(config.descriptor)) continue;
    const EmbeddingTensor e = ReadEmbedding(ResolveEmbeddingPath(manifest_path, r));
    Example ex;
    ex.input = PreparePoolInput(e, config.mode);
    ex.input.utterance_id = r.utterance_id;
    ex.target = static_cast<double>(r.ratings.at(config.descriptor));
    out.push_back(std::move(ex));
  }
  return out;
}

bool EarlyStopper::Update(std::size_t epoch, double dev_mse) {
  last_epoch_ = epoch;
  if (best_epoch_ == 0 || dev_mse < best_) {
    best_ = dev_mse;
    best_epoch_ = epoch;
    return true;
  }
  return false;
}

std::vector<double> Predict(const ModelParams &params, std::span<const Example> examples) {
  std::vector<double> out;
  out.reserve(examples.size());
  for (std::size_t start = 0; start < examples.size(); start += kPredictBatch) {
    const std::size_t end = std::min(examples.size(), start + kPredictBatch);
    std::vector<const PoolInput *> inputs;
    for (std::size_t i = start; i < end; ++i) inputs.push_back(&examples[i].input);
    Graph g;
    const ModelVars vars = BindModel(g, params, false);
    const BatchOutput batch = ForwardBatch(g, vars, params, inputs);
    const Tensor &p = g.value(batch.predictions);
    for (std::size_t i = 0; i < p.rows(); ++i) out.push_back(p.at(i, 0));
  }
  return out;
}

std::vector<double> Targets(std::span<const Example> examples) {
  std::vector<double> t;
  for (const Example &e : examples) t.push_back(e.target);
  return t;
}

std::vector<std::string> UtteranceIds(std::span<const Example> examples) {
  std::vector<std::string> ids;
  for (const Example &e : examples) ids.push_back(e.input.utterance_id);
  return ids;
}

TrainResult Train(const ExperimentConfig &config, std::span<const Example> train,
                  std::span<const Example> dev, const EpochCallback &on_epoch) {
  config.Validate();
  if (train.empty()) throw DataError("training split is empty");
  if (dev.empty()) throw DataError("dev split is empty");
  const std::size_t dim = train.front().input.values.cols();
  for (auto set : {train, dev})
    for (const Example &e : set)
      if (e.input.values.cols() != dim || e.input.attends != config.mode.UsesAsp())
        throw DataError("example '" + e.input.utterance_id +
                        "' does not match the configured mode and feature dim");

  Rng init = Rng::Substream(config.seed, "init");
  Rng shuffle = Rng::Substream(config.seed, "shuffle");
  ModelParams params = InitModel(config, dim, init);

  std::vector<AdamParam> named;
  for (const auto &ref : params.Named()) named.push_back({ref.name, ref.value});
  AdamState state;
  const AdamOptions adam{config.lr, config.beta1, config.beta2, config.adam_eps};
  const std::vector<double> dev_targets = Targets(dev);

  TrainResult result;
  result.params = params;
  EarlyStopper stopper(config.patience);
  std::vector<std::size_t> order(train.size());
  std::iota(order.begin(), order.end(), 0);

  for (std::size_t epoch = 1; epoch <= config.max_epochs; ++epoch) {
    shuffle.Shuffle(&order);
    double sse = 0.0;
    std::size_t batch_index = 0;
    for (std::size_t start = 0; start < order.size(); start += config.batch_size, ++batch_index) {
      const std::size_t end = std::min(order.size(), start + config.batch_size);
      std::vector<const PoolInput *> inputs;
      Tensor targets = Tensor::Matrix(end - start, 1);
      for (std::size_t i = start; i < end; ++i) {
        inputs.push_back(&train[order[i]].input);
        targets.at(i - start, 0) = train[order[i]].target;
      }
      Graph g;
      const ModelVars vars = BindModel(g, params, true);
      const BatchOutput out = ForwardBatch(g, vars, params, inputs);
      const Var diff = g.Sub(out.predictions, g.Leaf(std::move(targets)));
      const Var loss = g.Mean(g.Square(diff), Axis::kAll);
      const double loss_value = g.value(loss)[0];
      if (!std::isfinite(loss_value))
        throw AnalysisError("non-finite loss at epoch " + std::to_string(epoch) + ", batch " +
                            std::to_string(batch_index));
      sse += loss_value * static_cast<double>(end - start);
      g.Backward(loss);
      std::vector<Tensor> grads;
      grads.reserve(vars.all.size());
      for (Var v : vars.all) grads.push_back(g.grad(v));
      try {
        AdamStep(named, grads, &state, adam);
      } catch (const AnalysisError &e) {
        throw AnalysisError(std::string(e.what()) + " (epoch " + std::to_string(epoch) +
                            ", batch " + std::to_string(batch_index) + ")");
      }
    }

    EpochRecord rec;
    rec.epoch = epoch;
    rec.train_mse = sse / static_cast<double>(train.size());
    const std::vector<double> dev_pred = Predict(params, dev);
    rec.dev_mse = Mse(dev_pred, dev_targets);
    if (!std::isfinite(rec.dev_mse))
      throw AnalysisError("non-finite dev MSE at epoch " + std::to_string(epoch));
    try {
      rec.dev_pcc = Pcc(dev_targets, dev_pred);
    } catch (const AnalysisError &) {
      rec.dev_pcc.reset();
    }
    result.history.push_back(rec);
    if (stopper.Update(epoch, rec.dev_mse)) result.params = params;
    if (on_epoch) on_epoch(rec);
    if (stopper.ShouldStop()) break;
  }
  result.best_dev_mse = stopper.best();
  result.best_epoch = stopper.best_epoch();
  result.rng_state = shuffle.State();
  return result;
}

nlohmann::json HistoryJson(const std::vector<EpochRecord> &history) {
  nlohmann::json j = nlohmann::json::array();
  for (const EpochRecord &r : history) {
    nlohmann::json e;
    e["epoch"] = r.epoch;
    e["train_mse"] = r.train_mse;
    e["dev_mse"] = r.dev_mse;
    e["dev_pcc"] = r.dev_pcc ? nlohmann::json(*r.dev_pcc) : nlohmann::json(nullptr);
    j.push_back(e);
  }
  return j;
}

}  // namespace asplab
