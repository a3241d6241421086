// asplab/model/trainer.h

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

#ifndef ASPLAB_MODEL_TRAINER_H_
#define ASPLAB_MODEL_TRAINER_H_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "asplab/data/manifest.h"
#include "asplab/data/splits.h"
#include "asplab/model/config.h"
#include "asplab/model/model.h"
#include "json.hpp"

namespace asplab {

struct Example {
  PoolInput input;
  double target = 0.0;
};

// Loads every utterance of `split` that carries a rating for
// config.descriptor, in manifest order, and prepares its pooling input.
// Throws DataError for unreadable embeddings.
std::vector<Example> LoadExamples(const std::filesystem::path &manifest_path,
                                  const std::vector<UtteranceRecord> &records,
                                  const SplitAssignment &assignment, Split split,
                                  const ExperimentConfig &config);

// Tracks the best dev MSE; ShouldStop() once `patience` epochs have passed
// without a strict improvement.
class EarlyStopper {
 public:
  explicit EarlyStopper(std::size_t patience) : patience_(patience) {}

  // Returns true when `dev_mse` is a new best.
  bool Update(std::size_t epoch, double dev_mse);
  bool ShouldStop() const { return best_epoch_ > 0 && last_epoch_ - best_epoch_ >= patience_; }

  double best() const { return best_; }
  std::size_t best_epoch() const { return best_epoch_; }

 private:
  std::size_t patience_;
  double best_ = 0.0;
  std::size_t best_epoch_ = 0;  // 1-based, 0 before the first update
  std::size_t last_epoch_ = 0;
};

struct EpochRecord {
  std::size_t epoch = 0;  // 1-based
  double train_mse = 0.0;
  double dev_mse = 0.0;
  std::optional<double> dev_pcc;
};

struct TrainResult {
  ModelParams params;  // snapshot at the best dev epoch
  double best_dev_mse = 0.0;
  std::size_t best_epoch = 0;
  std::vector<EpochRecord> history;
  std::string rng_state;  // shuffle stream after the last epoch
};

// Called after every epoch; used for progress output.
using EpochCallback = std::function<void(const EpochRecord &)>;

// Adam on plain MSE over shuffled mini-batches (the last partial batch is
// kept), dev MSE after every epoch, early stopping on dev MSE. Parameters
// come from the "init" substream of config.seed and the batch order from
// "shuffle". Throws DataError on empty splits and AnalysisError (with epoch
// and batch) when the loss or a gradient stops being finite.
TrainResult Train(const ExperimentConfig &config, std::span<const Example> train,
                  std::span<const Example> dev, const EpochCallback &on_epoch = {});

// Batched forward pass without gradients.
std::vector<double> Predict(const ModelParams &params, std::span<const Example> examples);

std::vector<double> Targets(std::span<const Example> examples);
std::vector<std::string> UtteranceIds(std::span<const Example> examples);

nlohmann::json HistoryJson(const std::vector<EpochRecord> &history);

}  // namespace asplab

#endif  // ASPLAB_MODEL_TRAINER_H_
