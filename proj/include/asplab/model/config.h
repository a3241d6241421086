// asplab/model/config.h

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

#ifndef ASPLAB_MODEL_CONFIG_H_
#define ASPLAB_MODEL_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "asplab/pooling/aggregation.h"
#include "json.hpp"

namespace asplab {

struct ExperimentConfig {
  std::string descriptor = "intelligibility";
  AggregationMode mode;
  std::size_t heads = 5;
  bool global_context = true;
  double eps_var = 1e-8;

  double lr = 1e-5;
  std::size_t batch_size = 32;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double adam_eps = 1e-8;
  std::size_t patience = 15;
  std::size_t max_epochs = 200;
  std::uint64_t seed = 0;
  std::vector<std::size_t> hidden_sizes = {512, 256};

  // Throws ConfigError naming the first invalid field.
  void Validate() const;

  // Canonical form: keys sorted, every field present.
  nlohmann::json ToJson() const;
  // Fields absent from `j` keep their current values.
  void MergeJson(const nlohmann::json &j);
  static ExperimentConfig FromJson(const nlohmann::json &j);

  // 16 hex digits of FNV-1a over the canonical JSON dump.
  std::string Hash() const;
};

}  // namespace asplab

#endif  // ASPLAB_MODEL_CONFIG_H_
