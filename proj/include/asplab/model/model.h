// asplab/model/model.h

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

#ifndef ASPLAB_MODEL_MODEL_H_
#define ASPLAB_MODEL_MODEL_H_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "asplab/data/embedding.h"
#include "asplab/model/config.h"
#include "asplab/pooling/asp.h"
#include "asplab/pooling/pool.h"
#include "asplab/rng.h"
#include "asplab/tensor/graph.h"

namespace asplab {

// weight: out x in, bias: 1 x out.
struct DenseLayer {
  Tensor weight;
  Tensor bias;
};

// Pooling parameters (ASP modes only) plus the feed-forward regression head:
// ReLU hidden layers and one linear output neuron.
struct ModelParams {
  std::size_t input_dim = 0;  // embedding feature dim d
  std::optional<AspParams> asp;
  std::vector<DenseLayer> head;

  struct Ref {
    std::string name;
    Tensor *value;
  };
  // Every trainable tensor with a stable name, in a fixed order.
  std::vector<Ref> Named();
  std::vector<std::pair<std::string, const Tensor *>> Named() const;
};

// Checks that `params` fits `config` (head input width, output width 1, ASP
// presence and dims). Throws ShapeError.
void ValidateModel(const ModelParams &params, const ExperimentConfig &config);

ModelParams InitModel(const ExperimentConfig &config, std::size_t input_dim, Rng &rng);

// Graph leaves bound to one ModelParams instance, in Named() order.
struct ModelVars {
  std::optional<AspVars> asp;
  std::vector<std::pair<Var, Var>> head;
  std::vector<Var> all;
};

ModelVars BindModel(Graph &graph, const ModelParams &params, bool requires_grad);

struct BatchOutput {
  Var predictions;         // B x 1
  std::vector<Var> alpha;  // per sample, N x d; empty for baselines
};

// Pools each input and runs the head on the stacked features.
BatchOutput ForwardBatch(Graph &graph, const ModelVars &vars, const ModelParams &params,
                         std::span<const PoolInput *const> inputs);

struct Prediction {
  double value = 0.0;
  std::optional<AttentionMap> attention;
};

Prediction Forward(const PoolInput &input, const ExperimentConfig &config,
                   const ModelParams &params);
Prediction Forward(const EmbeddingTensor &e, const ExperimentConfig &config,
                   const ModelParams &params);

}  // namespace asplab

#endif  // ASPLAB_MODEL_MODEL_H_
