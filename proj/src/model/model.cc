// model/model.cc

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

#include "asplab/model/model.h"

#include <cmath>

#include "asplab/error.h"

namespace asplab {

namespace {

template <typename P, typename Emit>
void VisitNamed(P &p, Emit emit) {
  if (p.asp) {
    emit("asp.w1", p.asp->w1);
    emit("asp.b1", p.asp->b1);
    emit("asp.w2", p.asp->w2);
    emit("asp.b2", p.asp->b2);
  }
  for (std::size_t i = 0; i < p.head.size(); ++i) {
    emit("head." + std::to_string(i) + ".weight", p.head[i].weight);
    emit("head." + std::to_string(i) + ".bias", p.head[i].bias);
  }
}

}  // namespace

std::vector<ModelParams::Ref> ModelParams::Named() {
  std::vector<Ref> out;
  VisitNamed(*this, [&](std::string name, Tensor &t) { out.push_back({std::move(name), &t}); });
  return out;
}

std::vector<std::pair<std::string, const Tensor *>> ModelParams::Named() const {
  std::vector<std::pair<std::string, const Tensor *>> out;
  VisitNamed(*this, [&](std::string name, const Tensor &t) { out.emplace_back(std::move(name), &t); });
  return out;
}

void ValidateModel(const ModelParams &params, const ExperimentConfig &config) {
  const bool asp = config.mode.UsesAsp();
  if (asp != params.asp.has_value())
    throw ShapeError(asp ? "model: ASP mode but no attention parameters"
                         : "model: baseline mode but attention parameters present");
  if (asp) {
    params.asp->Validate();
    if (params.asp->dim != params.input_dim)
      throw ShapeError("model: attention dim " + std::to_string(params.asp->dim) +
                       " != input dim " + std::to_string(params.input_dim));
    if (params.asp->heads != config.heads)
      throw ShapeError("model: attention width " + std::to_string(params.asp->heads) +
                       " != configured heads " + std::to_string(config.heads));
  }
  if (params.head.size() != config.hidden_sizes.size() + 1)
    throw ShapeError("model: head depth does not match hidden_sizes");
  std::size_t width = PooledWidth(config.mode, params.input_dim);
  for (std::size_t i = 0; i < params.head.size(); ++i) {
    const DenseLayer &layer = params.head[i];
    const std::size_t out = i < config.hidden_sizes.size() ? config.hidden_sizes[i] : 1;
    if (layer.weight.rank() != 2 || layer.weight.rows() != out || layer.weight.cols() != width)
      throw ShapeError("model: head." + std::to_string(i) + ".weight has shape " +
                       ShapeString(layer.weight.shape()) + ", expected " +
                       ShapeString({out, width}));
    if (layer.bias.rank() != 2 || layer.bias.rows() != 1 || layer.bias.cols() != out)
      throw ShapeError("model: head." + std::to_string(i) + ".bias has wrong shape");
    width = out;
  }
}

ModelParams InitModel(const ExperimentConfig &config, std::size_t input_dim, Rng &rng) {
  ModelParams p;
  p.input_dim = input_dim;
  if (config.mode.UsesAsp()) {
    p.asp = InitAspParams(input_dim, config.heads, config.global_context, rng);
    p.asp->eps_var = config.eps_var;
  }
  std::size_t in = PooledWidth(config.mode, input_dim);
  std::vector<std::size_t> widths = config.hidden_sizes;
  widths.push_back(1);
  for (std::size_t out : widths) {
    const double bound = std::sqrt(1.0 / static_cast<double>(in));
    DenseLayer layer{Tensor::Matrix(out, in), Tensor::Matrix(1, out)};
    for (double &v : layer.weight.data()) v = rng.Uniform(-bound, bound);
    for (double &v : layer.bias.data()) v = rng.Uniform(-bound, bound);
    p.head.push_back(std::move(layer));
    in = out;
  }
  return p;
}

ModelVars BindModel(Graph &g, const ModelParams &params, bool requires_grad) {
  ModelVars v;
  if (params.asp) {
    v.asp = AspVars{g.Leaf(params.asp->w1, requires_grad), g.Leaf(params.asp->b1, requires_grad),
                    g.Leaf(params.asp->w2, requires_grad), g.Leaf(params.asp->b2, requires_grad)};
    v.all.insert(v.all.end(), {v.asp->w1, v.asp->b1, v.asp->w2, v.asp->b2});
  }
  for (const DenseLayer &layer : params.head) {
    Var w = g.Leaf(layer.weight, requires_grad);
    Var b = g.Leaf(layer.bias, requires_grad);
    v.head.emplace_back(w, b);
    v.all.push_back(w);
    v.all.push_back(b);
  }
  return v;
}

BatchOutput ForwardBatch(Graph &g, const ModelVars &vars, const ModelParams &params,
                         std::span<const PoolInput *const> inputs) {
  if (inputs.empty()) throw ShapeError("forward: empty batch");
  BatchOutput out;
  Var features;
  if (vars.asp) {
    std::vector<Var> rows;
    rows.reserve(inputs.size());
    for (const PoolInput *in : inputs) {
      if (!in->attends) throw ShapeError("forward: ASP model given a baseline input");
      AspNodes nodes = AspOnGraph(g, g.Leaf(in->values), *vars.asp, *params.asp);
      rows.push_back(nodes.z);
      out.alpha.push_back(nodes.alpha);
    }
    features = g.Concat(rows, Axis::kRows);
  } else {
    const std::size_t width = inputs.front()->values.cols();
    Tensor stacked = Tensor::Matrix(inputs.size(), width);
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      const Tensor &v = inputs[i]->values;
      if (inputs[i]->attends || v.rows() != 1 || v.cols() != width)
        throw ShapeError("forward: baseline model expects 1 x d pooled features");
      std::copy(v.data().begin(), v.data().end(), stacked.row(i).begin());
    }
    features = g.Leaf(std::move(stacked));
  }
  Var h = features;
  for (std::size_t i = 0; i < vars.head.size(); ++i) {
    h = g.Linear(h, vars.head[i].first, vars.head[i].second);
    if (i + 1 < vars.head.size()) h = g.Relu(h);
  }
  out.predictions = h;
  return out;
}

Prediction Forward(const PoolInput &input, const ExperimentConfig &config,
                   const ModelParams &params) {
  ValidateModel(params, config);
  if (input.values.cols() != params.input_dim)
    throw ShapeError("forward: input width " + std::to_string(input.values.cols()) +
                     " != model input dim " + std::to_string(params.input_dim));
  Graph g;
  ModelVars vars = BindModel(g, params, false);
  const PoolInput *ptr = &input;
  BatchOutput out = ForwardBatch(g, vars, params, std::span<const PoolInput *const>(&ptr, 1));
  Prediction p;
  p.value = g.value(out.predictions)[0];
  if (!out.alpha.empty())
    p.attention = AttentionMap{g.value(out.alpha[0]).Transposed(), input.axis, input.utterance_id};
  return p;
}

Prediction Forward(const EmbeddingTensor &e, const ExperimentConfig &config,
                   const ModelParams &params) {
  if (e.dim != params.input_dim)
    throw ShapeError("forward: embedding dim " + std::to_string(e.dim) +
                     " != model input dim " + std::to_string(params.input_dim));
  return Forward(PreparePoolInput(e, config.mode), config, params);
}

}  // namespace asplab
