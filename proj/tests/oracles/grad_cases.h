// tests/oracles/grad_cases.h

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

// Gradient-check cases shared by the unit tests and the acceptance checks.

#ifndef ASPLAB_TESTS_ORACLES_GRAD_CASES_H_
#define ASPLAB_TESTS_ORACLES_GRAD_CASES_H_

#include <functional>
#include <string>
#include <vector>

#include "asplab/model/config.h"
#include "asplab/model/model.h"
#include "asplab/pooling/pool.h"
#include "asplab/rng.h"
#include "asplab/tensor/grad_check.h"
#include "asplab/tensor/graph.h"
#include "unit/test_util.h"

namespace asplab {
namespace testing {

// Per-op gradient checks. Every op output is contracted with a fixed random
// tensor so that no coordinate's gradient vanishes by symmetry.
struct OpCase {
  std::string name;
  std::vector<Tensor> inputs;
  std::function<Var(Graph &, std::span<const Var>)> op;
};

inline Var Contract(Graph &g, Var y) {
  Rng rng(Fnv1a64("contract") ^ g.value(y).size());
  const Tensor &v = g.value(y);
  Tensor r(v.shape());
  for (double &x : r.data()) x = rng.Uniform(-1.0, 1.0);
  return g.Mean(g.Mul(y, g.Leaf(r)), Axis::kAll);
}

// Entries bounded away from zero so relu/clamp kinks are not straddled.
inline Tensor AwayFromZero(std::size_t r, std::size_t c, Rng &rng) {
  Tensor t = Tensor::Matrix(r, c);
  for (double &v : t.data()) v = (rng.Uniform() < 0.5 ? -1.0 : 1.0) * rng.Uniform(0.2, 1.5);
  return t;
}

inline std::vector<OpCase> OpCases() {
  Rng rng(2024);
  auto m = [&](std::size_t r, std::size_t c) { return RandomMatrix(r, c, rng); };
  Tensor positive = Tensor::Matrix(3, 4);
  for (double &v : positive.data()) v = rng.Uniform(0.3, 2.0);
  Tensor weights = Tensor::Matrix(5, 3);
  for (double &v : weights.data()) v = rng.Uniform(0.0, 1.0);
  return {
      {"linear", {m(3, 4), m(2, 4), m(1, 2)},
       [](Graph &g, std::span<const Var> p) { return g.Linear(p[0], p[1], p[2]); }},
      {"tanh", {m(3, 4)}, [](Graph &g, std::span<const Var> p) { return g.Tanh(p[0]); }},
      {"relu", {AwayFromZero(3, 4, rng)},
       [](Graph &g, std::span<const Var> p) { return g.Relu(p[0]); }},
      {"softmax_rows", {m(5, 3)},
       [](Graph &g, std::span<const Var> p) { return g.Softmax(p[0], Axis::kRows); }},
      {"softmax_cols", {m(3, 5)},
       [](Graph &g, std::span<const Var> p) { return g.Softmax(p[0], Axis::kCols); }},
      {"concat_rows", {m(2, 3), m(4, 3)},
       [](Graph &g, std::span<const Var> p) { return g.Concat(p, Axis::kRows); }},
      {"concat_cols", {m(3, 2), m(3, 1), m(3, 4)},
       [](Graph &g, std::span<const Var> p) { return g.Concat(p, Axis::kCols); }},
      {"mean_rows", {m(4, 3)},
       [](Graph &g, std::span<const Var> p) { return g.Mean(p[0], Axis::kRows); }},
      {"mean_cols", {m(4, 3)},
       [](Graph &g, std::span<const Var> p) { return g.Mean(p[0], Axis::kCols); }},
      {"mean_all", {m(4, 3)},
       [](Graph &g, std::span<const Var> p) { return g.Mean(p[0], Axis::kAll); }},
      {"weighted_sum", {weights, m(5, 3)},
       [](Graph &g, std::span<const Var> p) { return g.WeightedSum(p[0], p[1]); }},
      {"sqrt", {positive}, [](Graph &g, std::span<const Var> p) { return g.Sqrt(p[0]); }},
      {"square", {m(3, 4)}, [](Graph &g, std::span<const Var> p) { return g.Square(p[0]); }},
      {"add", {m(3, 4), m(3, 4)},
       [](Graph &g, std::span<const Var> p) { return g.Add(p[0], p[1]); }},
      {"sub", {m(3, 4), m(3, 4)},
       [](Graph &g, std::span<const Var> p) { return g.Sub(p[0], p[1]); }},
      {"mul", {m(3, 4), m(3, 4)},
       [](Graph &g, std::span<const Var> p) { return g.Mul(p[0], p[1]); }},
      {"scalar_mul", {m(3, 4)},
       [](Graph &g, std::span<const Var> p) { return g.ScalarMul(p[0], -1.7); }},
      {"clamp_min", {AwayFromZero(3, 4, rng)},
       [](Graph &g, std::span<const Var> p) { return g.ClampMin(p[0], 0.0); }},
      {"repeat_rows", {m(1, 4)},
       [](Graph &g, std::span<const Var> p) { return g.RepeatRows(p[0], 3); }},
  };
}

// The score bias of ASP has an exactly zero gradient (softmax ignores a shift
// shared by all positions), so its finite difference is roundoff only, about
// |f| eps / h. This step keeps that below the relative-error floor times the
// tolerance.
inline constexpr double kAspStep = 1e-4;

// End-to-end check of a tiny model: d=6, a_h=3, hidden [4], inputs of 4
// layers x 5 frames, MSE over a batch of three.
inline GradCheckReport CheckTinyModel(AggregationMode::Kind kind, std::uint64_t seed) {
  ExperimentConfig c;
  c.mode = {kind, 2};
  c.heads = 3;
  c.hidden_sizes = {4};
  Rng rng(seed);
  const ModelParams p = InitModel(c, 6, rng);
  std::vector<PoolInput> inputs;
  Tensor targets = Tensor::Matrix(3, 1);
  for (std::size_t i = 0; i < 3; ++i) {
    EmbeddingTensor e = MakeEmbedding("u" + std::to_string(i), 4, 5, 6);
    for (float &v : e.data) v = static_cast<float>(rng.Normal());
    inputs.push_back(PreparePoolInput(e, c.mode));
    targets[i] = 1.0 + 6.0 * rng.Uniform();
  }
  std::vector<const PoolInput *> ptrs;
  for (const auto &in : inputs) ptrs.push_back(&in);
  std::vector<Tensor> values;
  for (const auto &[name, t] : p.Named()) values.push_back(*t);
  return GradCheck(
      [&](Graph &g, std::span<const Var> v) {
        ModelVars vars;
        std::size_t k = 0;
        if (p.asp) {
          vars.asp = AspVars{v[0], v[1], v[2], v[3]};
          k = 4;
        }
        for (; k < v.size(); k += 2) vars.head.emplace_back(v[k], v[k + 1]);
        vars.all.assign(v.begin(), v.end());
        const BatchOutput out = ForwardBatch(g, vars, p, ptrs);
        return g.Mean(g.Square(g.Sub(out.predictions, g.Leaf(targets))), Axis::kAll);
      },
      values, kAspStep);
}

}  // namespace testing
}  // namespace asplab

#endif  // ASPLAB_TESTS_ORACLES_GRAD_CASES_H_
