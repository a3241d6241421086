// pooling/asp.cc

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

#include "asplab/pooling/asp.h"

#include <cmath>
#include <vector>

#include "asplab/error.h"

namespace asplab {

namespace {

Tensor UniformMatrix(std::size_t rows, std::size_t cols, double bound, Rng &rng) {
  Tensor t = Tensor::Matrix(rows, cols);
  for (double &v : t.data()) v = rng.Uniform(-bound, bound);
  return t;
}

void ExpectShape(const Tensor &t, std::size_t rows, std::size_t cols, const char *name) {
  if (t.rank() != 2 || t.rows() != rows || t.cols() != cols)
    throw ShapeError(std::string("asp: ") + name + " has shape " + ShapeString(t.shape()) +
                     ", expected " + ShapeString({rows, cols}));
}

}  // namespace

std::string PooledAxisName(PooledAxis axis) {
  return axis == PooledAxis::kLayer ? "layer" : "time";
}

void AspParams::Validate() const {
  if (dim == 0 || heads == 0) throw ShapeError("asp: dim and heads must be >= 1");
  ExpectShape(w1, heads, ContextWidth(), "w1");
  ExpectShape(b1, 1, heads, "b1");
  ExpectShape(w2, dim, heads, "w2");
  ExpectShape(b2, 1, dim, "b2");
}

AspParams InitAspParams(std::size_t dim, std::size_t heads, bool global_context, Rng &rng) {
  if (dim == 0 || heads == 0) throw ConfigError("heads", "dim and heads must be >= 1");
  AspParams p;
  p.dim = dim;
  p.heads = heads;
  p.global_context = global_context;
  const double k1 = std::sqrt(1.0 / static_cast<double>(p.ContextWidth()));
  const double k2 = std::sqrt(1.0 / static_cast<double>(heads));
  p.w1 = UniformMatrix(heads, p.ContextWidth(), k1, rng);
  p.b1 = UniformMatrix(1, heads, k1, rng);
  p.w2 = UniformMatrix(dim, heads, k2, rng);
  p.b2 = UniformMatrix(1, dim, k2, rng);
  return p;
}

AspNodes AspOnGraph(Graph &g, Var x, const AspVars &v, const AspParams &config) {
  const Tensor &xv = g.value(x);
  if (xv.rank() != 2 || xv.rows() == 0)
    throw ShapeError("asp: input needs at least one row, got " + ShapeString(xv.shape()));
  if (xv.cols() != config.dim)
    throw ShapeError("asp: input width " + std::to_string(xv.cols()) +
                     " does not match parameter dim " + std::to_string(config.dim));
  const std::size_t n = xv.rows();
  const double eps = config.eps_var;

  Var context = x;
  if (config.global_context) {
    Var mean = g.Mean(x, Axis::kRows);
    Var var = g.Sub(g.Mean(g.Square(x), Axis::kRows), g.Square(mean));
    Var sd = g.Sqrt(g.ClampMin(var, eps));
    const Var parts[] = {x, g.RepeatRows(mean, n), g.RepeatRows(sd, n)};
    context = g.Concat(parts, Axis::kCols);
  }
  Var hidden = g.Tanh(g.Linear(context, v.w1, v.b1));
  Var scores = g.Linear(hidden, v.w2, v.b2);
  Var alpha = g.Softmax(scores, Axis::kRows);

  Var mu = g.WeightedSum(alpha, x);
  Var second = g.WeightedSum(alpha, g.Square(x));
  Var sigma = g.Sqrt(g.ClampMin(g.Sub(second, g.Square(mu)), eps));
  const Var stats[] = {mu, sigma};
  return {g.Concat(stats, Axis::kCols), alpha};
}

std::pair<PooledFeature, AttentionMap> AspForward(const Tensor &x, const AspParams &params,
                                                  PooledAxis axis, std::string utterance_id) {
  params.Validate();
  Graph g;
  Var xv = g.Leaf(x);
  AspVars vars{g.Leaf(params.w1), g.Leaf(params.b1), g.Leaf(params.w2), g.Leaf(params.b2)};
  AspNodes nodes = AspOnGraph(g, xv, vars, params);
  AttentionMap map{g.value(nodes.alpha).Transposed(), axis, std::move(utterance_id)};
  return {PooledFeature{g.value(nodes.z)}, std::move(map)};
}

}  // namespace asplab
