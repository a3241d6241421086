// asplab/pooling/asp.h

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

#ifndef ASPLAB_POOLING_ASP_H_
#define ASPLAB_POOLING_ASP_H_

#include <cstddef>
#include <string>
#include <utility>

#include "asplab/rng.h"
#include "asplab/tensor/graph.h"
#include "asplab/tensor/tensor.h"

namespace asplab {

inline constexpr double kVarianceFloor = 1e-8;

// Channel- and context-dependent attentive statistics pooling.
//
// For an input X with N rows (positions along the pooled axis) of width d:
//   g_t   = [x_t, mu, sigma]          unweighted mean/std over the N rows
//   h_t   = tanh(W1 g_t + b1)         W1: heads x 3d  (x_t only without context)
//   e_t   = W2 h_t + b2               W2: d x heads
//   a_ct  = softmax_t(e_ct)           independently per channel c
//   mu_c  = sum_t a_ct x_tc
//   sd_c  = sqrt(max(sum_t a_ct x_tc^2 - mu_c^2, eps_var))
//   z     = [mu, sd]                  length 2d
//
// `heads` is the bottleneck width of the attention projection.
struct AspParams {
  std::size_t dim = 0;
  std::size_t heads = 0;
  bool global_context = true;
  double eps_var = kVarianceFloor;
  Tensor w1;  // heads x (3d or d)
  Tensor b1;  // 1 x heads
  Tensor w2;  // d x heads
  Tensor b2;  // 1 x d

  std::size_t ContextWidth() const { return global_context ? 3 * dim : dim; }
  // Throws ShapeError when weight shapes disagree with dim/heads.
  void Validate() const;
};

// Uniform(-sqrt(1/fan_in), sqrt(1/fan_in)) weights and biases.
AspParams InitAspParams(std::size_t dim, std::size_t heads, bool global_context, Rng &rng);

enum class PooledAxis { kLayer, kTime };
std::string PooledAxisName(PooledAxis axis);

// Softmax weights, one row per channel: d x N.
struct AttentionMap {
  Tensor alpha;
  PooledAxis axis = PooledAxis::kTime;
  std::string utterance_id;
};

// z = [mu_att, sigma_att] as a 1 x 2d row.
struct PooledFeature {
  Tensor z;
};

// Graph leaves for the four ASP weight tensors.
struct AspVars {
  Var w1, b1, w2, b2;
};

struct AspNodes {
  Var z;      // 1 x 2d
  Var alpha;  // N x d (transposed relative to AttentionMap)
};

// Differentiable ASP on an existing graph; `x` is N x d.
AspNodes AspOnGraph(Graph &graph, Var x, const AspVars &params, const AspParams &config);

// Value-only evaluation. Throws ShapeError for N == 0 or a width mismatch.
std::pair<PooledFeature, AttentionMap> AspForward(const Tensor &x, const AspParams &params,
                                                  PooledAxis axis = PooledAxis::kTime,
                                                  std::string utterance_id = {});

}  // namespace asplab

#endif  // ASPLAB_POOLING_ASP_H_
