// asplab/tensor/grad_check.h

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

#ifndef ASPLAB_TENSOR_GRAD_CHECK_H_
#define ASPLAB_TENSOR_GRAD_CHECK_H_

#include <functional>
#include <span>
#include <vector>

#include "asplab/tensor/graph.h"

namespace asplab {

// Builds a scalar loss on `graph` from leaves holding the parameters, in the
// order they were passed to GradCheck.
using GraphBuilder = std::function<Var(Graph &graph, std::span<const Var> params)>;

struct GradCheckReport {
  double max_rel_error = 0.0;
  std::size_t worst_param = 0;
  std::size_t worst_index = 0;
  std::size_t coordinates = 0;
  bool pass = false;
};

// Compares reverse-mode gradients with central differences
// (f(p + h) - f(p - h)) / 2h at every coordinate of every parameter. The
// relative error of a coordinate is |a - n| / max(|a|, |n|, 1e-8).
// Throws AnalysisError if two evaluations at the same point disagree.
GradCheckReport GradCheck(const GraphBuilder &fn, std::vector<Tensor> params,
                          double step = 1e-5, double tol = 1e-4);

}  // namespace asplab

#endif  // ASPLAB_TENSOR_GRAD_CHECK_H_
