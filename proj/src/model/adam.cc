// model/adam.cc

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

#include "asplab/model/adam.h"

#include <cmath>

#include "asplab/error.h"

namespace asplab {

void AdamStep(std::span<const AdamParam> params, std::span<const Tensor> grads,
              AdamState *state, const AdamOptions &opt) {
  if (params.size() != grads.size())
    throw ShapeError("adam: " + std::to_string(params.size()) + " parameters but " +
                     std::to_string(grads.size()) + " gradients");
  for (std::size_t k = 0; k < params.size(); ++k) {
    if (!params[k].value->SameShape(grads[k]))
      throw ShapeError("adam: gradient shape " + ShapeString(grads[k].shape()) +
                       " does not match parameter " + params[k].name + " " +
                       ShapeString(params[k].value->shape()));
    if (!grads[k].AllFinite())
      throw AnalysisError("adam: non-finite gradient for parameter '" + params[k].name + "'");
  }
  if (state->m.empty()) {
    for (const AdamParam &p : params) {
      state->m.emplace_back(p.value->shape());
      state->v.emplace_back(p.value->shape());
    }
  } else if (state->m.size() != params.size()) {
    throw ShapeError("adam: optimizer state does not match parameter list");
  }

  ++state->t;
  const double t = static_cast<double>(state->t);
  const double c1 = 1.0 - std::pow(opt.beta1, t);
  const double c2 = 1.0 - std::pow(opt.beta2, t);
  for (std::size_t k = 0; k < params.size(); ++k) {
    Tensor &p = *params[k].value;
    Tensor &m = state->m[k];
    Tensor &v = state->v[k];
    const Tensor &g = grads[k];
    for (std::size_t i = 0; i < p.size(); ++i) {
      m[i] = opt.beta1 * m[i] + (1.0 - opt.beta1) * g[i];
      v[i] = opt.beta2 * v[i] + (1.0 - opt.beta2) * g[i] * g[i];
      p[i] -= opt.lr * (m[i] / c1) / (std::sqrt(v[i] / c2) + opt.eps);
    }
  }
}

}  // namespace asplab
