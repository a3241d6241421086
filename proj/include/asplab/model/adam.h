// asplab/model/adam.h

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

#ifndef ASPLAB_MODEL_ADAM_H_
#define ASPLAB_MODEL_ADAM_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "asplab/tensor/tensor.h"

namespace asplab {

struct AdamOptions {
  double lr = 1e-5;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

// First/second moment estimates, one pair per parameter tensor.
struct AdamState {
  std::vector<Tensor> m;
  std::vector<Tensor> v;
  std::size_t t = 0;
};

struct AdamParam {
  std::string name;
  Tensor *value;
};

// One bias-corrected Adam update:
//   m <- b1 m + (1 - b1) g,  v <- b2 v + (1 - b2) g^2,  t <- t + 1
//   p <- p - lr * (m / (1 - b1^t)) / (sqrt(v / (1 - b2^t)) + eps)
// Moments are created on first use. If any gradient holds a NaN or Inf,
// nothing is modified and AnalysisError names the parameter.
void AdamStep(std::span<const AdamParam> params, std::span<const Tensor> grads,
              AdamState *state, const AdamOptions &options);

}  // namespace asplab

#endif  // ASPLAB_MODEL_ADAM_H_
