// asplab/eval/metrics.h

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

#ifndef ASPLAB_EVAL_METRICS_H_
#define ASPLAB_EVAL_METRICS_H_

#include <span>
#include <vector>

namespace asplab {

// Mean of squared differences. Throws on empty or unequal inputs.
double Mse(std::span<const double> preds, std::span<const double> targets);

std::vector<double> SquaredErrors(std::span<const double> preds,
                                  std::span<const double> targets);

// Sample Pearson correlation. Throws AnalysisError when fewer than two
// points are given or either vector is constant (the correlation is
// undefined there; no silent zero).
double Pcc(std::span<const double> y, std::span<const double> yhat);

}  // namespace asplab

#endif  // ASPLAB_EVAL_METRICS_H_
