// tensor/grad_check.cc

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

#include "asplab/tensor/grad_check.h"

#include <algorithm>
#include <cmath>

#include "asplab/error.h"

namespace asplab {

namespace {

double Evaluate(const GraphBuilder &fn, const std::vector<Tensor> &params) {
  Graph g;
  std::vector<Var> leaves;
  leaves.reserve(params.size());
  for (const Tensor &p : params) leaves.push_back(g.Leaf(p, false));
  Var loss = fn(g, leaves);
  if (g.value(loss).size() != 1) throw ShapeError("grad_check: loss is not a scalar");
  return g.value(loss)[0];
}

}  // namespace

GradCheckReport GradCheck(const GraphBuilder &fn, std::vector<Tensor> params,
                          double step, double tol) {
  for (const Tensor &p : params)
    if (!p.AllFinite()) throw AnalysisError("grad_check: non-finite parameter");

  std::vector<Tensor> analytic;
  double f0;
  {
    Graph g;
    std::vector<Var> leaves;
    for (const Tensor &p : params) leaves.push_back(g.Leaf(p, true));
    Var loss = fn(g, leaves);
    g.Backward(loss);
    f0 = g.value(loss)[0];
    for (Var v : leaves) analytic.push_back(g.grad(v));
  }
  if (Evaluate(fn, params) != f0)
    throw AnalysisError("grad_check: builder is not deterministic");

  GradCheckReport report;
  for (std::size_t p = 0; p < params.size(); ++p) {
    for (std::size_t i = 0; i < params[p].size(); ++i) {
      const double orig = params[p][i];
      params[p][i] = orig + step;
      const double fp = Evaluate(fn, params);
      params[p][i] = orig - step;
      const double fm = Evaluate(fn, params);
      params[p][i] = orig;
      const double numeric = (fp - fm) / (2.0 * step);
      const double a = analytic[p][i];
      const double denom = std::max({std::abs(a), std::abs(numeric), 1e-8});
      const double rel = std::abs(a - numeric) / denom;
      if (rel > report.max_rel_error || !std::isfinite(rel)) {
        report.max_rel_error = rel;
        report.worst_param = p;
        report.worst_index = i;
      }
      ++report.coordinates;
    }
  }
  report.pass = std::isfinite(report.max_rel_error) && report.max_rel_error <= tol;
  return report;
}

}  // namespace asplab
