// eval/metrics.cc

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

#include "asplab/eval/metrics.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "asplab/error.h"

namespace asplab {

namespace {

void CheckPair(std::span<const double> a, std::span<const double> b, const char *what) {
  if (a.size() != b.size())
    throw AnalysisError(std::string(what) + ": length mismatch (" + std::to_string(a.size()) +
                        " vs " + std::to_string(b.size()) + ")");
  if (a.empty()) throw AnalysisError(std::string(what) + ": empty input");
}

}  // namespace

std::vector<double> SquaredErrors(std::span<const double> preds,
                                  std::span<const double> targets) {
  CheckPair(preds, targets, "squared_errors");
  std::vector<double> out(preds.size());
  for (std::size_t i = 0; i < preds.size(); ++i) {
    const double d = preds[i] - targets[i];
    out[i] = d * d;
  }
  return out;
}

double Mse(std::span<const double> preds, std::span<const double> targets) {
  CheckPair(preds, targets, "mse");
  double s = 0.0;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    const double d = preds[i] - targets[i];
    s += d * d;
  }
  return s / static_cast<double>(preds.size());
}

double Pcc(std::span<const double> y, std::span<const double> yhat) {
  CheckPair(y, yhat, "pcc");
  if (y.size() < 2) throw AnalysisError("pcc: need at least two samples");
  const double n = static_cast<double>(y.size());
  double my = 0.0, mh = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    my += y[i];
    mh += yhat[i];
  }
  my /= n;
  mh /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double a = y[i] - my, b = yhat[i] - mh;
    sxy += a * b;
    sxx += a * a;
    syy += b * b;
  }
  if (sxx == 0.0 || syy == 0.0)
    throw AnalysisError("pcc: correlation undefined for a constant vector");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

}  // namespace asplab
