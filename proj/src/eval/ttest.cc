// eval/ttest.cc

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

#include "asplab/eval/ttest.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "asplab/error.h"

namespace asplab {

namespace {

// Continued fraction for I_x(a, b), modified Lentz.
double BetaContinuedFraction(double a, double b, double x) {
  constexpr int kMaxIter = 1000;
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;
  const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) return h;
  }
  throw AnalysisError("incomplete beta: continued fraction did not converge");
}

}  // namespace

double IncompleteBeta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) throw AnalysisError("incomplete beta: a, b must be > 0");
  if (!(x >= 0.0 && x <= 1.0)) throw AnalysisError("incomplete beta: x outside [0, 1]");
  if (x == 0.0 || x == 1.0) return x;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * BetaContinuedFraction(a, b, x) / a;
  return 1.0 - front * BetaContinuedFraction(b, a, 1.0 - x) / b;
}

double StudentTTwoSidedP(double t, double dof) {
  if (!(dof > 0.0)) throw AnalysisError("student t: dof must be > 0");
  if (std::isnan(t)) throw AnalysisError("student t: NaN statistic");
  if (std::isinf(t)) return 0.0;
  const double x = dof / (dof + t * t);
  return std::clamp(IncompleteBeta(0.5 * dof, 0.5, x), 0.0, 1.0);
}

double StudentTCdf(double t, double dof) {
  const double tail = 0.5 * StudentTTwoSidedP(t, dof);
  return t >= 0.0 ? 1.0 - tail : tail;
}

TTestResult PairedTTest(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw AnalysisError("paired t-test: misaligned samples (" + std::to_string(a.size()) +
                        " vs " + std::to_string(b.size()) + ")");
  const std::size_t n = a.size();
  if (n < 2) throw AnalysisError("paired t-test: need at least two pairs");
  double mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) mean += a[i] - b[i];
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = (a[i] - b[i]) - mean;
    ss += e * e;
  }
  const double var = ss / static_cast<double>(n - 1);
  if (!(var > 0.0))
    throw AnalysisError("paired t-test: differences have zero variance (degenerate comparison)");

  TTestResult r;
  r.dof = static_cast<int>(n - 1);
  r.mean_difference = mean;
  r.t_statistic = mean / std::sqrt(var / static_cast<double>(n));
  r.p_value = StudentTTwoSidedP(r.t_statistic, r.dof);
  r.significant_at_5pct = r.p_value < kSignificanceLevel;
  return r;
}

}  // namespace asplab
