// asplab/eval/ttest.h

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

#ifndef ASPLAB_EVAL_TTEST_H_
#define ASPLAB_EVAL_TTEST_H_

#include <span>
#include <vector>

namespace asplab {

inline constexpr double kSignificanceLevel = 0.05;

// Regularized incomplete beta I_x(a, b) by Lentz's continued fraction.
double IncompleteBeta(double a, double b, double x);

// P(T <= t) for Student's t with `dof` degrees of freedom.
double StudentTCdf(double t, double dof);

// Two-sided tail probability P(|T| >= |t|).
double StudentTTwoSidedP(double t, double dof);

struct TTestResult {
  double t_statistic = 0.0;
  double p_value = 1.0;
  int dof = 0;
  double mean_difference = 0.0;
  bool significant_at_5pct = false;
};

// Two-sided paired t-test on per-sample errors, d_i = a_i - b_i:
// t = mean(d) / (sd(d) / sqrt(n)), dof = n - 1. A negative t means `a` has
// the smaller errors. Throws AnalysisError when lengths differ, n < 2, or
// every difference is identical (zero variance).
TTestResult PairedTTest(std::span<const double> errs_a, std::span<const double> errs_b);

}  // namespace asplab

#endif  // ASPLAB_EVAL_TTEST_H_
