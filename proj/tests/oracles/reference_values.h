// tests/oracles/reference_values.h

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

// Fixture vectors with reference statistics evaluated at 40 significant
// digits (mpmath; the p-values through the regularized incomplete beta).

#ifndef ASPLAB_TESTS_ORACLES_REFERENCE_VALUES_H_
#define ASPLAB_TESTS_ORACLES_REFERENCE_VALUES_H_

#include <vector>

namespace asplab {
namespace reference {

struct PccCase {
  std::vector<double> y, yhat;
  double pcc;
};

inline const std::vector<PccCase> &PccCases() {
  static const std::vector<PccCase> cases = {
      {{1, 2, 3, 4}, {1, 2, 3, 5}, 0.9827076298239907908},
      {{0.5, 1.5, 2.25, 3.0, 4.75, 5.5}, {0.7, 1.1, 2.9, 2.6, 5.2, 4.9}, 0.9627563538811139739},
  };
  return cases;
}

// Differences d = a - b; the tests use b = 0.
struct TTestCase {
  std::vector<double> d;
  double t, p;
  int dof;
};

inline const std::vector<TTestCase> &TTestCases() {
  static const std::vector<TTestCase> cases = {
      {{0.3, 0.1, 0.4, 0.2, 0.5}, 4.242640687119285146, 0.01323559956368268952, 4},
      {{0.12, -0.05, 0.31, 0.08, 0.22, -0.01, 0.17, 0.09, 0.4, 0.03},
       3.033981399423937029, 0.01415514356835725527, 9},
      {{2.5, -1.0, 0.5, 3.0, 1.25, -0.75, 2.0}, 1.817903617305247981, 0.1189653328952623627, 6},
      {{1, -1, 1, -1}, 0.0, 1.0, 3},
  };
  return cases;
}

}  // namespace reference
}  // namespace asplab

#endif  // ASPLAB_TESTS_ORACLES_REFERENCE_VALUES_H_
