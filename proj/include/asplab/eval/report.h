// asplab/eval/report.h

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

#ifndef ASPLAB_EVAL_REPORT_H_
#define ASPLAB_EVAL_REPORT_H_

#include <span>
#include <string>
#include <vector>

#include "asplab/eval/results.h"
#include "asplab/eval/ttest.h"

namespace asplab {

enum class ReportFormat { kText, kCsv };

// A significance test together with what was compared, e.g.
// "intelligibility: Exp. 3-6 vs Exp. 7-10".
struct LabeledTest {
  std::string label;
  TTestResult result;
};

// Results are grouped into one row per experiment (exp_id, modes, heads),
// with a PCC/MSE column pair for every descriptor present, in the usual
// descriptor order. Rows follow experiment order with the layer and time
// ASP blocks under their own section lines. Within each ASP block the best
// PCC (max) and MSE (min) of every column is listed in a trailing
// "% best:" comment unless tied. Tests are appended as "% t-test" lines.
// Throws AnalysisError when `results` is empty.
std::string RenderTable(std::span<const EvalResult> results, std::span<const LabeledTest> tests);

std::string RenderReport(std::span<const EvalResult> results, std::span<const LabeledTest> tests,
                         ReportFormat format);

}  // namespace asplab

#endif  // ASPLAB_EVAL_REPORT_H_
