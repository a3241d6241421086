// eval/report.cc

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

#include "asplab/eval/report.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <tuple>

#include "asplab/data/manifest.h"
#include "asplab/error.h"

namespace asplab {

namespace {

// 0: baselines, 1: ASP over layers, 2: ASP over time on the layer mean,
// 3: ASP over time on a single layer.
int BlockOf(const ExperimentLabels &l) {
  if (l.exp_id >= 1 && l.exp_id <= 14) return l.exp_id <= 2 ? 0 : (l.exp_id + 1) / 4;
  if (l.layer_mode == "ASP") return 1;
  if (l.time_mode == "ASP") return l.layer_mode == "Mean" ? 2 : 3;
  return 0;
}

std::string ColumnTitle(std::string_view descriptor) {
  static const std::map<std::string_view, std::string> kTitles = {
      {"intelligibility", "Intelligibility"},
      {"imprecise_consonants", "Impr. consonants"},
      {"inappropriate_silences", "Inappr. silences"},
      {"harsh_voice", "Harsh voice"},
      {"monoloudness", "Monoloudness"}};
  auto it = kTitles.find(descriptor);
  return it != kTitles.end() ? it->second : std::string(descriptor);
}

std::string Fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

struct Row {
  int block = 0;
  ExperimentLabels labels;
  std::map<std::string, const EvalResult *> cells;  // by descriptor
};

using RowKey = std::tuple<int, int, int, std::string, std::string>;

RowKey KeyOf(const ExperimentLabels &l) {
  const int order = l.exp_id > 0 ? l.exp_id : 1000;
  return {BlockOf(l), order, l.heads, l.layer_mode, l.time_mode};
}

}  // namespace

std::string RenderTable(std::span<const EvalResult> results, std::span<const LabeledTest> tests) {
  if (results.empty()) throw AnalysisError("report: no results to render");

  std::map<RowKey, Row> rows;
  for (const EvalResult &r : results) {
    Row &row = rows[KeyOf(r.labels)];
    row.block = BlockOf(r.labels);
    row.labels = r.labels;
    row.cells.emplace(r.descriptor, &r);  // first one wins on duplicates
  }

  std::vector<std::string> columns;
  for (auto d : kDescriptors)
    for (const EvalResult &r : results)
      if (r.descriptor == d) {
        columns.emplace_back(d);
        break;
      }
  for (const EvalResult &r : results)
    if (std::find(columns.begin(), columns.end(), r.descriptor) == columns.end())
      columns.push_back(r.descriptor);

  // Best cells per ASP block; a tie marks nothing.
  std::map<const Row *, std::vector<std::string>> best;
  for (int block = 1; block <= 3; ++block) {
    std::vector<const Row *> members;
    for (const auto &[key, row] : rows)
      if (row.block == block) members.push_back(&row);
    if (members.size() < 2) continue;
    for (const std::string &col : columns) {
      const std::string abbrev = DescriptorAbbrev(col);
      for (bool pcc : {true, false}) {
        const Row *winner = nullptr;
        std::string best_text;
        bool tied = false;
        for (const Row *row : members) {
          auto it = row->cells.find(col);
          if (it == row->cells.end()) continue;
          if (pcc && !it->second->pcc) continue;
          const double v = pcc ? *it->second->pcc : it->second->mse;
          const std::string text = Fixed3(v);
          if (winner != nullptr && text == best_text) {
            tied = true;
            continue;
          }
          const double cur = winner == nullptr ? 0.0 : std::stod(best_text);
          if (winner == nullptr || (pcc ? v > cur : v < cur)) {
            winner = row;
            best_text = text;
            tied = false;
          }
        }
        if (winner != nullptr && !tied) best[winner].push_back(abbrev + (pcc ? " PCC" : " MSE"));
      }
    }
  }

  std::string out;
  out += "Exp. & Layer & Time & Att. Heads";
  for (const std::string &col : columns) out += " & " + ColumnTitle(col) + " & ";
  out += " \\\\\n";
  out += " & & &";
  for (std::size_t i = 0; i < columns.size(); ++i) out += " & PCC & MSE";
  out += " \\\\\n";

  int previous = -1;
  for (const auto &[key, row] : rows) {
    if (row.block != previous) {
      out += "\\midrule\n";
      if (row.block == 1) out += "ASP OVER LAYER \\\\\n\\midrule\n";
      if (row.block == 2 || (row.block == 3 && previous < 2))
        out += "ASP OVER TIME \\\\\n\\midrule\n";
      previous = row.block;
    }
    const ExperimentLabels &l = row.labels;
    out += (l.exp_id > 0 ? std::to_string(l.exp_id) : std::string("-")) + " & " + l.layer_mode +
           " & " + l.time_mode + " & " + (l.heads > 0 ? std::to_string(l.heads) : "-");
    for (const std::string &col : columns) {
      auto it = row.cells.find(col);
      if (it == row.cells.end()) {
        out += " & - & -";
        continue;
      }
      const EvalResult &r = *it->second;
      out += " & " + (r.pcc ? Fixed3(*r.pcc) : std::string("nan")) + " & " + Fixed3(r.mse);
    }
    out += " \\\\";
    auto marks = best.find(&row);
    if (marks != best.end()) {
      out += "  % best:";
      for (std::size_t i = 0; i < marks->second.size(); ++i)
        out += (i ? ", " : " ") + marks->second[i];
    }
    out += '\n';
  }
  out += "\\bottomrule\n";

  char buf[512];
  for (const LabeledTest &t : tests) {
    std::snprintf(buf, sizeof(buf), "%% t-test %s: t = %.4f, p = %.4g, dof = %d, %s at 5%%\n",
                  t.label.c_str(), t.result.t_statistic, t.result.p_value, t.result.dof,
                  t.result.significant_at_5pct ? "significant" : "not significant");
    out += buf;
  }
  return out;
}

std::string RenderReport(std::span<const EvalResult> results, std::span<const LabeledTest> tests,
                         ReportFormat format) {
  if (format == ReportFormat::kCsv) return ResultsCsv(results);
  return RenderTable(results, tests);
}

}  // namespace asplab
