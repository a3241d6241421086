// eval/attention.cc

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

#include "asplab/eval/attention.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "asplab/data/manifest.h"
#include "asplab/error.h"

namespace asplab {

std::vector<double> ChannelMeanProfile(const AttentionMap &map) {
  const Tensor &a = map.alpha;
  if (a.rank() != 2 || a.rows() == 0 || a.cols() == 0)
    throw AnalysisError("attention map '" + map.utterance_id + "' is empty");
  std::vector<double> p(a.cols(), 0.0);
  for (std::size_t c = 0; c < a.rows(); ++c)
    for (std::size_t t = 0; t < a.cols(); ++t) p[t] += a.at(c, t);
  for (double &v : p) v /= static_cast<double>(a.rows());
  return p;
}

std::vector<double> ResampleLinear(std::span<const double> profile, std::size_t points) {
  if (profile.empty() || points == 0) throw AnalysisError("resample: empty input or grid");
  std::vector<double> out(points);
  const std::size_t n = profile.size();
  if (n == 1 || points == 1) {
    std::fill(out.begin(), out.end(), n == 1 ? profile[0] : profile[0]);
    return out;
  }
  for (std::size_t j = 0; j < points; ++j) {
    const double pos = static_cast<double>(j) * static_cast<double>(n - 1) /
                       static_cast<double>(points - 1);
    const std::size_t lo = std::min(static_cast<std::size_t>(pos), n - 2);
    const double frac = pos - static_cast<double>(lo);
    out[j] = profile[lo] * (1.0 - frac) + profile[lo + 1] * frac;
  }
  return out;
}

RatingGroupedAttention AttentionProfile(std::span<const AttentionMap> maps,
                                        std::span<const int> ratings, std::string descriptor) {
  if (maps.size() != ratings.size())
    throw AnalysisError("attention profile: maps and ratings differ in length");
  RatingGroupedAttention out;
  out.descriptor = std::move(descriptor);
  if (!maps.empty()) out.axis = maps.front().axis;
  out.positions = maps.empty() ? 0
                  : out.axis == PooledAxis::kTime ? kTimeProfilePoints
                                                  : maps.front().alpha.cols();

  std::vector<std::vector<double>> sums(kMaxRating, std::vector<double>(out.positions, 0.0));
  std::vector<std::size_t> counts(kMaxRating, 0);
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (maps[i].axis != out.axis) throw AnalysisError("attention profile: mixed pooled axes");
    if (ratings[i] < kMinRating || ratings[i] > kMaxRating)
      throw AnalysisError("attention profile: rating " + std::to_string(ratings[i]) +
                          " outside 1..7");
    std::vector<double> p = ChannelMeanProfile(maps[i]);
    if (out.axis == PooledAxis::kTime) {
      p = ResampleLinear(p, kTimeProfilePoints);
      double s = 0.0;
      for (double v : p) s += v;
      for (double &v : p) v /= s;
    } else if (p.size() != out.positions) {
      throw AnalysisError("attention profile: layer maps of unequal width");
    }
    auto &sum = sums[ratings[i] - 1];
    for (std::size_t k = 0; k < p.size(); ++k) sum[k] += p[k];
    ++counts[ratings[i] - 1];
  }

  for (int r = kMinRating; r <= kMaxRating; ++r) {
    RatingProfile g;
    g.rating = r;
    g.count = counts[r - 1];
    if (g.count > 0) {
      g.raw = sums[r - 1];
      for (double &v : g.raw) v /= static_cast<double>(g.count);
      const auto [mn, mx] = std::minmax_element(g.raw.begin(), g.raw.end());
      const double lo = *mn, range = *mx - *mn;
      g.scaled.resize(g.raw.size(), 0.0);
      if (range > 0.0) {
        for (std::size_t k = 0; k < g.raw.size(); ++k) g.scaled[k] = (g.raw[k] - lo) / range;
      } else {
        g.degenerate = true;
      }
    }
    out.groups.push_back(std::move(g));
  }
  return out;
}

std::string AttentionCsv(std::span<const RatingGroupedAttention> profiles) {
  std::string out = "descriptor,rating,n,position,value\n";
  char buf[256];
  for (const auto &p : profiles)
    for (const auto &g : p.groups) {
      if (g.count == 0) continue;
      for (std::size_t k = 0; k < g.scaled.size(); ++k) {
        std::snprintf(buf, sizeof(buf), "%s,%d,%zu,%zu,%.6f\n", p.descriptor.c_str(), g.rating,
                      g.count, k + 1, g.scaled[k]);
        out += buf;
      }
    }
  return out;
}

namespace {

// White to dark blue.
std::string HeatColor(double v) {
  v = std::clamp(v, 0.0, 1.0);
  auto mix = [v](int lo, int hi) {
    return static_cast<int>(std::lround(lo + (hi - lo) * v));
  };
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", mix(0xff, 0x08), mix(0xff, 0x30),
                mix(0xff, 0x6b));
  return buf;
}

}  // namespace

std::string AttentionSvg(std::span<const RatingGroupedAttention> profiles) {
  constexpr int kLabelWidth = 110, kTop = 30, kCellH = 16, kBottom = 40;
  std::size_t positions = 0, rows = 0;
  for (const auto &p : profiles) {
    positions = std::max(positions, p.positions);
    for (const auto &g : p.groups) rows += g.count > 0;
  }
  const int cell_w = positions > 40 ? 6 : 24;
  const int width = kLabelWidth + static_cast<int>(positions) * cell_w + 20;
  const int height = kTop + static_cast<int>(rows) * kCellH + kBottom;
  const bool layer_axis = !profiles.empty() && profiles.front().axis == PooledAxis::kLayer;

  std::string s;
  char buf[512];
  std::snprintf(buf, sizeof(buf),
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
                "viewBox=\"0 0 %d %d\" font-family=\"sans-serif\" font-size=\"10\">\n",
                width, height, width, height);
  s += buf;
  s += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  std::snprintf(buf, sizeof(buf), "<text x=\"%d\" y=\"16\" font-size=\"12\">Attention by rating (%s axis, scaled to [0,1])</text>\n",
                kLabelWidth, layer_axis ? "layer" : "time");
  s += buf;

  int row = 0;
  for (const auto &p : profiles) {
    const std::string abbrev = DescriptorAbbrev(p.descriptor);
    for (const auto &g : p.groups) {
      if (g.count == 0) continue;
      const int y = kTop + row * kCellH;
      std::snprintf(buf, sizeof(buf),
                    "<text x=\"%d\" y=\"%d\" text-anchor=\"end\">%s %d (%zu)</text>\n",
                    kLabelWidth - 6, y + kCellH - 4, abbrev.c_str(), g.rating, g.count);
      s += buf;
      for (std::size_t k = 0; k < g.scaled.size(); ++k) {
        std::snprintf(buf, sizeof(buf),
                      "<rect x=\"%d\" y=\"%d\" width=\"%d\" height=\"%d\" fill=\"%s\">"
                      "<title>%.3f</title></rect>\n",
                      kLabelWidth + static_cast<int>(k) * cell_w, y, cell_w, kCellH,
                      HeatColor(g.scaled[k]).c_str(), g.scaled[k]);
        s += buf;
      }
      ++row;
    }
  }
  const int axis_y = kTop + row * kCellH + 14;
  const std::size_t step = positions > 40 ? 10 : 1;
  for (std::size_t k = 0; k < positions; k += step) {
    std::snprintf(buf, sizeof(buf), "<text x=\"%d\" y=\"%d\" text-anchor=\"middle\">%zu</text>\n",
                  kLabelWidth + static_cast<int>(k) * cell_w + cell_w / 2, axis_y, k + 1);
    s += buf;
  }
  std::snprintf(buf, sizeof(buf), "<text x=\"%d\" y=\"%d\">%s</text>\n", kLabelWidth,
                axis_y + 16, layer_axis ? "Layer" : "Relative time position");
  s += buf;
  s += "</svg>\n";
  return s;
}

}  // namespace asplab
