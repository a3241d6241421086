// asplab/eval/attention.h

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

#ifndef ASPLAB_EVAL_ATTENTION_H_
#define ASPLAB_EVAL_ATTENTION_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "asplab/pooling/asp.h"

namespace asplab {

// Time-axis maps have one column per frame and utterances differ in length,
// so their profiles are interpolated onto this many points.
inline constexpr std::size_t kTimeProfilePoints = 100;

struct RatingProfile {
  int rating = 0;
  std::size_t count = 0;
  std::vector<double> raw;     // group mean before scaling; sums to 1
  std::vector<double> scaled;  // min-max scaled to [0, 1]
  bool degenerate = false;     // constant profile, scaled to all zeros
};

struct RatingGroupedAttention {
  std::string descriptor;
  PooledAxis axis = PooledAxis::kLayer;
  std::size_t positions = 0;
  std::vector<RatingProfile> groups;  // ratings 1..7; empty ones have count 0
};

// Mean over the channel rows of an attention map: one weight per position.
std::vector<double> ChannelMeanProfile(const AttentionMap &map);

// Linear interpolation of `profile` onto `points` evenly spaced positions
// spanning the same range.
std::vector<double> ResampleLinear(std::span<const double> profile, std::size_t points);

// Each map is reduced to its channel-mean profile (time-axis profiles are
// then resampled to kTimeProfilePoints and renormalized to sum 1), profiles
// are averaged within each rating, and each group profile is min-max scaled.
// Throws AnalysisError on length mismatch, mixed axes, layer maps of unequal
// width or ratings outside 1..7.
RatingGroupedAttention AttentionProfile(std::span<const AttentionMap> maps,
                                        std::span<const int> ratings, std::string descriptor);

// descriptor,rating,n,position,value (scaled); positions are 1-based and
// empty rating groups are skipped.
std::string AttentionCsv(std::span<const RatingGroupedAttention> profiles);

// Heatmap with one row per (descriptor, rating) group, labelled
// "<abbrev> <rating> (<n>)", and one column per position.
std::string AttentionSvg(std::span<const RatingGroupedAttention> profiles);

}  // namespace asplab

#endif  // ASPLAB_EVAL_ATTENTION_H_
