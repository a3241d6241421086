// pooling/pool.cc

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

#include "asplab/pooling/pool.h"

#include <algorithm>

#include "asplab/error.h"

namespace asplab {

Tensor GrandMean(const EmbeddingTensor &e) {
  Tensor out = Tensor::Matrix(1, e.dim);
  const std::size_t rows = e.layers * e.frames;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t d = 0; d < e.dim; ++d) out[d] += e.data[r * e.dim + d];
  for (double &v : out.data()) v /= static_cast<double>(rows);
  return out;
}

PoolInput PreparePoolInput(const EmbeddingTensor &e, const AggregationMode &mode) {
  using K = AggregationMode::Kind;
  if (mode.UsesLayerIndex() && (mode.layer < 1 || mode.layer > e.layers))
    throw DataError("layer " + std::to_string(mode.layer) + " out of range 1.." +
                    std::to_string(e.layers) + " for '" + e.utterance_id + "'");
  PoolInput in;
  in.utterance_id = e.utterance_id;
  switch (mode.kind) {
    case K::kLayerWiseAsp:
      in.values = LayerwiseMatrix(e);
      in.axis = PooledAxis::kLayer;
      in.attends = true;
      break;
    case K::kTimeWiseAspLayerMean:
      in.values = TimewiseMatrix(e, 0);
      in.attends = true;
      break;
    case K::kTimeWiseAspSingleLayer:
      in.values = TimewiseMatrix(e, mode.layer);
      in.attends = true;
      break;
    case K::kMeanMeanBaseline:
      in.values = GrandMean(e);
      break;
    case K::kSingleLayerMeanBaseline: {
      Tensor frames = TimewiseMatrix(e, mode.layer);
      in.values = Tensor::Matrix(1, e.dim);
      for (std::size_t t = 0; t < e.frames; ++t)
        for (std::size_t d = 0; d < e.dim; ++d) in.values[d] += frames.at(t, d);
      for (double &v : in.values.data()) v /= static_cast<double>(e.frames);
      break;
    }
  }
  return in;
}

PoolResult Pool(const EmbeddingTensor &e, const AggregationMode &mode, const AspParams *params) {
  if (mode.UsesAsp() != (params != nullptr))
    throw ConfigError("mode", mode.UsesAsp() ? "ASP mode requires attention parameters"
                                             : "baseline mode takes no attention parameters");
  PoolInput in = PreparePoolInput(e, mode);
  if (!in.attends) return {std::move(in.values), std::nullopt};
  auto [pooled, map] = AspForward(in.values, *params, in.axis, e.utterance_id);
  return {std::move(pooled.z), std::move(map)};
}

}  // namespace asplab
