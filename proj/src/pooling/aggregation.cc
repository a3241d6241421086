// pooling/aggregation.cc

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

#include "asplab/pooling/aggregation.h"

#include "asplab/error.h"

namespace asplab {

std::string ModeName(AggregationMode::Kind kind) {
  using K = AggregationMode::Kind;
  switch (kind) {
    case K::kLayerWiseAsp: return "layer_wise_asp";
    case K::kTimeWiseAspLayerMean: return "time_wise_asp_layer_mean";
    case K::kTimeWiseAspSingleLayer: return "time_wise_asp_single_layer";
    case K::kMeanMeanBaseline: return "mean_mean_baseline";
    case K::kSingleLayerMeanBaseline: return "single_layer_mean_baseline";
  }
  return "?";
}

AggregationMode::Kind ParseModeKind(const std::string &name) {
  using K = AggregationMode::Kind;
  for (K k : {K::kLayerWiseAsp, K::kTimeWiseAspLayerMean, K::kTimeWiseAspSingleLayer,
              K::kMeanMeanBaseline, K::kSingleLayerMeanBaseline})
    if (ModeName(k) == name) return k;
  throw ConfigError("mode", "unknown aggregation mode '" + name + "'");
}

Tensor LayerwiseMatrix(const EmbeddingTensor &e) {
  Tensor out = Tensor::Matrix(e.layers, e.dim);
  for (std::size_t l = 0; l < e.layers; ++l) {
    auto row = out.row(l);
    for (std::size_t t = 0; t < e.frames; ++t) {
      const float *src = &e.data[(l * e.frames + t) * e.dim];
      for (std::size_t d = 0; d < e.dim; ++d) row[d] += src[d];
    }
    for (double &v : row) v /= static_cast<double>(e.frames);
  }
  return out;
}

Tensor TimewiseMatrix(const EmbeddingTensor &e, std::size_t layer) {
  if (layer > e.layers)
    throw DataError("layer " + std::to_string(layer) + " out of range 1.." +
                    std::to_string(e.layers) + " for '" + e.utterance_id + "'");
  Tensor out = Tensor::Matrix(e.frames, e.dim);
  if (layer != 0) {
    for (std::size_t t = 0; t < e.frames; ++t) {
      const float *src = &e.data[((layer - 1) * e.frames + t) * e.dim];
      auto row = out.row(t);
      for (std::size_t d = 0; d < e.dim; ++d) row[d] = src[d];
    }
    return out;
  }
  for (std::size_t l = 0; l < e.layers; ++l)
    for (std::size_t t = 0; t < e.frames; ++t) {
      const float *src = &e.data[(l * e.frames + t) * e.dim];
      auto row = out.row(t);
      for (std::size_t d = 0; d < e.dim; ++d) row[d] += src[d];
    }
  for (double &v : out.data()) v /= static_cast<double>(e.layers);
  return out;
}

}  // namespace asplab
