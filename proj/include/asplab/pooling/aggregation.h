// asplab/pooling/aggregation.h

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

#ifndef ASPLAB_POOLING_AGGREGATION_H_
#define ASPLAB_POOLING_AGGREGATION_H_

#include <cstddef>
#include <string>

#include "asplab/data/embedding.h"
#include "asplab/tensor/tensor.h"

namespace asplab {

// How the layers x frames x dim stack is reduced before the regression head.
//
//   kLayerWiseAsp          time-mean per layer, then ASP over the layer axis
//   kTimeWiseAspLayerMean  layer-mean per frame, then ASP over time
//   kTimeWiseAspSingleLayer  frames of one layer, then ASP over time
//   kMeanMeanBaseline      mean over layers and frames, no attention
//   kSingleLayerMeanBaseline  time-mean of one layer, no attention
struct AggregationMode {
  enum class Kind {
    kLayerWiseAsp,
    kTimeWiseAspLayerMean,
    kTimeWiseAspSingleLayer,
    kMeanMeanBaseline,
    kSingleLayerMeanBaseline,
  };

  Kind kind = Kind::kTimeWiseAspLayerMean;
  std::size_t layer = 12;  // 1-based; used by the single-layer kinds

  bool UsesAsp() const {
    return kind == Kind::kLayerWiseAsp || kind == Kind::kTimeWiseAspLayerMean ||
           kind == Kind::kTimeWiseAspSingleLayer;
  }
  bool UsesLayerIndex() const {
    return kind == Kind::kTimeWiseAspSingleLayer || kind == Kind::kSingleLayerMeanBaseline;
  }
  bool PoolsOverLayers() const { return kind == Kind::kLayerWiseAsp; }

  bool operator==(const AggregationMode &o) const {
    return kind == o.kind && (!UsesLayerIndex() || layer == o.layer);
  }
};

std::string ModeName(AggregationMode::Kind kind);
AggregationMode::Kind ParseModeKind(const std::string &name);

// Row l is the mean over frames of layer l: layers x dim.
Tensor LayerwiseMatrix(const EmbeddingTensor &e);

// Frame t is the mean over layers of frame t (layer == 0), or the frame of
// the given 1-based layer: frames x dim. Throws DataError when the layer is
// out of range.
Tensor TimewiseMatrix(const EmbeddingTensor &e, std::size_t layer = 0);

}  // namespace asplab

#endif  // ASPLAB_POOLING_AGGREGATION_H_
