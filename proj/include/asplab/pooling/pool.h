// asplab/pooling/pool.h

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

#ifndef ASPLAB_POOLING_POOL_H_
#define ASPLAB_POOLING_POOL_H_

#include <optional>
#include <string>

#include "asplab/data/embedding.h"
#include "asplab/pooling/aggregation.h"
#include "asplab/pooling/asp.h"

namespace asplab {

// The parameter-free half of pooling. Embeddings are frozen, so this is
// computed once per utterance and reused every epoch.
//   ASP modes:      `values` is the N x d matrix attended over.
//   baseline modes: `values` is the final 1 x d feature.
struct PoolInput {
  std::string utterance_id;
  Tensor values;
  PooledAxis axis = PooledAxis::kTime;
  bool attends = false;
};

PoolInput PreparePoolInput(const EmbeddingTensor &e, const AggregationMode &mode);

// Grand mean over layers and frames: 1 x d.
Tensor GrandMean(const EmbeddingTensor &e);

struct PoolResult {
  Tensor feature;  // 1 x 2d for ASP modes, 1 x d for baselines
  std::optional<AttentionMap> attention;
};

// `params` must be non-null exactly when the mode uses ASP.
PoolResult Pool(const EmbeddingTensor &e, const AggregationMode &mode, const AspParams *params);

// Pooled feature width for a given embedding dim.
inline std::size_t PooledWidth(const AggregationMode &mode, std::size_t dim) {
  return mode.UsesAsp() ? 2 * dim : dim;
}

}  // namespace asplab

#endif  // ASPLAB_POOLING_POOL_H_
