// asplab/model/checkpoint.h

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

#ifndef ASPLAB_MODEL_CHECKPOINT_H_
#define ASPLAB_MODEL_CHECKPOINT_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "asplab/model/config.h"
#include "asplab/model/model.h"

namespace asplab {

// Layout (little endian):
//   "ASPC"  u16 version  u32 n  n bytes of JSON metadata
//   u32 tensor count, then per tensor in ModelParams::Named() order:
//   u32 rows  u32 cols  rows*cols f64
// The metadata holds the config, best_dev_mse, best_epoch, rng_state,
// input_dim and the tensor names. Values are stored exactly, so a reloaded
// model reproduces forward outputs bit for bit.
inline constexpr char kCheckpointMagic[4] = {'A', 'S', 'P', 'C'};
inline constexpr std::uint16_t kCheckpointVersion = 1;

struct Checkpoint {
  ExperimentConfig config;
  ModelParams params;
  double best_dev_mse = 0.0;
  std::size_t best_epoch = 0;
  std::string rng_state;
};

std::vector<std::uint8_t> EncodeCheckpoint(const Checkpoint &c);
// Throws FormatError on malformed input and ShapeError when the tensors do
// not fit the stored config.
Checkpoint DecodeCheckpoint(const std::vector<std::uint8_t> &bytes);

void SaveCheckpoint(const Checkpoint &c, const std::filesystem::path &path);
Checkpoint LoadCheckpoint(const std::filesystem::path &path);

}  // namespace asplab

#endif  // ASPLAB_MODEL_CHECKPOINT_H_
