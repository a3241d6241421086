// asplab/data/synth.h

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

#ifndef ASPLAB_DATA_SYNTH_H_
#define ASPLAB_DATA_SYNTH_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "asplab/data/embedding.h"
#include "asplab/data/manifest.h"

namespace asplab {

// Planted-cue datasets with a known link between embedding and rating.
//
//   temporal_cue  a window of ceil(T/8) consecutive frames at a random
//                 position carries a shift along the cue direction in every
//                 layer; the rest is noise.
//   layer_cue     every frame of one fixed layer carries the shift.
//   null          noise only; ratings are unrelated to the embeddings.
//
// The shift is 0.5 * (rating - 1) * scale on each of min(16, D) fixed
// coordinates with fixed random signs, where scale is noise_sigma, or 1 when
// noise_sigma is 0.
enum class SynthTask { kTemporalCue, kLayerCue, kNull };

std::string SynthTaskName(SynthTask task);
SynthTask ParseSynthTask(const std::string &name);

struct SynthOptions {
  SynthTask task = SynthTask::kTemporalCue;
  std::size_t n_utterances = 300;
  std::size_t layers = 8;
  std::size_t frames_min = 40;
  std::size_t frames_max = 80;
  std::size_t dim = 64;
  double noise_sigma = 1.0;
  std::uint64_t seed = 7;
  std::size_t speakers = 0;   // 0: max(3, n / 10)
  std::size_t cue_layer = 0;  // 1-based; 0: drawn from the seed
  std::string descriptor = "intelligibility";
};

inline constexpr std::size_t kCueCoordinates = 16;
inline constexpr double kCueStrength = 0.5;

struct PlantedCue {
  std::size_t window_start = 0;  // temporal_cue only
  std::size_t window_length = 0;
};

struct SynthDataset {
  SynthOptions options;
  std::vector<std::size_t> cue_coords;
  std::vector<double> cue_signs;
  std::size_t cue_layer = 0;  // 1-based, meaningful for layer_cue
  std::vector<UtteranceRecord> records;
  std::vector<EmbeddingTensor> embeddings;
  std::vector<PlantedCue> cues;
};

// Throws ConfigError on invalid options (n < 30, D < 8, L < 4, ...).
void ValidateSynthOptions(const SynthOptions &options);
SynthDataset GenerateSynthetic(const SynthOptions &options);

// Writes <out>/emb/<utt>.aspe, <out>/manifest.jsonl and <out>/dataset.json
// (generator options and planted-cue metadata). Returns the manifest path.
std::filesystem::path WriteSynthetic(const SynthDataset &dataset,
                                     const std::filesystem::path &out_dir);

}  // namespace asplab

#endif  // ASPLAB_DATA_SYNTH_H_
