// data/synth.cc

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

#include "asplab/data/synth.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>

#include "asplab/error.h"
#include "asplab/rng.h"
#include "json.hpp"

namespace asplab {

std::string SynthTaskName(SynthTask task) {
  switch (task) {
    case SynthTask::kTemporalCue: return "temporal_cue";
    case SynthTask::kLayerCue: return "layer_cue";
    case SynthTask::kNull: return "null";
  }
  return "?";
}

SynthTask ParseSynthTask(const std::string &name) {
  if (name == "temporal_cue") return SynthTask::kTemporalCue;
  if (name == "layer_cue") return SynthTask::kLayerCue;
  if (name == "null") return SynthTask::kNull;
  throw ConfigError("task", "unknown synthetic task '" + name + "'");
}

void ValidateSynthOptions(const SynthOptions &o) {
  if (o.n_utterances < 30) throw ConfigError("n", "need at least 30 utterances");
  if (o.dim < 8) throw ConfigError("dim", "feature dim must be at least 8");
  if (o.layers < 4) throw ConfigError("layers", "layer count must be at least 4");
  if (o.frames_min < 1 || o.frames_max < o.frames_min)
    throw ConfigError("frames", "need 1 <= frames_min <= frames_max");
  if (!(o.noise_sigma >= 0.0)) throw ConfigError("noise", "noise_sigma must be >= 0");
  if (o.cue_layer > o.layers) throw ConfigError("cue_layer", "cue layer beyond layer count");
  if (o.speakers != 0 && (o.speakers < 3 || o.speakers > o.n_utterances))
    throw ConfigError("speakers", "speaker count must be in [3, n]");
  if (!IsDescriptor(o.descriptor))
    throw ConfigError("descriptor", "unknown descriptor '" + o.descriptor + "'");
}

SynthDataset GenerateSynthetic(const SynthOptions &options) {
  ValidateSynthOptions(options);
  SynthDataset ds;
  ds.options = options;
  const std::size_t L = options.layers, D = options.dim;
  const std::size_t n_speakers =
      options.speakers ? options.speakers : std::max<std::size_t>(3, options.n_utterances / 10);

  Rng layout = Rng::Substream(options.seed, "synth-layout");
  std::vector<std::size_t> coords(D);
  std::iota(coords.begin(), coords.end(), 0);
  layout.Shuffle(&coords);
  coords.resize(std::min(kCueCoordinates, D));
  std::sort(coords.begin(), coords.end());
  ds.cue_coords = coords;
  for (std::size_t k = 0; k < coords.size(); ++k)
    ds.cue_signs.push_back(layout.Uniform() < 0.5 ? -1.0 : 1.0);
  ds.cue_layer = options.cue_layer
                     ? options.cue_layer
                     : static_cast<std::size_t>(layout.UniformInt(1, static_cast<std::int64_t>(L)));

  const double sigma = options.noise_sigma;
  const double scale = sigma > 0.0 ? sigma : 1.0;
  Rng rng = Rng::Substream(options.seed, "synth-data");
  for (std::size_t i = 0; i < options.n_utterances; ++i) {
    char id[32];
    std::snprintf(id, sizeof(id), "utt%05zu", i);
    char spk[32];
    std::snprintf(spk, sizeof(spk), "spk%03zu", i % n_speakers);

    const int rating = static_cast<int>(rng.UniformInt(kMinRating, kMaxRating));
    const std::size_t T = static_cast<std::size_t>(rng.UniformInt(
        static_cast<std::int64_t>(options.frames_min), static_cast<std::int64_t>(options.frames_max)));
    EmbeddingTensor e = MakeEmbedding(id, L, T, D);
    for (float &v : e.data) v = static_cast<float>(sigma * rng.Normal());

    PlantedCue cue;
    const double shift = kCueStrength * (rating - 1) * scale;
    if (options.task == SynthTask::kTemporalCue) {
      cue.window_length = (T + 7) / 8;
      cue.window_start = static_cast<std::size_t>(
          rng.UniformInt(0, static_cast<std::int64_t>(T - cue.window_length)));
      for (std::size_t l = 0; l < L; ++l)
        for (std::size_t t = cue.window_start; t < cue.window_start + cue.window_length; ++t)
          for (std::size_t k = 0; k < coords.size(); ++k)
            e.at(l, t, coords[k]) += static_cast<float>(shift * ds.cue_signs[k]);
    } else if (options.task == SynthTask::kLayerCue) {
      const std::size_t l = ds.cue_layer - 1;
      for (std::size_t t = 0; t < T; ++t)
        for (std::size_t k = 0; k < coords.size(); ++k)
          e.at(l, t, coords[k]) += static_cast<float>(shift * ds.cue_signs[k]);
    }

    UtteranceRecord r;
    r.utterance_id = id;
    r.speaker_id = spk;
    r.embedding_path = std::string("emb/") + id + ".aspe";
    r.ratings[options.descriptor] = rating;
    ds.records.push_back(std::move(r));
    ds.embeddings.push_back(std::move(e));
    ds.cues.push_back(cue);
  }
  return ds;
}

std::filesystem::path WriteSynthetic(const SynthDataset &ds,
                                     const std::filesystem::path &out_dir) {
  std::filesystem::create_directories(out_dir / "emb");
  for (std::size_t i = 0; i < ds.records.size(); ++i)
    WriteEmbedding(ds.embeddings[i], out_dir / ds.records[i].embedding_path);
  const auto manifest = out_dir / "manifest.jsonl";
  WriteManifest(ds.records, manifest);

  const SynthOptions &o = ds.options;
  nlohmann::json info;
  info["task"] = SynthTaskName(o.task);
  info["n_utterances"] = o.n_utterances;
  info["layers"] = o.layers;
  info["frames_min"] = o.frames_min;
  info["frames_max"] = o.frames_max;
  info["dim"] = o.dim;
  info["noise_sigma"] = o.noise_sigma;
  info["seed"] = o.seed;
  info["descriptor"] = o.descriptor;
  info["cue_coords"] = ds.cue_coords;
  info["cue_signs"] = ds.cue_signs;
  info["cue_layer"] = ds.cue_layer;
  nlohmann::json windows = nlohmann::json::object();
  if (o.task == SynthTask::kTemporalCue)
    for (std::size_t i = 0; i < ds.records.size(); ++i)
      windows[ds.records[i].utterance_id] = {ds.cues[i].window_start, ds.cues[i].window_length};
  info["windows"] = windows;
  std::ofstream out(out_dir / "dataset.json", std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write dataset.json in '" + out_dir.string() + "'");
  out << info.dump(1) << '\n';
  return manifest;
}

}  // namespace asplab
