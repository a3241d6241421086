// tests/unit/synth_test.cc

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

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <set>

#include "asplab/data/splits.h"
#include "asplab/data/synth.h"
#include "asplab/error.h"
#include "asplab/pooling/aggregation.h"
#include "test_util.h"

namespace asplab {
namespace {

using testing::TempDir;

SynthOptions Small(SynthTask task) {
  SynthOptions o;
  o.task = task;
  o.n_utterances = 60;
  o.layers = 4;
  o.frames_min = 16;
  o.frames_max = 24;
  o.dim = 12;
  return o;
}

TEST(SynthTest, SameSeedWritesIdenticalFiles) {
  TempDir a("synth-a"), b("synth-b");
  WriteSynthetic(GenerateSynthetic(Small(SynthTask::kTemporalCue)), a.path());
  WriteSynthetic(GenerateSynthetic(Small(SynthTask::kTemporalCue)), b.path());
  std::size_t files = 0;
  for (const auto &entry : std::filesystem::recursive_directory_iterator(a.path())) {
    if (!entry.is_regular_file()) continue;
    const auto rel = std::filesystem::relative(entry.path(), a.path());
    EXPECT_EQ(ReadFileBytes(entry.path()), ReadFileBytes(b.path() / rel)) << rel;
    ++files;
  }
  EXPECT_EQ(files, 60u + 2u);  // embeddings, manifest.jsonl, dataset.json
}

TEST(SynthTest, RecordsAreWellFormed) {
  for (SynthTask task : {SynthTask::kTemporalCue, SynthTask::kLayerCue, SynthTask::kNull}) {
    const SynthDataset ds = GenerateSynthetic(Small(task));
    ASSERT_EQ(ds.records.size(), 60u);
    EXPECT_NO_THROW(ValidateRecords(ds.records));
    std::set<std::string> speakers;
    std::set<int> ratings;
    for (std::size_t i = 0; i < ds.records.size(); ++i) {
      const int r = ds.records[i].ratings.at("intelligibility");
      EXPECT_GE(r, 1);
      EXPECT_LE(r, 7);
      ratings.insert(r);
      speakers.insert(ds.records[i].speaker_id);
      EXPECT_NO_THROW(ds.embeddings[i].Validate());
      EXPECT_GE(ds.embeddings[i].frames, 16u);
      EXPECT_LE(ds.embeddings[i].frames, 24u);
    }
    EXPECT_EQ(speakers.size(), 6u);  // max(3, 60 / 10)
    EXPECT_EQ(ratings.size(), 7u);
    EXPECT_NO_THROW(MakeSplits(ds.records, "intelligibility", {}, 0));
  }
}

TEST(SynthTest, InvalidOptionsAreConfigErrors) {
  SynthOptions o = Small(SynthTask::kNull);
  o.n_utterances = 10;
  EXPECT_THROW(GenerateSynthetic(o), ConfigError);
  o = Small(SynthTask::kNull);
  o.dim = 7;
  EXPECT_THROW(GenerateSynthetic(o), ConfigError);
  o = Small(SynthTask::kNull);
  o.layers = 3;
  EXPECT_THROW(GenerateSynthetic(o), ConfigError);
  o = Small(SynthTask::kNull);
  o.frames_max = 2;
  EXPECT_THROW(GenerateSynthetic(o), ConfigError);
  EXPECT_THROW(ParseSynthTask("speech"), ConfigError);
}

TEST(SynthTest, TemporalWindowHasTheDocumentedLength) {
  const SynthDataset ds = GenerateSynthetic(Small(SynthTask::kTemporalCue));
  for (std::size_t i = 0; i < ds.records.size(); ++i) {
    const auto T = ds.embeddings[i].frames;
    EXPECT_EQ(ds.cues[i].window_length, (T + 7) / 8);
    EXPECT_LE(ds.cues[i].window_start + ds.cues[i].window_length, T);
  }
  EXPECT_EQ(ds.cue_coords.size(), kCueCoordinates < 12 ? kCueCoordinates : 12u);
}

// With no noise the rating is an exact linear function of the windowed mean,
// so least squares on those means (ridge with a vanishing penalty) must
// recover it.
TEST(SynthTest, NoiselessTemporalCueIsRecoveredByRidgeRegression) {
  SynthOptions o;
  o.task = SynthTask::kTemporalCue;
  o.noise_sigma = 0.0;
  o.n_utterances = 120;
  const SynthDataset ds = GenerateSynthetic(o);
  const std::size_t n = ds.records.size(), d = o.dim;
  Eigen::MatrixXd X(n, d + 1);
  Eigen::VectorXd y(n);
  for (std::size_t i = 0; i < n; ++i) {
    const EmbeddingTensor &e = ds.embeddings[i];
    const PlantedCue &c = ds.cues[i];
    for (std::size_t k = 0; k < d; ++k) {
      double s = 0.0;
      for (std::size_t l = 0; l < e.layers; ++l)
        for (std::size_t t = c.window_start; t < c.window_start + c.window_length; ++t)
          s += e.at(l, t, k);
      X(i, k) = s / static_cast<double>(e.layers * c.window_length);
    }
    X(i, d) = 1.0;
    y(i) = ds.records[i].ratings.at(o.descriptor);
  }
  const double lambda = 1e-8;
  Eigen::MatrixXd A = X.transpose() * X;
  A.diagonal().array() += lambda;
  const Eigen::VectorXd w = A.ldlt().solve(X.transpose() * y);
  const Eigen::VectorXd fit = X * w;
  const double pcc = ((fit.array() - fit.mean()) * (y.array() - y.mean())).sum() /
                     std::sqrt((fit.array() - fit.mean()).square().sum() *
                               (y.array() - y.mean()).square().sum());
  EXPECT_GT(pcc, 0.999);
}

TEST(SynthTest, NoiselessLayerCueIsDilutedByTheLayerMean) {
  SynthOptions o = Small(SynthTask::kLayerCue);
  o.noise_sigma = 0.0;
  o.cue_layer = 2;
  const SynthDataset ds = GenerateSynthetic(o);
  ASSERT_EQ(ds.cue_layer, 2u);
  for (std::size_t i = 0; i < ds.records.size(); ++i) {
    const int r = ds.records[i].ratings.at(o.descriptor);
    const Tensor layers = LayerwiseMatrix(ds.embeddings[i]);
    const Tensor frames = TimewiseMatrix(ds.embeddings[i]);
    for (std::size_t k = 0; k < ds.cue_coords.size(); ++k) {
      const std::size_t c = ds.cue_coords[k];
      const double shift = kCueStrength * (r - 1) * ds.cue_signs[k];
      EXPECT_NEAR(layers.at(1, c), shift, 1e-6);
      EXPECT_EQ(layers.at(0, c), 0.0);
      EXPECT_NEAR(frames.at(0, c), shift / static_cast<double>(o.layers), 1e-6);
    }
  }
}

TEST(SynthTest, NullTaskCarriesNoShift) {
  SynthOptions o = Small(SynthTask::kNull);
  o.noise_sigma = 0.0;
  for (const EmbeddingTensor &e : GenerateSynthetic(o).embeddings)
    for (float v : e.data) ASSERT_EQ(v, 0.0f);
}

}  // namespace
}  // namespace asplab
