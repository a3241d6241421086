// asplab/data/manifest.h

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

#ifndef ASPLAB_DATA_MANIFEST_H_
#define ASPLAB_DATA_MANIFEST_H_

#include <array>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace asplab {

// The five rated speech descriptors.
inline constexpr std::array<std::string_view, 5> kDescriptors = {
    "intelligibility", "imprecise_consonants", "inappropriate_silences",
    "harsh_voice", "monoloudness"};

bool IsDescriptor(std::string_view name);
// Short label used in figures: IN, IC, IS, HV, ML.
std::string DescriptorAbbrev(std::string_view name);

inline constexpr int kMinRating = 1;  // typical
inline constexpr int kMaxRating = 7;  // severe

struct UtteranceRecord {
  std::string utterance_id;
  std::string speaker_id;
  std::string embedding_path;  // relative to the manifest's directory
  std::map<std::string, int> ratings;

  bool HasRating(const std::string &descriptor) const {
    return ratings.count(descriptor) != 0;
  }
};

// Manifest files hold one JSON object per line with keys utterance_id,
// speaker_id, embedding_path and ratings. Blank lines are skipped.
std::vector<UtteranceRecord> ReadManifest(const std::filesystem::path &path);
void WriteManifest(const std::vector<UtteranceRecord> &records,
                   const std::filesystem::path &path);
std::string ManifestLine(const UtteranceRecord &record);

// Throws DataError on unknown descriptors, ratings outside 1..7 or
// duplicate utterance ids.
void ValidateRecords(const std::vector<UtteranceRecord> &records);

std::filesystem::path ResolveEmbeddingPath(const std::filesystem::path &manifest_path,
                                           const UtteranceRecord &record);

}  // namespace asplab

#endif  // ASPLAB_DATA_MANIFEST_H_
