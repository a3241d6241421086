// data/manifest.cc

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

#include "asplab/data/manifest.h"

#include <algorithm>
#include <fstream>
#include <set>

#include "asplab/error.h"
#include "json.hpp"

namespace asplab {

using nlohmann::json;

bool IsDescriptor(std::string_view name) {
  return std::find(kDescriptors.begin(), kDescriptors.end(), name) != kDescriptors.end();
}

std::string DescriptorAbbrev(std::string_view name) {
  if (name == "intelligibility") return "IN";
  if (name == "imprecise_consonants") return "IC";
  if (name == "inappropriate_silences") return "IS";
  if (name == "harsh_voice") return "HV";
  if (name == "monoloudness") return "ML";
  return std::string(name);
}

std::string ManifestLine(const UtteranceRecord &r) {
  json j;
  j["utterance_id"] = r.utterance_id;
  j["speaker_id"] = r.speaker_id;
  j["embedding_path"] = r.embedding_path;
  j["ratings"] = r.ratings;
  return j.dump();
}

void ValidateRecords(const std::vector<UtteranceRecord> &records) {
  std::set<std::string> seen;
  for (const auto &r : records) {
    if (r.utterance_id.empty()) throw DataError("manifest record with empty utterance_id");
    if (!seen.insert(r.utterance_id).second)
      throw DataError("duplicate utterance_id '" + r.utterance_id + "'");
    for (const auto &[name, value] : r.ratings) {
      if (!IsDescriptor(name))
        throw DataError("utterance '" + r.utterance_id + "': unknown descriptor '" + name + "'");
      if (value < kMinRating || value > kMaxRating)
        throw DataError("utterance '" + r.utterance_id + "': rating " + std::to_string(value) +
                        " for " + name + " outside 1..7");
    }
  }
}

std::vector<UtteranceRecord> ReadManifest(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open manifest '" + path.string() + "'");
  std::vector<UtteranceRecord> records;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      json j = json::parse(line);
      UtteranceRecord r;
      r.utterance_id = j.at("utterance_id").get<std::string>();
      r.speaker_id = j.at("speaker_id").get<std::string>();
      r.embedding_path = j.at("embedding_path").get<std::string>();
      if (j.contains("ratings")) r.ratings = j["ratings"].get<std::map<std::string, int>>();
      records.push_back(std::move(r));
    } catch (const json::exception &e) {
      throw DataError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  ValidateRecords(records);
  return records;
}

void WriteManifest(const std::vector<UtteranceRecord> &records,
                   const std::filesystem::path &path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write manifest '" + path.string() + "'");
  for (const auto &r : records) out << ManifestLine(r) << '\n';
}

std::filesystem::path ResolveEmbeddingPath(const std::filesystem::path &manifest_path,
                                           const UtteranceRecord &record) {
  std::filesystem::path p(record.embedding_path);
  if (p.is_absolute()) return p;
  return manifest_path.parent_path() / p;
}

}  // namespace asplab
