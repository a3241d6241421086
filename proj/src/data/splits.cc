// data/splits.cc

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

#include "asplab/data/splits.h"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "asplab/error.h"
#include "asplab/rng.h"
#include "json.hpp"

namespace asplab {

std::string_view SplitName(Split s) {
  switch (s) {
    case Split::kTrain: return "train";
    case Split::kDev: return "dev";
    case Split::kTest: return "test";
  }
  return "?";
}

Split ParseSplit(std::string_view name) {
  if (name == "train") return Split::kTrain;
  if (name == "dev") return Split::kDev;
  if (name == "test") return Split::kTest;
  throw DataError("unknown split name '" + std::string(name) + "'");
}

SplitAssignment MakeSplits(const std::vector<UtteranceRecord> &records,
                           const std::string &descriptor, const SplitFractions &fractions,
                           std::uint64_t seed) {
  const std::array<double, 3> frac = {fractions.train, fractions.dev, fractions.test};
  for (double f : frac)
    if (!(f > 0.0)) throw ConfigError("fractions", "every split fraction must be positive");
  if (std::abs(frac[0] + frac[1] + frac[2] - 1.0) > 1e-9)
    throw ConfigError("fractions", "split fractions must sum to 1");
  if (records.empty()) throw DataError("make_splits: empty manifest");

  // Speakers in first-appearance order, with their rated sample counts.
  std::vector<std::string> speakers;
  std::map<std::string, std::size_t> count;
  for (const auto &r : records) {
    if (!r.HasRating(descriptor)) continue;
    if (count[r.speaker_id]++ == 0) speakers.push_back(r.speaker_id);
  }
  if (speakers.size() < 3)
    throw DataError("make_splits: need at least 3 speakers rated for '" + descriptor +
                    "', found " + std::to_string(speakers.size()));

  Rng rng = Rng::Substream(seed, "split");
  rng.Shuffle(&speakers);
  std::stable_sort(speakers.begin(), speakers.end(),
                   [&](const auto &a, const auto &b) { return count[a] > count[b]; });

  std::size_t total = 0;
  for (const auto &s : speakers) total += count[s];
  std::array<double, 3> filled = {0, 0, 0};
  std::array<std::vector<std::string>, 3> members;
  for (const auto &s : speakers) {
    std::size_t best = 0;
    double best_deficit = -INFINITY;
    for (std::size_t k = 0; k < 3; ++k) {
      const double deficit = frac[k] * static_cast<double>(total) - filled[k];
      if (deficit > best_deficit) {
        best_deficit = deficit;
        best = k;
      }
    }
    filled[best] += static_cast<double>(count[s]);
    members[best].push_back(s);
  }
  for (std::size_t k = 0; k < 3; ++k) {
    if (!members[k].empty()) continue;
    std::size_t donor = 0;
    for (std::size_t j = 1; j < 3; ++j)
      if (members[j].size() > members[donor].size()) donor = j;
    // Members are in descending-count order, so the last one is smallest.
    members[k].push_back(members[donor].back());
    members[donor].pop_back();
  }

  std::map<std::string, Split> speaker_split;
  for (std::size_t k = 0; k < 3; ++k)
    for (const auto &s : members[k]) speaker_split[s] = static_cast<Split>(k);
  SplitAssignment out;
  for (const auto &r : records)
    if (r.HasRating(descriptor)) out[r.utterance_id] = speaker_split.at(r.speaker_id);
  return out;
}

std::vector<UtteranceRecord> SelectSplit(const std::vector<UtteranceRecord> &records,
                                         const SplitAssignment &assignment, Split split) {
  std::vector<UtteranceRecord> out;
  for (const auto &r : records) {
    auto it = assignment.find(r.utterance_id);
    if (it != assignment.end() && it->second == split) out.push_back(r);
  }
  return out;
}

void CheckSpeakerExclusive(const std::vector<UtteranceRecord> &records,
                           const SplitAssignment &assignment) {
  std::map<std::string, Split> seen;
  for (const auto &r : records) {
    auto it = assignment.find(r.utterance_id);
    if (it == assignment.end()) continue;
    auto [pos, inserted] = seen.emplace(r.speaker_id, it->second);
    if (!inserted && pos->second != it->second)
      throw DataError("speaker '" + r.speaker_id + "' appears in both " +
                      std::string(SplitName(pos->second)) + " and " +
                      std::string(SplitName(it->second)));
  }
}

void WriteSplitFile(const SplitAssignment &assignment, const std::filesystem::path &path) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto &[utt, split] : assignment) j[utt] = SplitName(split);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write split file '" + path.string() + "'");
  out << j.dump(1) << '\n';
}

SplitAssignment ReadSplitFile(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open split file '" + path.string() + "'");
  SplitAssignment out;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    for (const auto &[utt, name] : j.items()) out[utt] = ParseSplit(name.get<std::string>());
  } catch (const nlohmann::json::exception &e) {
    throw DataError(path.string() + ": " + e.what());
  }
  return out;
}

}  // namespace asplab
