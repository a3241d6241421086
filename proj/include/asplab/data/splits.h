// asplab/data/splits.h

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

#ifndef ASPLAB_DATA_SPLITS_H_
#define ASPLAB_DATA_SPLITS_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "asplab/data/manifest.h"

namespace asplab {

enum class Split { kTrain, kDev, kTest };

std::string_view SplitName(Split s);
Split ParseSplit(std::string_view name);

using SplitAssignment = std::map<std::string, Split>;  // utterance_id -> split

struct SplitFractions {
  double train = 0.7;
  double dev = 0.15;
  double test = 0.15;
};

// Speaker-exclusive partition of the records rated for `descriptor`.
// Speakers are shuffled with `seed`, stably ordered by descending sample
// count, then each goes to the split whose sample count lags its target
// share the most. When any split ends up without speakers, the smallest
// speaker of the most populated split is moved into it. Throws DataError
// with fewer than three speakers and ConfigError on bad fractions.
SplitAssignment MakeSplits(const std::vector<UtteranceRecord> &records,
                           const std::string &descriptor, const SplitFractions &fractions,
                           std::uint64_t seed);

// Records of `split`, in manifest order.
std::vector<UtteranceRecord> SelectSplit(const std::vector<UtteranceRecord> &records,
                                         const SplitAssignment &assignment, Split split);

// Throws DataError naming the first speaker found in two splits.
void CheckSpeakerExclusive(const std::vector<UtteranceRecord> &records,
                           const SplitAssignment &assignment);

// JSON object utterance_id -> "train" | "dev" | "test".
void WriteSplitFile(const SplitAssignment &assignment, const std::filesystem::path &path);
SplitAssignment ReadSplitFile(const std::filesystem::path &path);

}  // namespace asplab

#endif  // ASPLAB_DATA_SPLITS_H_
