// tests/unit/test_util.h

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

#ifndef ASPLAB_TESTS_UNIT_TEST_UTIL_H_
#define ASPLAB_TESTS_UNIT_TEST_UTIL_H_

#include <filesystem>
#include <string>
#include <vector>

#include <unistd.h>

#include "asplab/data/embedding.h"
#include "asplab/data/manifest.h"
#include "asplab/rng.h"
#include "asplab/tensor/tensor.h"

namespace asplab {
namespace testing {

inline Tensor RandomMatrix(std::size_t rows, std::size_t cols, Rng &rng, double scale = 1.0) {
  Tensor t = Tensor::Matrix(rows, cols);
  for (double &v : t.data()) v = scale * rng.Normal();
  return t;
}

inline std::vector<double> Values(const Tensor &t) {
  return {t.data().begin(), t.data().end()};
}

inline EmbeddingTensor RandomEmbedding(std::size_t l, std::size_t t, std::size_t d, Rng &rng,
                                       std::string id = "utt") {
  EmbeddingTensor e = MakeEmbedding(std::move(id), l, t, d);
  for (float &v : e.data) v = static_cast<float>(rng.Normal());
  return e;
}

// Random manifest: 3..40 speakers with 1..12 utterances each; a quarter of
// the utterances lack the intelligibility rating.
inline std::vector<UtteranceRecord> RandomManifest(Rng &rng) {
  std::vector<UtteranceRecord> recs;
  const auto speakers = rng.UniformInt(3, 40);
  for (std::int64_t s = 0; s < speakers; ++s) {
    const auto n = rng.UniformInt(1, 12);
    for (std::int64_t u = 0; u < n; ++u) {
      UtteranceRecord r;
      r.utterance_id = "s" + std::to_string(s) + "u" + std::to_string(u);
      r.speaker_id = "spk" + std::to_string(s);
      r.embedding_path = r.utterance_id + ".aspe";
      if (rng.Uniform() < 0.75) r.ratings["intelligibility"] = static_cast<int>(rng.UniformInt(1, 7));
      r.ratings["harsh_voice"] = 4;
      recs.push_back(std::move(r));
    }
  }
  // Some manifests end up with fewer than 3 rated speakers; force them.
  for (int s = 0; s < 3; ++s) recs[s].ratings["intelligibility"] = 1;
  for (int s = 0; s < 3; ++s) recs[s].speaker_id = "forced" + std::to_string(s);
  return recs;
}

// Fresh, empty directory under the system temp dir; removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string &tag) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("asplab-" + tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;

  const std::filesystem::path &path() const { return path_; }
  std::filesystem::path operator/(const std::string &name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

}  // namespace testing
}  // namespace asplab

#endif  // ASPLAB_TESTS_UNIT_TEST_UTIL_H_
