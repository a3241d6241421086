// asplab/data/embedding.h

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

#ifndef ASPLAB_DATA_EMBEDDING_H_
#define ASPLAB_DATA_EMBEDDING_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace asplab {

// Per-utterance stack of encoder hidden states, layers x frames x dim,
// stored row-major as [layer][frame][dim].
struct EmbeddingTensor {
  std::string utterance_id;
  std::size_t layers = 0;
  std::size_t frames = 0;
  std::size_t dim = 0;
  std::vector<float> data;

  float at(std::size_t l, std::size_t t, std::size_t d) const {
    return data[(l * frames + t) * dim + d];
  }
  float &at(std::size_t l, std::size_t t, std::size_t d) {
    return data[(l * frames + t) * dim + d];
  }

  // Throws DataError when dimensions are zero, the payload length is wrong
  // or a value is not finite.
  void Validate() const;
};

EmbeddingTensor MakeEmbedding(std::string utterance_id, std::size_t layers,
                              std::size_t frames, std::size_t dim, float fill = 0.0f);

// On-disk layout (all little-endian):
//   bytes 0..3   magic "ASPE"
//   bytes 4..5   u16 format version (1)
//   bytes 6..17  u32 layers, u32 frames, u32 dim
//   bytes 18..   layers*frames*dim f32 values, [layer][frame][dim]
inline constexpr char kEmbeddingMagic[4] = {'A', 'S', 'P', 'E'};
inline constexpr std::uint16_t kEmbeddingVersion = 1;
inline constexpr std::size_t kEmbeddingHeaderBytes = 18;

std::vector<std::uint8_t> EncodeEmbedding(const EmbeddingTensor &t);
// `utterance_id` is not part of the format; callers supply it.
EmbeddingTensor DecodeEmbedding(const std::vector<std::uint8_t> &bytes,
                                std::string utterance_id = {});

void WriteEmbedding(const EmbeddingTensor &t, const std::filesystem::path &path);
// The utterance id defaults to the file stem.
EmbeddingTensor ReadEmbedding(const std::filesystem::path &path);

std::vector<std::uint8_t> ReadFileBytes(const std::filesystem::path &path);
void WriteFileBytes(const std::filesystem::path &path,
                    const std::vector<std::uint8_t> &bytes);

}  // namespace asplab

#endif  // ASPLAB_DATA_EMBEDDING_H_
