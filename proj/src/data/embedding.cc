// data/embedding.cc

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

#include "asplab/data/embedding.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <iterator>

#include "asplab/error.h"

namespace asplab {

namespace {

void PutU16(std::vector<std::uint8_t> *out, std::uint16_t v) {
  out->push_back(static_cast<std::uint8_t>(v));
  out->push_back(static_cast<std::uint8_t>(v >> 8));
}

void PutU32(std::vector<std::uint8_t> *out, std::uint32_t v) {
  for (int s = 0; s < 32; s += 8) out->push_back(static_cast<std::uint8_t>(v >> s));
}

std::uint32_t GetU32(const std::vector<std::uint8_t> &b, std::size_t off) {
  return static_cast<std::uint32_t>(b[off]) | static_cast<std::uint32_t>(b[off + 1]) << 8 |
         static_cast<std::uint32_t>(b[off + 2]) << 16 |
         static_cast<std::uint32_t>(b[off + 3]) << 24;
}

}  // namespace

void EmbeddingTensor::Validate() const {
  if (layers == 0 || frames == 0 || dim == 0)
    throw DataError("embedding '" + utterance_id + "': zero dimension");
  if (data.size() != layers * frames * dim)
    throw DataError("embedding '" + utterance_id + "': payload length mismatch");
  for (float v : data)
    if (!std::isfinite(v)) throw DataError("embedding '" + utterance_id + "': non-finite value");
}

EmbeddingTensor MakeEmbedding(std::string utterance_id, std::size_t layers,
                              std::size_t frames, std::size_t dim, float fill) {
  EmbeddingTensor e;
  e.utterance_id = std::move(utterance_id);
  e.layers = layers;
  e.frames = frames;
  e.dim = dim;
  e.data.assign(layers * frames * dim, fill);
  return e;
}

std::vector<std::uint8_t> EncodeEmbedding(const EmbeddingTensor &t) {
  t.Validate();
  std::vector<std::uint8_t> out;
  out.reserve(kEmbeddingHeaderBytes + 4 * t.data.size());
  out.insert(out.end(), std::begin(kEmbeddingMagic), std::end(kEmbeddingMagic));
  PutU16(&out, kEmbeddingVersion);
  PutU32(&out, static_cast<std::uint32_t>(t.layers));
  PutU32(&out, static_cast<std::uint32_t>(t.frames));
  PutU32(&out, static_cast<std::uint32_t>(t.dim));
  for (float v : t.data) PutU32(&out, std::bit_cast<std::uint32_t>(v));
  return out;
}

EmbeddingTensor DecodeEmbedding(const std::vector<std::uint8_t> &b,
                                std::string utterance_id) {
  if (b.size() < 4 || !std::equal(std::begin(kEmbeddingMagic), std::end(kEmbeddingMagic), b.begin()))
    throw FormatError("bad magic, expected \"ASPE\"", 0);
  if (b.size() < 6) throw FormatError("truncated header", b.size());
  const std::uint16_t version = static_cast<std::uint16_t>(b[4] | b[5] << 8);
  if (version != kEmbeddingVersion)
    throw FormatError("unsupported format version " + std::to_string(version), 4);
  if (b.size() < kEmbeddingHeaderBytes) throw FormatError("truncated header", b.size());

  EmbeddingTensor t;
  t.utterance_id = std::move(utterance_id);
  t.layers = GetU32(b, 6);
  t.frames = GetU32(b, 10);
  t.dim = GetU32(b, 14);
  if (t.layers == 0) throw FormatError("layer count is zero", 6);
  if (t.frames == 0) throw FormatError("frame count is zero", 10);
  if (t.dim == 0) throw FormatError("feature dim is zero", 14);

  const std::uint64_t count = std::uint64_t{t.layers} * t.frames * t.dim;
  const std::uint64_t expected = kEmbeddingHeaderBytes + 4 * count;
  if (b.size() < expected)
    throw FormatError("truncated payload: header declares " + std::to_string(count) +
                          " floats (" + std::to_string(expected) + " bytes), file has " +
                          std::to_string(b.size()) + " bytes",
                      b.size());
  if (b.size() > expected) throw FormatError("trailing bytes after payload", expected);

  t.data.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t off = kEmbeddingHeaderBytes + 4 * i;
    const float v = std::bit_cast<float>(GetU32(b, off));
    if (!std::isfinite(v)) throw FormatError("non-finite value", off);
    t.data[i] = v;
  }
  return t;
}

std::vector<std::uint8_t> ReadFileBytes(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in), {});
}

void WriteFileBytes(const std::filesystem::path &path,
                    const std::vector<std::uint8_t> &bytes) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  out.write(reinterpret_cast<const char *>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw DataError("write failed for '" + path.string() + "'");
}

void WriteEmbedding(const EmbeddingTensor &t, const std::filesystem::path &path) {
  WriteFileBytes(path, EncodeEmbedding(t));
}

EmbeddingTensor ReadEmbedding(const std::filesystem::path &path) {
  try {
    return DecodeEmbedding(ReadFileBytes(path), path.stem().string());
  } catch (const FormatError &e) {
    throw FormatError(path.string() + ": " + e.detail(), e.offset());
  }
}

}  // namespace asplab
