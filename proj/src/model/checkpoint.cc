// model/checkpoint.cc

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

#include "asplab/model/checkpoint.h"

#include <bit>
#include <cstring>

#include "asplab/data/embedding.h"
#include "asplab/error.h"
#include "asplab/rng.h"

namespace asplab {

namespace {

void PutU16(std::vector<std::uint8_t> *out, std::uint16_t v) {
  out->push_back(static_cast<std::uint8_t>(v));
  out->push_back(static_cast<std::uint8_t>(v >> 8));
}

void PutU32(std::vector<std::uint8_t> *out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out->push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void PutF64(std::vector<std::uint8_t> *out, double d) {
  const auto v = std::bit_cast<std::uint64_t>(d);
  for (int i = 0; i < 8; ++i) out->push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

class Reader {
 public:
  explicit Reader(const std::vector<std::uint8_t> &bytes) : bytes_(bytes) {}

  std::size_t offset() const { return pos_; }
  bool done() const { return pos_ == bytes_.size(); }

  std::uint64_t Take(int n) {
    if (bytes_.size() - pos_ < static_cast<std::size_t>(n))
      throw FormatError("checkpoint truncated", bytes_.size());
    std::uint64_t v = 0;
    for (int i = 0; i < n; ++i) v |= static_cast<std::uint64_t>(bytes_[pos_ + i]) << (8 * i);
    pos_ += n;
    return v;
  }

  std::string Str(std::size_t n) {
    if (bytes_.size() - pos_ < n) throw FormatError("checkpoint truncated", bytes_.size());
    std::string s(reinterpret_cast<const char *>(bytes_.data() + pos_), n);
    pos_ += n;
    return s;
  }

 private:
  const std::vector<std::uint8_t> &bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> EncodeCheckpoint(const Checkpoint &c) {
  ValidateModel(c.params, c.config);
  const auto named = c.params.Named();
  nlohmann::json meta;
  meta["config"] = c.config.ToJson();
  meta["best_dev_mse"] = c.best_dev_mse;
  meta["best_epoch"] = c.best_epoch;
  meta["rng_state"] = c.rng_state;
  meta["input_dim"] = c.params.input_dim;
  nlohmann::json names = nlohmann::json::array();
  for (const auto &[name, t] : named) names.push_back(name);
  meta["tensors"] = names;
  const std::string text = meta.dump();

  std::vector<std::uint8_t> out(kCheckpointMagic, kCheckpointMagic + 4);
  PutU16(&out, kCheckpointVersion);
  PutU32(&out, static_cast<std::uint32_t>(text.size()));
  out.insert(out.end(), text.begin(), text.end());
  PutU32(&out, static_cast<std::uint32_t>(named.size()));
  for (const auto &[name, t] : named) {
    PutU32(&out, static_cast<std::uint32_t>(t->rows()));
    PutU32(&out, static_cast<std::uint32_t>(t->cols()));
    for (double v : t->values()) PutF64(&out, v);
  }
  return out;
}

Checkpoint DecodeCheckpoint(const std::vector<std::uint8_t> &bytes) {
  Reader in(bytes);
  if (in.Str(4) != std::string(kCheckpointMagic, 4)) throw FormatError("bad checkpoint magic", 0);
  const auto version = in.Take(2);
  if (version != kCheckpointVersion)
    throw FormatError("unsupported checkpoint version " + std::to_string(version), 4);
  const std::size_t meta_len = in.Take(4);
  const std::size_t meta_at = in.offset();
  nlohmann::json meta;
  Checkpoint c;
  try {
    meta = nlohmann::json::parse(in.Str(meta_len));
    c.config = ExperimentConfig::FromJson(meta.at("config"));
    c.best_dev_mse = meta.at("best_dev_mse").get<double>();
    c.best_epoch = meta.at("best_epoch").get<std::size_t>();
    c.rng_state = meta.at("rng_state").get<std::string>();
  } catch (const nlohmann::json::exception &e) {
    throw FormatError(std::string("bad checkpoint metadata: ") + e.what(), meta_at);
  } catch (const ConfigError &e) {
    throw FormatError(std::string("bad checkpoint config: ") + e.what(), meta_at);
  }
  const std::size_t input_dim = meta.value("input_dim", std::size_t{0});
  if (input_dim == 0) throw FormatError("checkpoint has no input_dim", meta_at);

  // Shapes come from the config; values are overwritten below.
  Rng scratch(0);
  c.params = InitModel(c.config, input_dim, scratch);
  auto named = c.params.Named();
  const std::size_t count_at = in.offset();
  if (in.Take(4) != named.size())
    throw FormatError("checkpoint tensor count does not match its config", count_at);
  for (auto &ref : named) {
    const std::size_t at = in.offset();
    const std::size_t rows = in.Take(4), cols = in.Take(4);
    if (rows != ref.value->rows() || cols != ref.value->cols())
      throw FormatError("checkpoint tensor " + ref.name + " has shape " +
                            ShapeString({rows, cols}) + ", expected " +
                            ShapeString(ref.value->shape()),
                        at);
    for (double &v : ref.value->data()) v = std::bit_cast<double>(in.Take(8));
  }
  if (!in.done()) throw FormatError("trailing bytes after checkpoint", in.offset());
  ValidateModel(c.params, c.config);
  return c;
}

void SaveCheckpoint(const Checkpoint &c, const std::filesystem::path &path) {
  WriteFileBytes(path, EncodeCheckpoint(c));
}

Checkpoint LoadCheckpoint(const std::filesystem::path &path) {
  try {
    return DecodeCheckpoint(ReadFileBytes(path));
  } catch (const FormatError &e) {
    throw FormatError(path.string() + ": " + e.detail(), e.offset());
  }
}

}  // namespace asplab
