// tests/unit/embedding_test.cc

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

#include <cmath>
#include <cstring>
#include <limits>

#include "asplab/data/embedding.h"
#include "asplab/error.h"
#include "test_util.h"

namespace asplab {
namespace {

using testing::RandomEmbedding;
using testing::TempDir;

std::uint64_t OffsetOf(const std::vector<std::uint8_t> &bytes) {
  try {
    DecodeEmbedding(bytes);
  } catch (const FormatError &e) {
    return e.offset();
  }
  ADD_FAILURE() << "no FormatError";
  return ~0ull;
}

TEST(EmbeddingFormatTest, HeaderLayoutIsLittleEndian) {
  const auto bytes = EncodeEmbedding(MakeEmbedding("x", 2, 3, 0x0104, 1.0f));
  ASSERT_GE(bytes.size(), kEmbeddingHeaderBytes);
  EXPECT_EQ(std::string(bytes.begin(), bytes.begin() + 4), "ASPE");
  EXPECT_EQ(bytes[4], 1);
  EXPECT_EQ(bytes[5], 0);
  EXPECT_EQ(bytes[6], 2);
  EXPECT_EQ(bytes[10], 3);
  EXPECT_EQ(bytes[14], 0x04);
  EXPECT_EQ(bytes[15], 0x01);
  EXPECT_EQ(bytes.size(), kEmbeddingHeaderBytes + 4u * 2 * 3 * 0x0104);
  // 1.0f is 0x3f800000.
  EXPECT_EQ(bytes[18], 0x00);
  EXPECT_EQ(bytes[21], 0x3f);
}

TEST(EmbeddingFormatTest, FullSizeRoundTripIsBitExact) {
  Rng rng(1);
  const EmbeddingTensor e = RandomEmbedding(24, 50, 1024, rng, "big");
  const auto bytes = EncodeEmbedding(e);
  const EmbeddingTensor back = DecodeEmbedding(bytes, "big");
  EXPECT_EQ(back.layers, 24u);
  EXPECT_EQ(back.frames, 50u);
  EXPECT_EQ(back.dim, 1024u);
  EXPECT_EQ(std::memcmp(back.data.data(), e.data.data(), e.data.size() * sizeof(float)), 0);
  EXPECT_EQ(EncodeEmbedding(back), bytes);
}

TEST(EmbeddingFormatTest, FileRoundTripUsesStemAsId) {
  TempDir dir("emb");
  Rng rng(2);
  const EmbeddingTensor e = RandomEmbedding(3, 4, 5, rng, "utt7");
  WriteEmbedding(e, dir / "utt7.aspe");
  const EmbeddingTensor back = ReadEmbedding(dir / "utt7.aspe");
  EXPECT_EQ(back.utterance_id, "utt7");
  EXPECT_EQ(back.data, e.data);
}

TEST(EmbeddingFormatTest, BadMagicAtOffsetZero) {
  auto bytes = EncodeEmbedding(MakeEmbedding("x", 1, 1, 1));
  std::memcpy(bytes.data(), "XXXX", 4);
  EXPECT_EQ(OffsetOf(bytes), 0u);
}

TEST(EmbeddingFormatTest, BadVersionAtOffsetFour) {
  auto bytes = EncodeEmbedding(MakeEmbedding("x", 1, 1, 1));
  bytes[4] = 2;
  EXPECT_EQ(OffsetOf(bytes), 4u);
}

TEST(EmbeddingFormatTest, ZeroDimensionsPointAtTheirField) {
  auto bytes = EncodeEmbedding(MakeEmbedding("x", 1, 1, 1));
  for (std::size_t field : {6u, 10u, 14u}) {
    auto b = bytes;
    b[field] = 0;
    EXPECT_EQ(OffsetOf(b), field);
  }
}

TEST(EmbeddingFormatTest, TruncatedPayloadReportsFileEnd) {
  auto bytes = EncodeEmbedding(MakeEmbedding("x", 2, 2, 2));
  bytes.resize(bytes.size() - 3);
  EXPECT_EQ(OffsetOf(bytes), bytes.size());
  try {
    DecodeEmbedding(bytes);
  } catch (const FormatError &e) {
    EXPECT_NE(std::string(e.what()).find("truncated"), std::string::npos);
  }
}

TEST(EmbeddingFormatTest, TruncatedHeaderAndTrailingBytes) {
  auto bytes = EncodeEmbedding(MakeEmbedding("x", 1, 1, 2));
  EXPECT_THROW(DecodeEmbedding({bytes.begin(), bytes.begin() + 10}), FormatError);
  bytes.push_back(0);
  EXPECT_EQ(OffsetOf(bytes), bytes.size() - 1);
}

TEST(EmbeddingFormatTest, NonFiniteValueRejected) {
  EmbeddingTensor e = MakeEmbedding("x", 1, 2, 2);
  auto bytes = EncodeEmbedding(e);
  const float nan = std::numeric_limits<float>::quiet_NaN();
  std::memcpy(bytes.data() + kEmbeddingHeaderBytes + 8, &nan, 4);
  EXPECT_EQ(OffsetOf(bytes), kEmbeddingHeaderBytes + 8);
}

TEST(EmbeddingFormatTest, FileErrorsNameThePath) {
  TempDir dir("emb-bad");
  WriteFileBytes(dir / "bad.aspe", {'N', 'O', 'P', 'E', 1, 0});
  try {
    ReadEmbedding(dir / "bad.aspe");
    FAIL();
  } catch (const FormatError &e) {
    EXPECT_NE(std::string(e.what()).find("bad.aspe"), std::string::npos);
    EXPECT_EQ(e.offset(), 0u);
  }
  EXPECT_THROW(ReadEmbedding(dir / "missing.aspe"), DataError);
}

TEST(EmbeddingTensorTest, ValidateCatchesBrokenInvariants) {
  EmbeddingTensor e = MakeEmbedding("x", 1, 2, 3);
  EXPECT_NO_THROW(e.Validate());
  e.data.pop_back();
  EXPECT_THROW(e.Validate(), DataError);
  EXPECT_THROW(MakeEmbedding("y", 0, 2, 3).Validate(), DataError);
}

}  // namespace
}  // namespace asplab
