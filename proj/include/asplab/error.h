// asplab/error.h

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

#ifndef ASPLAB_ERROR_H_
#define ASPLAB_ERROR_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace asplab {

// Root of every error raised by the library. The CLI maps the three
// subclasses below onto exit codes 2, 3 and 4.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid experiment configuration; `field()` names the offending key.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string &what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string &field() const { return field_; }

 private:
  std::string field_;
};

// Missing, malformed or inconsistent input data.
class DataError : public Error {
 public:
  using Error::Error;
};

// Binary file decoding failure at a known byte offset.
class FormatError : public DataError {
 public:
  FormatError(const std::string &what, std::uint64_t offset)
      : DataError(what + " (at byte offset " + std::to_string(offset) + ")"),
        detail_(what),
        offset_(offset) {}
  std::uint64_t offset() const { return offset_; }
  // Message without the offset suffix.
  const std::string &detail() const { return detail_; }

 private:
  std::string detail_;
  std::uint64_t offset_;
};

// Statistical or numerical failure: degenerate variance, misaligned test
// sets, NaN losses.
class AnalysisError : public Error {
 public:
  using Error::Error;
};

// Operand shapes do not satisfy an op's rules.
class ShapeError : public Error {
 public:
  using Error::Error;
};

}  // namespace asplab

#endif  // ASPLAB_ERROR_H_
