// Copyright 2026 The splcit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPLCIT_ERROR_H_
#define SPLCIT_ERROR_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace splcit {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kDimensionMismatch,
  kCapExceeded,
  kUndefinedMetric,
  kVerification,
  kIo,
};

// Base class for every error raised by the library. The code lets the CLI
// map failures onto its exit statuses without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Syntax or semantic error in a text input, with a 1-based location.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(ErrorCode::kParse, Format(message, line, column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string Format(const std::string& message, int line, int column) {
    return std::to_string(line) + ":" + std::to_string(column) + ": " +
           message;
  }

  int line_;
  int column_;
};

class CapExceededError : public Error {
 public:
  explicit CapExceededError(std::uint64_t cap)
      : Error(ErrorCode::kCapExceeded,
              "enumeration overflow: more than " + std::to_string(cap) +
                  " products"),
        cap_(cap) {}

  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t cap_;
};

}  // namespace splcit

#endif  // SPLCIT_ERROR_H_
