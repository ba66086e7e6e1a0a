// Copyright 2026 The leafdiam Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace leafdiam {

enum class ErrorCode {
  kNotATree,
  kVertexOutOfRange,
  kDegenerateOrder,
  kParseError,
  kInvalidStem,
  kLeafOnStem,
  kNotALeaf,
  kNoBigVertex,
  kStemNotDiametral,
  kInfeasible,
  kEmptySpider,
  kInvalidSpider,
  kEntryOutOfRange,
  kCapExceeded,
  kInvariantViolation,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotATree: return "not a tree";
    case ErrorCode::kVertexOutOfRange: return "vertex out of range";
    case ErrorCode::kDegenerateOrder: return "degenerate order";
    case ErrorCode::kParseError: return "parse error";
    case ErrorCode::kInvalidStem: return "invalid stem";
    case ErrorCode::kLeafOnStem: return "leaf on stem";
    case ErrorCode::kNotALeaf: return "not a leaf";
    case ErrorCode::kNoBigVertex: return "no big vertex";
    case ErrorCode::kStemNotDiametral: return "stem not diametral";
    case ErrorCode::kInfeasible: return "infeasible";
    case ErrorCode::kEmptySpider: return "empty spider";
    case ErrorCode::kInvalidSpider: return "invalid spider";
    case ErrorCode::kEntryOutOfRange: return "entry out of range";
    case ErrorCode::kCapExceeded: return "cap exceeded";
    case ErrorCode::kInvariantViolation: return "invariant violation";
  }
  return "unknown";
}

/// Every failure raised by the library. The message is already prefixed with
/// the category, e.g. "infeasible: d=1 requires n=2".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& detail)
      : Error(ErrorCode::kParseError,
              "line " + std::to_string(line) + ": " + detail),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace leafdiam
