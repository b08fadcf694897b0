// Copyright 2026 The fgext Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fgext {

enum class ErrorCode {
  kDimensionOdd,
  kNotAntisymmetric,
  kDimensionMismatch,
  kNotBonaFide,
  kInvalidParameter,
  kNegativeDeterminant,
  kSingularState,
  kTooManyModes,
  kOddSubset,
  kIndexOutOfRange,
  kSolverStalled,
  kNotFeasible,
  kOutOfRange,
  kWrongSplit,
  kNotCP,
  kParseError,
};

std::string_view to_string(ErrorCode code);

/// Library-wide exception. `value()` carries the offending number when there is one
/// (violating eigenvalue, residue, margin).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::optional<double> value = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), value_(value) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<double> value() const noexcept { return value_; }

 private:
  ErrorCode code_;
  std::optional<double> value_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionOdd: return "DimensionOdd";
    case ErrorCode::kNotAntisymmetric: return "NotAntisymmetric";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNotBonaFide: return "NotBonaFide";
    case ErrorCode::kInvalidParameter: return "InvalidParameter";
    case ErrorCode::kNegativeDeterminant: return "NegativeDeterminant";
    case ErrorCode::kSingularState: return "SingularState";
    case ErrorCode::kTooManyModes: return "TooManyModes";
    case ErrorCode::kOddSubset: return "OddSubset";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kSolverStalled: return "SolverStalled";
    case ErrorCode::kNotFeasible: return "NotFeasible";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kWrongSplit: return "WrongSplit";
    case ErrorCode::kNotCP: return "NotCP";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace fgext
