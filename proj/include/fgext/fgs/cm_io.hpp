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

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "fgext/fgs/covariance.hpp"

namespace fgext::fgs {

// Text format, one record per file:
//
//   # comment
//   modes 2
//   split 1 1          (optional)
//   matrix
//   0 0.5 0 0.5
//   ...                (2n rows of 2n whitespace-separated decimals)
//
// Majorana indices are ordered mode by mode, all of A before all of B.

struct CmDocument {
  Index modes = 0;
  std::optional<std::pair<Index, Index>> split;
  Matrix matrix;
};

/// Parses the text format. Throws ParseError on malformed input and on matrices that fail
/// antisymmetrization.
CmDocument parse_cm_document(std::istream& in);
CmDocument read_cm_document(const std::string& path);

void write_cm_document(std::ostream& out, const Matrix& m,
                       std::optional<std::pair<Index, Index>> split = std::nullopt);
void write_cm_file(const std::string& path, const Matrix& m,
                   std::optional<std::pair<Index, Index>> split = std::nullopt);

/// Matrix formatted with 17 significant digits, one row per line.
std::string format_matrix_rows(const Matrix& m);

/// Next non-blank line with any '#' comment removed; advances `line`.
std::optional<std::string> next_content_line(std::istream& in, int& line);

/// Reads rows x cols numbers, one matrix row per content line.
Matrix read_matrix_rows(std::istream& in, int& line, Index rows, Index cols);

}  // namespace fgext::fgs
