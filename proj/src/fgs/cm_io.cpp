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

#include "fgext/fgs/cm_io.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace fgext::fgs {
namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + msg);
}

std::string strip_comment(const std::string& s) {
  const auto pos = s.find('#');
  return pos == std::string::npos ? s : s.substr(0, pos);
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

std::vector<double> parse_row(const std::string& s, int line) {
  std::istringstream is(s);
  std::vector<double> row;
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      row.push_back(std::stod(tok, &used));
      if (used != tok.size()) parse_fail(line, "bad number '" + tok + "'");
    } catch (const std::logic_error&) {
      parse_fail(line, "bad number '" + tok + "'");
    }
  }
  return row;
}

}  // namespace

std::optional<std::string> next_content_line(std::istream& in, int& line) {
  std::string raw;
  while (std::getline(in, raw)) {
    ++line;
    std::string text = strip_comment(raw);
    if (!blank(text)) return text;
  }
  return std::nullopt;
}

Matrix read_matrix_rows(std::istream& in, int& line, Index rows, Index cols) {
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const auto text = next_content_line(in, line);
    if (!text) parse_fail(line, "matrix truncated");
    const auto row = parse_row(*text, line);
    if (static_cast<Index>(row.size()) != cols) {
      parse_fail(line, "expected " + std::to_string(cols) + " entries, got " + std::to_string(row.size()));
    }
    for (Index c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

CmDocument parse_cm_document(std::istream& in) {
  CmDocument doc;
  bool have_modes = false;
  bool have_matrix = false;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = strip_comment(raw);
    if (blank(text)) continue;
    std::istringstream is(text);
    std::string key;
    is >> key;
    if (key == "modes") {
      long long n = -1;
      if (!(is >> n) || n < 1) parse_fail(line, "modes must be a positive integer");
      doc.modes = static_cast<Index>(n);
      have_modes = true;
    } else if (key == "split") {
      long long a = -1, b = -1;
      if (!(is >> a >> b) || a < 0 || b < 0) parse_fail(line, "split needs two nonnegative integers");
      doc.split = std::make_pair(static_cast<Index>(a), static_cast<Index>(b));
    } else if (key == "matrix") {
      if (!have_modes) parse_fail(line, "matrix before modes");
      doc.matrix = read_matrix_rows(in, line, 2 * doc.modes, 2 * doc.modes);
      have_matrix = true;
    } else {
      parse_fail(line, "unknown key '" + key + "'");
    }
  }
  if (!have_matrix) throw Error(ErrorCode::kParseError, "missing matrix section");
  if (doc.split && doc.split->first + doc.split->second != doc.modes) {
    throw Error(ErrorCode::kParseError, "split does not add up to modes");
  }
  try {
    doc.matrix = AntisymmetricMatrix(doc.matrix).matrix();
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  return doc;
}

CmDocument read_cm_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open '" + path + "'");
  return parse_cm_document(in);
}

std::string format_matrix_rows(const Matrix& m) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      // Avoid printing "-0".
      os << (m(r, c) == 0.0 ? 0.0 : m(r, c));
    }
    os << '\n';
  }
  return os.str();
}

void write_cm_document(std::ostream& out, const Matrix& m,
                       std::optional<std::pair<Index, Index>> split) {
  out << "modes " << m.rows() / 2 << '\n';
  if (split) out << "split " << split->first << ' ' << split->second << '\n';
  out << "matrix\n" << format_matrix_rows(m);
}

void write_cm_file(const std::string& path, const Matrix& m,
                   std::optional<std::pair<Index, Index>> split) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kParseError, "cannot write '" + path + "'");
  write_cm_document(out, m, split);
}

}  // namespace fgext::fgs
