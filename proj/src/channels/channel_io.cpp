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

#include "fgext/channels/channel_io.hpp"

#include <fstream>
#include <sstream>

#include "fgext/fgs/cm_io.hpp"

namespace fgext::channels {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

ChannelDocument parse_channel_document(std::istream& in) {
  ChannelDocument doc;
  bool have_x = false;
  bool have_n = false;
  int line = 0;
  while (const auto text = fgs::next_content_line(in, line)) {
    std::istringstream is(*text);
    std::string key;
    is >> key;
    if (key == "n_in" || key == "n_out") {
      long long v = -1;
      if (!(is >> v) || v < 1) fail(line, key + " must be a positive integer");
      (key == "n_in" ? doc.n_in : doc.n_out) = static_cast<Index>(v);
    } else if (key == "x_matrix") {
      if (doc.n_in == 0 || doc.n_out == 0) fail(line, "x_matrix before n_in / n_out");
      doc.x = fgs::read_matrix_rows(in, line, 2 * doc.n_out, 2 * doc.n_in);
      have_x = true;
    } else if (key == "n_matrix") {
      if (doc.n_out == 0) fail(line, "n_matrix before n_out");
      doc.n = fgs::read_matrix_rows(in, line, 2 * doc.n_out, 2 * doc.n_out);
      have_n = true;
    } else {
      fail(line, "unknown key '" + key + "'");
    }
  }
  if (!have_x || !have_n) throw Error(ErrorCode::kParseError, "channel needs x_matrix and n_matrix");
  return doc;
}

ChannelDocument read_channel_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open '" + path + "'");
  return parse_channel_document(in);
}

void write_channel_document(std::ostream& out, const GaussianChannel& ch) {
  out << "n_in " << ch.n_in() << "\nn_out " << ch.n_out() << "\nx_matrix\n"
      << fgs::format_matrix_rows(ch.x()) << "n_matrix\n"
      << fgs::format_matrix_rows(ch.n().matrix());
}

void write_channel_file(const std::string& path, const GaussianChannel& ch) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kParseError, "cannot write '" + path + "'");
  write_channel_document(out, ch);
}

}  // namespace fgext::channels
