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
#include <string>

#include "fgext/channels/channel.hpp"

namespace fgext::channels {

// Text format ('#' starts a comment):
//
//   n_in 1
//   n_out 1
//   x_matrix
//   <2 n_out rows of 2 n_in numbers>
//   n_matrix
//   <2 n_out rows of 2 n_out numbers>
struct ChannelDocument {
  Index n_in = 0;
  Index n_out = 0;
  Matrix x;
  Matrix n;
};

ChannelDocument parse_channel_document(std::istream& in);
ChannelDocument read_channel_document(const std::string& path);

void write_channel_document(std::ostream& out, const GaussianChannel& ch);
void write_channel_file(const std::string& path, const GaussianChannel& ch);

}  // namespace fgext::channels
