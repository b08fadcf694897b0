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
#include <vector>

#include "fgext/channels/channel.hpp"
#include "fgext/core/error.hpp"

namespace fgext::cli {

/// Process exit codes; scripts rely on these staying fixed.
enum ExitCode : int {
  kExitOk = 0,          // valid / feasible / suite passed
  kExitNegative = 1,    // infeasible, not a channel, not entanglement-breaking, suite failed
  kExitNotBonaFide = 2,
  kExitBadInput = 3,    // unreadable or malformed input
  kExitStalled = 4,
  kExitUsage = 5,       // bad flags or parameter values
};

int exit_code_for(ErrorCode code);

/// A covariance matrix named either by a file path or by a built-in spec:
/// family:K1,K2  eps:E  bell:phi+|phi-|psi+|psi-  epr:M  vacuum:N  single:L
struct CmSource {
  std::string label;
  Matrix matrix;
  std::optional<std::pair<Index, Index>> split;
};

CmSource load_cm_source(const std::string& spec);

/// A channel named by a file path or by loss:L, identity:N, replacement:N.
channels::GaussianChannel load_channel_source(const std::string& spec, double eps_psd);

/// Runs one command line (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fgext::cli
