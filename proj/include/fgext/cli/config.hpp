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

#include <cstdint>
#include <optional>
#include <string>

#include "fgext/extend/feasibility.hpp"

namespace fgext::cli {

enum class OutputFormat { kJson, kTable };

struct RunConfig {
  double eps_psd = 1e-9;
  double eps_feas = 1e-7;
  int max_iters = 20000;
  std::uint64_t seed = 0;
  OutputFormat output_format = OutputFormat::kJson;

  /// Throws InvalidParameter unless tolerances are positive and max_iters >= 1.
  void validate() const;

  extend::FeasibilityOptions feasibility_options() const;
};

/// Environment variable naming a config file used when --config is absent.
inline constexpr const char* kConfigEnvVar = "FGEXT_CONFIG";

/// Applies the keys present in a JSON config file on top of `base`.
/// Keys: eps_psd, eps_feas, max_iters, seed, output_format ("json" | "table").
RunConfig load_config_file(const std::string& path, RunConfig base = {});

/// Defaults, then the explicit path or else $FGEXT_CONFIG (if set).
RunConfig resolve_config(const std::optional<std::string>& explicit_path);

OutputFormat parse_output_format(const std::string& s);

}  // namespace fgext::cli
