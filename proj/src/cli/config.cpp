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

#include "fgext/cli/config.hpp"

#include <cstdlib>
#include <fstream>

#include "json.hpp"

namespace fgext::cli {

void RunConfig::validate() const {
  if (!(eps_psd > 0.0)) throw Error(ErrorCode::kInvalidParameter, "eps_psd must be positive", eps_psd);
  if (!(eps_feas > 0.0)) throw Error(ErrorCode::kInvalidParameter, "eps_feas must be positive", eps_feas);
  if (max_iters < 1) throw Error(ErrorCode::kInvalidParameter, "max_iters must be >= 1");
}

extend::FeasibilityOptions RunConfig::feasibility_options() const {
  extend::FeasibilityOptions o;
  o.eps_feas = eps_feas;
  o.max_iters = max_iters;
  o.seed = seed;
  return o;
}

OutputFormat parse_output_format(const std::string& s) {
  if (s == "json") return OutputFormat::kJson;
  if (s == "table") return OutputFormat::kTable;
  throw Error(ErrorCode::kInvalidParameter, "output format must be json or table, got '" + s + "'");
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open config '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
    if (!j.is_object()) throw Error(ErrorCode::kParseError, "config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
      if (key == "eps_psd") base.eps_psd = value.get<double>();
      else if (key == "eps_feas") base.eps_feas = value.get<double>();
      else if (key == "max_iters") base.max_iters = value.get<int>();
      else if (key == "seed") base.seed = value.get<std::uint64_t>();
      else if (key == "output_format") base.output_format = parse_output_format(value.get<std::string>());
      else throw Error(ErrorCode::kParseError, "unknown config key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, "config '" + path + "': " + e.what());
  }
  base.validate();
  return base;
}

RunConfig resolve_config(const std::optional<std::string>& explicit_path) {
  if (explicit_path) return load_config_file(*explicit_path);
  if (const char* env = std::getenv(kConfigEnvVar); env && *env) return load_config_file(env);
  return RunConfig{};
}

}  // namespace fgext::cli
