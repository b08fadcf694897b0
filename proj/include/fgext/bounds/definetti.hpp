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
#include <utility>

#include "fgext/fgs/covariance.hpp"
#include "fgext/fgs/measures.hpp"

namespace fgext::bounds {

using fgs::binary_entropy;

/// Distance and entanglement bounds for (k1,k2)-extendible states on n_A + n_B modes.
/// Entropic quantities are in bits.
struct DeFinettiReport {
  Index n_a = 0;
  Index n_b = 0;
  int k1 = 1;
  int k2 = 1;
  double t = 0.0;
  double trace_upper = 0.0;
  double er_upper = 0.0;
  double esq_upper = 0.0;
  /// State-dependent; definetti_bounds leaves these empty for callers to fill in.
  std::optional<double> trace_lower;
  std::optional<std::pair<int, int>> family_params;
};

/// T = (2/sqrt(k1 k2)) min(n_A, n_B, sqrt(k1 k2)), never above 2.
DeFinettiReport definetti_bounds(Index n_a, Index n_b, int k1, int k2);

/// ||X||_1 of the cross block; bounds the trace distance to the marginal product.
double trace_upper_from_cm(const fgs::BipartiteCM& b);

}  // namespace fgext::bounds
