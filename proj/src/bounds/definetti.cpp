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

#include "fgext/bounds/definetti.hpp"

#include <algorithm>
#include <cmath>

#include "fgext/matalg/spectral.hpp"

namespace fgext::bounds {

DeFinettiReport definetti_bounds(Index n_a, Index n_b, int k1, int k2) {
  if (n_a < 1 || n_b < 1 || k1 < 1 || k2 < 1) {
    throw Error(ErrorCode::kInvalidParameter, "mode counts and multiplicities must be positive");
  }
  DeFinettiReport r;
  r.n_a = n_a;
  r.n_b = n_b;
  r.k1 = k1;
  r.k2 = k2;
  const double root = std::sqrt(static_cast<double>(k1) * k2);
  const double m = std::min({static_cast<double>(n_a), static_cast<double>(n_b), root});
  r.t = std::min(2.0, 2.0 * m / root);
  r.trace_upper = r.t;
  const double modes = static_cast<double>(n_a + n_b);
  const double h = binary_entropy(r.t / 2.0);
  r.er_upper = 0.5 * modes * r.t + h;
  r.esq_upper = 0.25 * modes * r.t + 0.5 * h;
  return r;
}

double trace_upper_from_cm(const fgs::BipartiteCM& b) {
  const Matrix x = b.x();
  return x.size() == 0 ? 0.0 : matalg::norms(x).trace;
}

}  // namespace fgext::bounds
