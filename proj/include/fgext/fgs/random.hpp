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

#include <random>

#include "fgext/fgs/covariance.hpp"

namespace fgext::fgs {

using Rng = std::mt19937_64;

/// Haar-distributed element of SO(d).
Matrix random_special_orthogonal(Index d, Rng& rng);

/// O diag(lambda_j blocks) O^T with lambda_j uniform in [-1, 1].
CovarianceMatrix random_cm(Index modes, Rng& rng);

/// Same, with all |lambda_j| = 1.
CovarianceMatrix random_pure_cm(Index modes, Rng& rng);

}  // namespace fgext::fgs
