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

#include "fgext/extend/feasibility.hpp"

namespace fgext::extend {

/// Extended CM on k1*n_A + k2*n_B modes ordered A_1..A_k1, B_1..B_k2.
/// Throws Error(kNotFeasible) unless r is Feasible.
fgs::CovarianceMatrix build_extension(const ExtendQuery& q, const FeasibilityResult& r,
                                      double eps_feas = default_tolerances().eps_feas);

/// Assembles the extension from explicit witnesses without validation.
Matrix assemble_extension(const ExtendQuery& q, const Matrix& delta_a, const Matrix& delta_b);

/// The (A_i, B_j) two-party block of an extension, 0-based copy indices.
Matrix extension_pair_marginal(const Matrix& ext, const ExtendQuery& q, int i, int j);

/// True iff every copy-swap leaves the matrix unchanged (exact comparison).
bool is_copy_permutation_invariant(const Matrix& ext, const ExtendQuery& q);

}  // namespace fgext::extend
