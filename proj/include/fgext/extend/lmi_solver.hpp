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

#include <string>
#include <vector>

#include <Eigen/Sparse>

#include "fgext/core/types.hpp"

namespace fgext::extend {

/// One coefficient of an affine matrix function, stored sparsely.
struct LmiTerm {
  int var = 0;
  std::vector<Eigen::Triplet<double, Index>> entries;
};

/// Real symmetric block G(y) = base + sum_k y_k * term_k.
struct LmiBlock {
  std::string label;
  Matrix base;
  std::vector<LmiTerm> terms;

  Matrix evaluate(const Vector& y) const;
};

/// maximize t subject to G_b(y) - t I >= 0 for every block b.
struct MaxMarginProblem {
  int num_vars = 0;
  std::vector<LmiBlock> blocks;

  /// min_b lambda_min(G_b(y)); the margin achieved by y.
  double margin(const Vector& y) const;
  std::vector<double> block_margins(const Vector& y) const;
};

struct SolverOptions {
  /// Budget of Newton steps across all barrier stages.
  int max_newton_steps = 20000;
  /// Stop once the barrier duality-gap bound nu / s drops below this.
  double gap_tol = 1e-9;
  /// Barrier weight growth per outer stage.
  double growth = 8.0;
};

struct MaxMarginResult {
  Vector y;
  /// Lower bound on the optimal margin; the optimum lies in [t, t + gap].
  double t = 0.0;
  double gap = 0.0;
  /// margin(y) >= t.
  double margin = 0.0;
  /// True once some centered iterate certified t + gap as an upper bound on the
  /// optimum; the path may still stop early (budget, rounding) with a larger gap.
  bool converged = false;
  int newton_steps = 0;
};

/// Log-det barrier path following from the strictly feasible point (y0, margin(y0) - 1).
/// Deterministic for identical inputs.
MaxMarginResult maximize_margin(const MaxMarginProblem& problem, const Vector& y0,
                                const SolverOptions& options = {});

}  // namespace fgext::extend

namespace fgext::extend {

/// Number of free reals in a dim x dim antisymmetric matrix.
inline int antisym_param_count(Index dim) { return static_cast<int>(dim * (dim - 1) / 2); }

/// Adds coeff * Delta (Delta antisymmetric, parameters y[offset..]) to the
/// imaginary part K of a realified block [[A,-K],[K,A]], placing Delta at K(pos.., pos..).
void append_antisym_terms(LmiBlock& block, int offset, Index dim, Index pos, double coeff);

/// Upper-triangle row-major packing of an antisymmetric matrix.
void pack_antisym(const Matrix& delta, Vector& y, int offset);
Matrix unpack_antisym(const Vector& y, int offset, Index dim);

}  // namespace fgext::extend
