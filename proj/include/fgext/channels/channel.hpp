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
#include "fgext/fgs/covariance.hpp"
#include "fgext/fgs/random.hpp"

namespace fgext::channels {

using fgs::AntisymmetricMatrix;
using fgs::BipartiteCM;
using fgs::CovarianceMatrix;

/// M -> X M X^T + N on Majorana covariance matrices.
class GaussianChannel {
 public:
  const Matrix& x() const noexcept { return x_; }
  const AntisymmetricMatrix& n() const noexcept { return n_; }
  Index n_in() const noexcept { return x_.cols() / 2; }
  Index n_out() const noexcept { return x_.rows() / 2; }

 private:
  GaussianChannel(Matrix x, AntisymmetricMatrix n) : x_(std::move(x)), n_(std::move(n)) {}
  friend GaussianChannel validate_channel(const Matrix&, const Matrix&, double);

  Matrix x_;
  AntisymmetricMatrix n_;
};

/// Complete positivity: I + iN - X X^T >= -eps_psd. Throws NotCP with the
/// offending eigenvalue, DimensionMismatch / DimensionOdd / NotAntisymmetric on shape errors.
GaussianChannel validate_channel(const Matrix& x, const Matrix& n,
                                 double eps_psd = default_tolerances().eps_psd);

CovarianceMatrix apply(const GaussianChannel& ch, const CovarianceMatrix& m,
                       double eps_psd = default_tolerances().eps_psd);

/// Independent channels on the two halves of a bipartite state.
BipartiteCM apply_local(const GaussianChannel& on_a, const GaussianChannel& on_b,
                        const BipartiteCM& b, double eps_psd = default_tolerances().eps_psd);

/// [[N, X], [-X^T, 0]] with split (n_out, n_in).
BipartiteCM choi_cm(const GaussianChannel& ch);

/// Exists antisymmetric D with I - iD >= 0 and I - 2XX^T + i(2N - D) >= 0.
/// delta_a of the result holds D when Feasible.
extend::FeasibilityResult antidegradable(const GaussianChannel& ch,
                                         const extend::FeasibilityOptions& opts = {});

/// Replacement channel test ||X||_op <= eps_psd (cross-checked against a product Choi state).
bool is_entanglement_breaking(const GaussianChannel& ch,
                              double eps_psd = default_tolerances().eps_psd);

/// Single-mode pure loss with vacuum environment: X = sqrt(lam) I, N = (1 - lam) * vacuum.
GaussianChannel pure_loss(double lam);

/// k copies of the output against one copy of the reference.
extend::FeasibilityResult channel_k_extendible(const GaussianChannel& ch, int k,
                                               const extend::FeasibilityOptions& opts = {});

/// X = sqrt(1 - r) Q, N = r M0 with Q in SO(2n), M0 a random state and r uniform in [0, 1].
GaussianChannel random_channel(Index modes, fgs::Rng& rng);

}  // namespace fgext::channels
