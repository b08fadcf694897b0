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

#include "fgext/matalg/antisymmetric.hpp"

namespace fgext::fgs {

using matalg::AntisymmetricMatrix;

/// Majorana covariance matrix of a fermionic state, M_pq = Tr(i gamma_p gamma_q rho).
/// Instances only exist for matrices that passed the bona fide check.
class CovarianceMatrix {
 public:
  const AntisymmetricMatrix& body() const noexcept { return body_; }
  const Matrix& matrix() const noexcept { return body_.matrix(); }
  Index modes() const noexcept { return body_.modes(); }
  Index dim() const noexcept { return body_.dim(); }

  /// M^2 = -I, i.e. every |lambda_j| = 1.
  bool is_pure(double tol = 1e-9) const;

 private:
  explicit CovarianceMatrix(AntisymmetricMatrix body) : body_(std::move(body)) {}
  friend CovarianceMatrix validate_cm(const AntisymmetricMatrix&, double);

  AntisymmetricMatrix body_;
};

/// Accepts K iff the spectrum of iK lies in [-1 - eps_psd, 1 + eps_psd]. Throws
/// NotBonaFide with the offending eigenvalue otherwise.
CovarianceMatrix validate_cm(const AntisymmetricMatrix& k,
                             double eps_psd = default_tolerances().eps_psd);
CovarianceMatrix validate_cm(const Matrix& raw, double eps_psd = default_tolerances().eps_psd);

/// A covariance matrix with a declared split into nA modes of A followed by nB modes of B.
/// Blocks: M = [[M_A, X], [-X^T, M_B]].
class BipartiteCM {
 public:
  BipartiteCM(CovarianceMatrix cm, Index n_a, Index n_b);

  const CovarianceMatrix& cm() const noexcept { return cm_; }
  Index n_a() const noexcept { return n_a_; }
  Index n_b() const noexcept { return n_b_; }

  Matrix m_a() const { return cm_.matrix().topLeftCorner(2 * n_a_, 2 * n_a_); }
  Matrix m_b() const { return cm_.matrix().bottomRightCorner(2 * n_b_, 2 * n_b_); }
  Matrix x() const { return cm_.matrix().topRightCorner(2 * n_a_, 2 * n_b_); }

 private:
  CovarianceMatrix cm_;
  Index n_a_;
  Index n_b_;
};

enum class Side { kA, kB };

/// Reduced covariance matrix of one side (a principal block, hence bona fide).
CovarianceMatrix marginal(const BipartiteCM& b, Side side);

/// M_A (+) M_B with a zero cross block.
BipartiteCM product_cm(const CovarianceMatrix& m_a, const CovarianceMatrix& m_b);

/// Always true for a covariance-matrix state: Gaussian states built from a CM commute with
/// the parity operator. Mirrors oracle::check_parity_superselection.
bool check_parity_superselection_cm(const CovarianceMatrix& m);

}  // namespace fgext::fgs
