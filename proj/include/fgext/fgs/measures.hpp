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

#include "fgext/fgs/covariance.hpp"

namespace fgext::fgs {

/// |Tr(rho_1 rho_2)| = sqrt(det((M1 M2 - I) / 2)). Small negative determinants (down to
/// -1e-12) are clamped to zero; anything below throws NegativeDeterminant.
double overlap(const CovarianceMatrix& m1, const CovarianceMatrix& m2);

/// Binary entropy in bits, h(0) = h(1) = 0.
double binary_entropy(double x);

/// Von Neumann entropy in bits, sum_j h((1 + lambda_j) / 2).
double gaussian_entropy(const CovarianceMatrix& m);

struct MutualInformation {
  double i_ab;
  /// Half the mutual information.
  double e_cq;
};

MutualInformation mutual_information(const BipartiteCM& b);

/// Quadratic Hamiltonian h with tanh(h / 2) = M, so rho is proportional to
/// exp((i / 4) gamma^T h gamma). Throws SingularState when some |lambda_j| >= 1 - 1e-12.
AntisymmetricMatrix hamiltonian_from_cm(const CovarianceMatrix& m);

/// tanh(h / 2) evaluated blockwise in the canonical basis of h.
Matrix cm_from_hamiltonian(const AntisymmetricMatrix& h);

}  // namespace fgext::fgs
