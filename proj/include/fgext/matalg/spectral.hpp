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

#include <vector>

#include "fgext/matalg/antisymmetric.hpp"

namespace fgext::matalg {

/// Williamson-type normal form K = O * blocks(lambda) * O^T with O in SO(2n).
struct CanonicalForm {
  Matrix rotation;
  /// Sorted descending. All entries are >= 0 except possibly the last one, which carries
  /// the sign needed to keep det(rotation) = +1.
  Vector lambdas;

  Matrix reconstruct() const;
};

/// Eigenvalues of the Hermitian matrix iK, ascending. They come in pairs +-lambda_j.
std::vector<double> hermitian_spectrum(const AntisymmetricMatrix& k);

/// Pfaffian by Parlett-Reid elimination with partial pivoting. Pf of the empty matrix is 1.
double pfaffian(const AntisymmetricMatrix& k);
double pfaffian(const Matrix& k);

CanonicalForm canonical_form(const AntisymmetricMatrix& k);

/// Real symmetric embedding [[A, -B], [B, A]] of the Hermitian matrix A + iB. Every
/// eigenvalue of A + iB appears twice in the embedding.
Matrix realify(const Matrix& sym, const Matrix& antisym);

struct PsdCheck {
  double min_eig;
  bool is_psd;
};

/// Minimum eigenvalue of A + iB evaluated on the real embedding.
PsdCheck realify_psd_check(const Matrix& sym, const AntisymmetricMatrix& antisym,
                           double eps_psd = default_tolerances().eps_psd);
PsdCheck realify_psd_check(const Matrix& sym, const Matrix& antisym,
                           double eps_psd = default_tolerances().eps_psd);

struct Norms {
  double op;
  double trace;
};

/// Operator (largest singular value) and trace (sum of singular values) norms.
Norms norms(const Matrix& k);

double min_eigenvalue(const Matrix& sym);

}  // namespace fgext::matalg
