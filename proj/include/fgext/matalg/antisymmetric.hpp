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

#include "fgext/core/error.hpp"
#include "fgext/core/types.hpp"

namespace fgext::matalg {

/// Real antisymmetric matrix of even dimension 2n. The diagonal is exactly zero and
/// entries(i, j) == -entries(j, i) bit-for-bit after construction.
class AntisymmetricMatrix {
 public:
  /// Zero matrix of dimension `dim` (must be even).
  explicit AntisymmetricMatrix(Index dim = 0);

  /// Antisymmetrizes `raw`; throws NotAntisymmetric if the symmetric residue exceeds
  /// `rtol` relative to the Frobenius norm of `raw`.
  explicit AntisymmetricMatrix(const Matrix& raw, double rtol = default_tolerances().antisym_rtol);

  const Matrix& matrix() const noexcept { return m_; }
  Index dim() const noexcept { return m_.rows(); }
  Index modes() const noexcept { return m_.rows() / 2; }
  double operator()(Index i, Index j) const { return m_(i, j); }

  /// Principal submatrix on the given (sorted or unsorted) index list.
  AntisymmetricMatrix principal(const std::vector<Index>& idx) const;

  AntisymmetricMatrix operator-() const;
  friend AntisymmetricMatrix operator+(const AntisymmetricMatrix& a, const AntisymmetricMatrix& b);
  friend AntisymmetricMatrix operator-(const AntisymmetricMatrix& a, const AntisymmetricMatrix& b);
  friend AntisymmetricMatrix operator*(double s, const AntisymmetricMatrix& a);

 private:
  struct Trusted {};
  AntisymmetricMatrix(Matrix m, Trusted) : m_(std::move(m)) {}

  Matrix m_;
};

/// (raw - raw^T) / 2 with a zeroed diagonal. Errors on odd or non-square input and on a
/// symmetric residue larger than rtol * ||raw||_F.
AntisymmetricMatrix antisymmetrize(const Matrix& raw,
                                   double rtol = default_tolerances().antisym_rtol);

/// Single-mode block [[0, v], [-v, 0]].
AntisymmetricMatrix mode_block(double v);

/// Block-diagonal direct sum.
AntisymmetricMatrix direct_sum(const AntisymmetricMatrix& a, const AntisymmetricMatrix& b);

/// 2x2 blocks [[0, v_j], [-v_j, 0]] along the diagonal.
Matrix block_diagonal(const Vector& values);

}  // namespace fgext::matalg
