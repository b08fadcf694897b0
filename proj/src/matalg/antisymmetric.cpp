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

#include "fgext/matalg/antisymmetric.hpp"

#include <sstream>

namespace fgext::matalg {

AntisymmetricMatrix::AntisymmetricMatrix(Index dim) : m_(Matrix::Zero(dim, dim)) {
  if (dim < 0 || dim % 2 != 0) {
    throw Error(ErrorCode::kDimensionOdd, "dimension " + std::to_string(dim) + " is not even");
  }
}

AntisymmetricMatrix::AntisymmetricMatrix(const Matrix& raw, double rtol) {
  if (raw.rows() != raw.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix is not square");
  }
  if (raw.rows() % 2 != 0) {
    throw Error(ErrorCode::kDimensionOdd,
                "dimension " + std::to_string(raw.rows()) + " is not even");
  }
  const double residue = (0.5 * (raw + raw.transpose())).norm();
  if (residue > rtol * raw.norm()) {
    std::ostringstream os;
    os << "symmetric residue " << residue << " exceeds " << rtol << " * " << raw.norm();
    throw Error(ErrorCode::kNotAntisymmetric, os.str(), residue);
  }
  m_ = 0.5 * (raw - raw.transpose());
  m_.diagonal().setZero();
}

AntisymmetricMatrix AntisymmetricMatrix::principal(const std::vector<Index>& idx) const {
  Matrix sub(idx.size(), idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = 0; b < idx.size(); ++b) {
      if (idx[a] < 0 || idx[a] >= dim() || idx[b] < 0 || idx[b] >= dim()) {
        throw Error(ErrorCode::kIndexOutOfRange, "principal submatrix index out of range");
      }
      sub(a, b) = m_(idx[a], idx[b]);
    }
  }
  if (sub.rows() % 2 != 0) {
    throw Error(ErrorCode::kDimensionOdd, "principal submatrix has odd dimension");
  }
  return AntisymmetricMatrix(std::move(sub), Trusted{});
}

AntisymmetricMatrix AntisymmetricMatrix::operator-() const {
  return AntisymmetricMatrix(Matrix(-m_), Trusted{});
}

AntisymmetricMatrix operator+(const AntisymmetricMatrix& a, const AntisymmetricMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::kDimensionMismatch, "sum of unequal sizes");
  return AntisymmetricMatrix(Matrix(a.m_ + b.m_), AntisymmetricMatrix::Trusted{});
}

AntisymmetricMatrix operator-(const AntisymmetricMatrix& a, const AntisymmetricMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::kDimensionMismatch, "difference of unequal sizes");
  return AntisymmetricMatrix(Matrix(a.m_ - b.m_), AntisymmetricMatrix::Trusted{});
}

AntisymmetricMatrix operator*(double s, const AntisymmetricMatrix& a) {
  return AntisymmetricMatrix(Matrix(s * a.m_), AntisymmetricMatrix::Trusted{});
}

AntisymmetricMatrix antisymmetrize(const Matrix& raw, double rtol) {
  return AntisymmetricMatrix(raw, rtol);
}

AntisymmetricMatrix mode_block(double v) {
  Matrix m(2, 2);
  m << 0.0, v, -v, 0.0;
  return AntisymmetricMatrix(m);
}

AntisymmetricMatrix direct_sum(const AntisymmetricMatrix& a, const AntisymmetricMatrix& b) {
  Matrix m = Matrix::Zero(a.dim() + b.dim(), a.dim() + b.dim());
  m.topLeftCorner(a.dim(), a.dim()) = a.matrix();
  m.bottomRightCorner(b.dim(), b.dim()) = b.matrix();
  return AntisymmetricMatrix(m);
}

Matrix block_diagonal(const Vector& values) {
  const Index n = values.size();
  Matrix m = Matrix::Zero(2 * n, 2 * n);
  for (Index j = 0; j < n; ++j) {
    m(2 * j, 2 * j + 1) = values(j);
    m(2 * j + 1, 2 * j) = -values(j);
  }
  return m;
}

}  // namespace fgext::matalg
