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

#include "fgext/fgs/measures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fgext/matalg/spectral.hpp"

namespace fgext::fgs {

double overlap(const CovarianceMatrix& m1, const CovarianceMatrix& m2) {
  if (m1.dim() != m2.dim()) throw Error(ErrorCode::kDimensionMismatch, "overlap of unequal sizes");
  const Index d = m1.dim();
  const double det = (0.5 * (m1.matrix() * m2.matrix() - Matrix::Identity(d, d))).determinant();
  if (det < -1e-12) {
    std::ostringstream os;
    os << "det((M1 M2 - I)/2) = " << det;
    throw Error(ErrorCode::kNegativeDeterminant, os.str(), det);
  }
  return std::sqrt(std::max(det, 0.0));
}

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw Error(ErrorCode::kOutOfRange, "binary entropy argument outside [0, 1]", x);
  }
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double gaussian_entropy(const CovarianceMatrix& m) {
  const auto cf = matalg::canonical_form(m.body());
  double s = 0.0;
  for (Index j = 0; j < cf.lambdas.size(); ++j) {
    const double p = std::clamp(0.5 * (1.0 + cf.lambdas(j)), 0.0, 1.0);
    s += binary_entropy(p);
  }
  return s;
}

MutualInformation mutual_information(const BipartiteCM& b) {
  const double i_ab = gaussian_entropy(marginal(b, Side::kA)) +
                      gaussian_entropy(marginal(b, Side::kB)) - gaussian_entropy(b.cm());
  return {i_ab, 0.5 * i_ab};
}

AntisymmetricMatrix hamiltonian_from_cm(const CovarianceMatrix& m) {
  const auto cf = matalg::canonical_form(m.body());
  Vector values(cf.lambdas.size());
  for (Index j = 0; j < values.size(); ++j) {
    const double l = cf.lambdas(j);
    if (std::abs(l) >= 1.0 - 1e-12) {
      std::ostringstream os;
      os << "canonical value " << l << " makes the Hamiltonian diverge";
      throw Error(ErrorCode::kSingularState, os.str(), l);
    }
    values(j) = 2.0 * std::atanh(l);
  }
  return AntisymmetricMatrix(cf.rotation * matalg::block_diagonal(values) * cf.rotation.transpose());
}

Matrix cm_from_hamiltonian(const AntisymmetricMatrix& h) {
  const auto cf = matalg::canonical_form(h);
  Vector values(cf.lambdas.size());
  for (Index j = 0; j < values.size(); ++j) values(j) = std::tanh(0.5 * cf.lambdas(j));
  return cf.rotation * matalg::block_diagonal(values) * cf.rotation.transpose();
}

}  // namespace fgext::fgs
