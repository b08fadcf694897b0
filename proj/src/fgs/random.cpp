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

#include "fgext/fgs/random.hpp"

#include <Eigen/QR>

namespace fgext::fgs {

Matrix random_special_orthogonal(Index d, Rng& rng) {
  std::normal_distribution<double> normal;
  Matrix g(d, d);
  for (Index j = 0; j < d; ++j)
    for (Index i = 0; i < d; ++i) g(i, j) = normal(rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < d; ++j)
    if (r(j, j) < 0) q.col(j) = -q.col(j);
  if (q.determinant() < 0) q.col(0) = -q.col(0);
  return q;
}

namespace {

CovarianceMatrix from_lambdas(const Vector& lambdas, Rng& rng) {
  const Matrix o = random_special_orthogonal(2 * lambdas.size(), rng);
  const Matrix m = o * matalg::block_diagonal(lambdas) * o.transpose();
  return validate_cm(matalg::antisymmetrize(m));
}

}  // namespace

CovarianceMatrix random_cm(Index modes, Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vector l(modes);
  for (Index j = 0; j < modes; ++j) l(j) = u(rng);
  return from_lambdas(l, rng);
}

CovarianceMatrix random_pure_cm(Index modes, Rng& rng) {
  std::bernoulli_distribution coin;
  Vector l(modes);
  for (Index j = 0; j < modes; ++j) l(j) = coin(rng) ? 1.0 : -1.0;
  return from_lambdas(l, rng);
}

}  // namespace fgext::fgs
