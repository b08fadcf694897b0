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

#include "fgext/extend/extension.hpp"

namespace fgext::extend {

Matrix assemble_extension(const ExtendQuery& q, const Matrix& delta_a, const Matrix& delta_b) {
  const Index da = 2 * q.b.n_a();
  const Index db = 2 * q.b.n_b();
  const Matrix ma = q.b.m_a();
  const Matrix mb = q.b.m_b();
  const Matrix x = q.b.x();
  const Matrix z = ma - delta_a;
  const Matrix y = mb - delta_b;
  const Index off_b = q.k1 * da;
  Matrix ext = Matrix::Zero(off_b + q.k2 * db, off_b + q.k2 * db);
  for (int i = 0; i < q.k1; ++i) {
    for (int j = 0; j < q.k1; ++j) ext.block(i * da, j * da, da, da) = (i == j) ? ma : z;
    for (int j = 0; j < q.k2; ++j) {
      ext.block(i * da, off_b + j * db, da, db) = x;
      ext.block(off_b + j * db, i * da, db, da) = -x.transpose();
    }
  }
  for (int i = 0; i < q.k2; ++i)
    for (int j = 0; j < q.k2; ++j) ext.block(off_b + i * db, off_b + j * db, db, db) = (i == j) ? mb : y;
  return ext;
}

Matrix extension_pair_marginal(const Matrix& ext, const ExtendQuery& q, int i, int j) {
  const Index da = 2 * q.b.n_a();
  const Index db = 2 * q.b.n_b();
  const Index off_b = q.k1 * da;
  Matrix m(da + db, da + db);
  m.topLeftCorner(da, da) = ext.block(i * da, i * da, da, da);
  m.topRightCorner(da, db) = ext.block(i * da, off_b + j * db, da, db);
  m.bottomLeftCorner(db, da) = ext.block(off_b + j * db, i * da, db, da);
  m.bottomRightCorner(db, db) = ext.block(off_b + j * db, off_b + j * db, db, db);
  return m;
}

bool is_copy_permutation_invariant(const Matrix& ext, const ExtendQuery& q) {
  const Index da = 2 * q.b.n_a();
  const Index db = 2 * q.b.n_b();
  const Index off_b = q.k1 * da;
  // Transpositions generate the symmetric group; checking swaps with copy 0 suffices.
  auto permuted = [&](bool side_a, int c) {
    const Index n = ext.rows();
    Eigen::VectorXi perm(n);
    for (Index p = 0; p < n; ++p) perm(p) = static_cast<int>(p);
    const Index w = side_a ? da : db;
    const Index base = side_a ? 0 : off_b;
    for (Index t = 0; t < w; ++t) std::swap(perm(base + t), perm(base + c * w + t));
    Matrix out(n, n);
    for (Index r = 0; r < n; ++r)
      for (Index s = 0; s < n; ++s) out(r, s) = ext(perm(r), perm(s));
    return out;
  };
  for (int c = 1; c < q.k1; ++c)
    if (permuted(true, c) != ext) return false;
  for (int c = 1; c < q.k2; ++c)
    if (permuted(false, c) != ext) return false;
  return true;
}

fgs::CovarianceMatrix build_extension(const ExtendQuery& q, const FeasibilityResult& r, double eps_feas) {
  if (!r.feasible() || !r.delta_a || !r.delta_b) {
    throw Error(ErrorCode::kNotFeasible, "no extension witness (status " + to_string(r.status) + ")");
  }
  const Matrix ext = assemble_extension(q, r.delta_a->matrix(), r.delta_b->matrix());
  if (!is_copy_permutation_invariant(ext, q)) {
    throw std::logic_error("assembled extension is not copy-permutation invariant");
  }
  return fgs::validate_cm(ext, eps_feas);
}

}  // namespace fgext::extend
