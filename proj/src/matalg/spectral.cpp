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

#include "fgext/matalg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace fgext::matalg {

Matrix CanonicalForm::reconstruct() const {
  return rotation * block_diagonal(lambdas) * rotation.transpose();
}

Matrix realify(const Matrix& sym, const Matrix& antisym) {
  if (sym.rows() != antisym.rows() || sym.cols() != antisym.cols() || sym.rows() != sym.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "realify: blocks must be square and equal-sized");
  }
  const Index d = sym.rows();
  Matrix out(2 * d, 2 * d);
  out.topLeftCorner(d, d) = sym;
  out.topRightCorner(d, d) = -antisym;
  out.bottomLeftCorner(d, d) = antisym;
  out.bottomRightCorner(d, d) = sym;
  return out;
}

double min_eigenvalue(const Matrix& sym) {
  if (sym.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

std::vector<double> hermitian_spectrum(const AntisymmetricMatrix& k) {
  const Index d = k.dim();
  if (d == 0) return {};
  Eigen::SelfAdjointEigenSolver<Matrix> es(realify(Matrix::Zero(d, d), k.matrix()),
                                           Eigen::EigenvaluesOnly);
  // The embedding doubles every eigenvalue; keep one of each adjacent pair.
  std::vector<double> out;
  out.reserve(d);
  for (Index i = 0; i < 2 * d; i += 2) {
    out.push_back(0.5 * (es.eigenvalues()(i) + es.eigenvalues()(i + 1)));
  }
  return out;
}

double pfaffian(const Matrix& k_in) {
  if (k_in.rows() != k_in.cols()) throw Error(ErrorCode::kDimensionMismatch, "pfaffian: not square");
  const Index n = k_in.rows();
  if (n % 2 != 0) throw Error(ErrorCode::kDimensionOdd, "pfaffian of odd-dimensional matrix");
  if (n == 0) return 1.0;

  Matrix a = k_in;
  double pf = 1.0;
  for (Index k = 0; k + 1 < n; k += 2) {
    Index kp = k + 1;
    a.col(k).tail(n - k - 1).cwiseAbs().maxCoeff(&kp);
    kp += k + 1;
    if (kp != k + 1) {
      a.row(k + 1).swap(a.row(kp));
      a.col(k + 1).swap(a.col(kp));
      pf = -pf;
    }
    if (a(k + 1, k) == 0.0) return 0.0;
    pf *= a(k, k + 1);
    if (k + 2 < n) {
      const Index rest = n - k - 2;
      const Vector tau = a.row(k).tail(rest).transpose() / a(k, k + 1);
      const Vector col = a.col(k + 1).tail(rest);
      a.bottomRightCorner(rest, rest).noalias() += tau * col.transpose();
      a.bottomRightCorner(rest, rest).noalias() -= col * tau.transpose();
    }
  }
  return pf;
}

double pfaffian(const AntisymmetricMatrix& k) { return pfaffian(k.matrix()); }

CanonicalForm canonical_form(const AntisymmetricMatrix& k) {
  const Index d = k.dim();
  const Index n = d / 2;
  CanonicalForm out{Matrix::Identity(d, d), Vector::Zero(n)};
  if (d == 0) return out;

  Eigen::RealSchur<Matrix> schur(k.matrix());
  const Matrix& t = schur.matrixT();
  const Matrix& u = schur.matrixU();

  // For a normal matrix the quasi-triangular Schur factor is block diagonal: 2x2 blocks
  // carry +-i*lambda, 1x1 blocks are exact zeros that we pair up afterwards.
  struct Pair {
    Index c0, c1;
    double lambda;
  };
  std::vector<Pair> pairs;
  std::vector<Index> zero_cols;
  for (Index i = 0; i < d;) {
    if (i + 1 < d && t(i + 1, i) != 0.0) {
      pairs.push_back({i, i + 1, 0.5 * (t(i, i + 1) - t(i + 1, i))});
      i += 2;
    } else {
      zero_cols.push_back(i);
      i += 1;
    }
  }
  for (std::size_t z = 0; z + 1 < zero_cols.size(); z += 2) {
    pairs.push_back({zero_cols[z], zero_cols[z + 1], 0.0});
  }

  for (auto& p : pairs) {
    if (p.lambda < 0) {
      std::swap(p.c0, p.c1);
      p.lambda = -p.lambda;
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const Pair& a, const Pair& b) { return a.lambda > b.lambda; });

  for (Index j = 0; j < n; ++j) {
    out.rotation.col(2 * j) = u.col(pairs[j].c0);
    out.rotation.col(2 * j + 1) = u.col(pairs[j].c1);
    out.lambdas(j) = pairs[j].lambda;
  }
  if (out.rotation.determinant() < 0) {
    // Swapping the last pair flips det(O); it also flips the sign of the last lambda
    // (a no-op when that lambda is zero).
    out.rotation.col(d - 2).swap(out.rotation.col(d - 1));
    out.lambdas(n - 1) = -out.lambdas(n - 1);
  }
  return out;
}

PsdCheck realify_psd_check(const Matrix& sym, const Matrix& antisym, double eps_psd) {
  const double m = min_eigenvalue(realify(sym, antisym));
  return {m, m >= -eps_psd};
}

PsdCheck realify_psd_check(const Matrix& sym, const AntisymmetricMatrix& antisym,
                           double eps_psd) {
  return realify_psd_check(sym, antisym.matrix(), eps_psd);
}

Norms norms(const Matrix& k) {
  if (k.size() == 0) return {0.0, 0.0};
  Eigen::JacobiSVD<Matrix> svd(k);
  const Vector& s = svd.singularValues();
  return {s.maxCoeff(), s.sum()};
}

}  // namespace fgext::matalg
