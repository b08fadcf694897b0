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

#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "fgext/bounds/family.hpp"
#include "fgext/fgs/states.hpp"
#include "fgext/matalg/spectral.hpp"
#include "test_util.hpp"

namespace fgext {
namespace {

using matalg::AntisymmetricMatrix;
using testing::expect_error;
using testing::max_abs_diff;

Matrix vac() { return fgs::vacuum(1).matrix(); }

// Reference Pfaffian by expansion along the first row.
double pfaffian_expansion(const Matrix& k) {
  const Index d = k.rows();
  if (d == 0) return 1.0;
  double acc = 0.0;
  for (Index j = 1; j < d; ++j) {
    std::vector<Index> rest;
    for (Index i = 1; i < d; ++i)
      if (i != j) rest.push_back(i);
    Matrix sub(d - 2, d - 2);
    for (Index a = 0; a < d - 2; ++a)
      for (Index b = 0; b < d - 2; ++b) sub(a, b) = k(rest[a], rest[b]);
    acc += ((j % 2 == 1) ? 1.0 : -1.0) * k(0, j) * pfaffian_expansion(sub);
  }
  return acc;
}

TEST(Antisymmetrize, ZeroMatrix) {
  const auto a = matalg::antisymmetrize(Matrix::Zero(2, 2));
  EXPECT_EQ(a.dim(), 2);
  EXPECT_EQ(a.matrix(), Matrix::Zero(2, 2));
}

TEST(Antisymmetrize, AlreadyAntisymmetric) {
  Matrix m(2, 2);
  m << 0, 1, -1, 0;
  EXPECT_EQ(matalg::antisymmetrize(m).matrix(), m);
}

TEST(Antisymmetrize, RejectsLargeResidue) {
  Matrix m(2, 2);
  m << 0, 1, -1 + 2e-3, 0;
  expect_error(ErrorCode::kNotAntisymmetric, [&] { matalg::antisymmetrize(m); });
}

TEST(Antisymmetrize, SmallResidueIsRemovedAndDiagonalZeroed) {
  Matrix m(2, 2);
  m << 1e-12, 0.5, -0.5 + 2e-10, 0;
  const auto a = matalg::antisymmetrize(m);
  EXPECT_EQ(a(0, 0), 0.0);
  EXPECT_EQ(a(0, 1), -a(1, 0));
}

TEST(Antisymmetrize, ShapeErrors) {
  expect_error(ErrorCode::kDimensionOdd, [] { matalg::antisymmetrize(Matrix::Zero(3, 3)); });
  expect_error(ErrorCode::kDimensionMismatch, [] { matalg::antisymmetrize(Matrix::Zero(2, 4)); });
}

TEST(HermitianSpectrum, Vacuum) {
  const auto s = matalg::hermitian_spectrum(AntisymmetricMatrix(vac()));
  ASSERT_EQ(s.size(), 2u);
  EXPECT_NEAR(s[0], -1.0, 1e-12);
  EXPECT_NEAR(s[1], 1.0, 1e-12);
}

TEST(HermitianSpectrum, Zero) {
  const auto s = matalg::hermitian_spectrum(AntisymmetricMatrix(2));
  EXPECT_NEAR(s[0], 0.0, 1e-14);
  EXPECT_NEAR(s[1], 0.0, 1e-14);
}

TEST(HermitianSpectrum, OneSidedFamily) {
  const auto s = matalg::hermitian_spectrum(bounds::family_cm(1, 2).cm().body());
  const std::vector<double> want{-1.0, -0.5, 0.5, 1.0};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(s[i], want[i], 1e-10);
}

TEST(HermitianSpectrum, SymmetricAboutZero) {
  fgs::Rng rng(11);
  for (Index d = 2; d <= 10; d += 2) {
    const auto s = matalg::hermitian_spectrum(AntisymmetricMatrix(testing::random_antisymmetric(d, rng)));
    for (std::size_t i = 0; i < s.size(); ++i) EXPECT_NEAR(s[i], -s[s.size() - 1 - i], 1e-9);
    EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
  }
}

TEST(HermitianSpectrum, MatchesComplexReference) {
  fgs::Rng rng(12);
  for (Index d = 2; d <= 8; d += 2) {
    const Matrix k = testing::random_antisymmetric(d, rng);
    const Eigen::MatrixXcd h = std::complex<double>(0, 1) * k.cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    const auto s = matalg::hermitian_spectrum(AntisymmetricMatrix(k));
    for (Index i = 0; i < d; ++i) EXPECT_NEAR(s[i], es.eigenvalues()(i), 1e-10);
  }
}

TEST(Pfaffian, TwoByTwo) {
  EXPECT_DOUBLE_EQ(matalg::pfaffian(matalg::mode_block(0.7)), 0.7);
}

TEST(Pfaffian, DirectSumIsProduct) {
  const auto k = matalg::direct_sum(matalg::mode_block(1.0), matalg::mode_block(1.0));
  EXPECT_NEAR(matalg::pfaffian(k), 1.0, 1e-15);
  const auto k2 = matalg::direct_sum(matalg::mode_block(0.3), matalg::mode_block(-0.5));
  EXPECT_NEAR(matalg::pfaffian(k2), -0.15, 1e-15);
}

TEST(Pfaffian, EmptyMatrixIsOne) { EXPECT_EQ(matalg::pfaffian(Matrix(0, 0)), 1.0); }

TEST(Pfaffian, MatchesExpansionAtSixAndSquaresToDeterminant) {
  fgs::Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix k = testing::random_antisymmetric(6, rng);
    const double pf = matalg::pfaffian(k);
    EXPECT_NEAR(pf, pfaffian_expansion(k), 1e-10 * std::max(1.0, std::abs(pf)));
  }
  for (Index d = 2; d <= 8; d += 2) {
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix k = testing::random_antisymmetric(d, rng);
      const double pf = matalg::pfaffian(k);
      const double det = k.determinant();
      EXPECT_NEAR(pf * pf, det, 1e-8 * std::max(1.0, std::abs(det)));
    }
  }
}

TEST(Pfaffian, OddDimensionRejected) {
  expect_error(ErrorCode::kDimensionOdd, [] { matalg::pfaffian(Matrix::Zero(3, 3)); });
}

TEST(CanonicalForm, VacuumHasUnitLambda) {
  const auto cf = matalg::canonical_form(AntisymmetricMatrix(vac()));
  ASSERT_EQ(cf.lambdas.size(), 1);
  EXPECT_NEAR(cf.lambdas(0), 1.0, 1e-12);
  EXPECT_LT(max_abs_diff(cf.reconstruct(), vac()), 1e-12);
  EXPECT_NEAR(cf.rotation.determinant(), 1.0, 1e-12);
}

TEST(CanonicalForm, Zero) {
  const auto cf = matalg::canonical_form(AntisymmetricMatrix(4));
  EXPECT_NEAR(cf.lambdas.cwiseAbs().maxCoeff(), 0.0, 1e-15);
  EXPECT_LT(max_abs_diff(cf.rotation * cf.rotation.transpose(), Matrix::Identity(4, 4)), 1e-12);
}

TEST(CanonicalForm, EprHasTwoUnitLambdas) {
  const auto m = fgs::epr(1).matrix();
  const auto cf = matalg::canonical_form(AntisymmetricMatrix(m));
  EXPECT_NEAR(std::abs(cf.lambdas(0)), 1.0, 1e-10);
  EXPECT_NEAR(std::abs(cf.lambdas(1)), 1.0, 1e-10);
  EXPECT_LT((cf.reconstruct() - m).norm(), 1e-9);
}

TEST(CanonicalForm, RandomRoundTrip) {
  fgs::Rng rng(14);
  for (Index d = 2; d <= 10; d += 2) {
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix k = testing::random_antisymmetric(d, rng);
      const auto cf = matalg::canonical_form(AntisymmetricMatrix(k));
      EXPECT_LT(matalg::norms(k - cf.reconstruct()).op, 1e-9);
      EXPECT_LT(max_abs_diff(cf.rotation * cf.rotation.transpose(), Matrix::Identity(d, d)), 1e-10);
      EXPECT_NEAR(cf.rotation.determinant(), 1.0, 1e-10);
      for (Index j = 0; j + 1 < cf.lambdas.size(); ++j) {
        EXPECT_GE(cf.lambdas(j), 0.0);
        EXPECT_GE(cf.lambdas(j), std::abs(cf.lambdas(j + 1)) - 1e-12);
      }
    }
  }
}

TEST(CanonicalForm, DegenerateLambdas) {
  // Repeated values: only reconstruction is meaningful.
  fgs::Rng rng(15);
  const Matrix o = fgs::random_special_orthogonal(6, rng);
  Vector l(3);
  l << 0.4, 0.4, 0.4;
  const Matrix k = o * matalg::block_diagonal(l) * o.transpose();
  const auto cf = matalg::canonical_form(matalg::antisymmetrize(k));
  EXPECT_LT(matalg::norms(k - cf.reconstruct()).op, 1e-9);
  for (Index j = 0; j < 3; ++j) EXPECT_NEAR(std::abs(cf.lambdas(j)), 0.4, 1e-10);
}

TEST(RealifyPsdCheck, IdentityPlusVacuumIsBoundary) {
  const auto r = matalg::realify_psd_check(Matrix::Identity(2, 2), AntisymmetricMatrix(vac()));
  EXPECT_NEAR(r.min_eig, 0.0, 1e-12);
  EXPECT_TRUE(r.is_psd);
}

TEST(RealifyPsdCheck, IdentityAlone) {
  const auto r = matalg::realify_psd_check(Matrix::Identity(2, 2), AntisymmetricMatrix(2));
  EXPECT_NEAR(r.min_eig, 1.0, 1e-12);
}

TEST(RealifyPsdCheck, ScaledBlockFails) {
  const auto r = matalg::realify_psd_check(Matrix::Identity(2, 2), matalg::mode_block(1.5));
  EXPECT_NEAR(r.min_eig, -0.5, 1e-12);
  EXPECT_FALSE(r.is_psd);
}

TEST(RealifyPsdCheck, DimensionMismatch) {
  expect_error(ErrorCode::kDimensionMismatch,
               [] { matalg::realify_psd_check(Matrix::Identity(4, 4), AntisymmetricMatrix(2)); });
}

TEST(RealifyPsdCheck, MatchesComplexReference) {
  fgs::Rng rng(16);
  std::normal_distribution<double> n;
  for (Index d = 2; d <= 8; d += 2) {
    Matrix a(d, d);
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j) a(i, j) = n(rng);
    a = (a + a.transpose()) / 2.0;
    const Matrix b = testing::random_antisymmetric(d, rng);
    const Eigen::MatrixXcd h = a.cast<std::complex<double>>() + std::complex<double>(0, 1) * b.cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    EXPECT_NEAR(matalg::realify_psd_check(a, b).min_eig, es.eigenvalues()(0), 1e-9);
  }
}

TEST(Norms, Identity) {
  const auto n = matalg::norms(Matrix::Identity(3, 3));
  EXPECT_NEAR(n.op, 1.0, 1e-12);
  EXPECT_NEAR(n.trace, 3.0, 1e-12);
}

TEST(Norms, FamilyCrossBlock) {
  const auto n = matalg::norms(bounds::family_cm(2, 2).x());
  EXPECT_NEAR(n.op, 0.5, 1e-12);
  EXPECT_NEAR(n.trace, 1.0, 1e-12);
}

TEST(Norms, Zero) {
  const auto n = matalg::norms(Matrix::Zero(2, 3));
  EXPECT_EQ(n.op, 0.0);
  EXPECT_EQ(n.trace, 0.0);
}

TEST(Norms, TraceNormOfAntisymmetricIsTwiceLambdaSum) {
  fgs::Rng rng(17);
  for (Index d = 2; d <= 10; d += 2) {
    const Matrix k = testing::random_antisymmetric(d, rng);
    const auto n = matalg::norms(k);
    EXPECT_LE(n.op, n.trace + 1e-12);
    const auto cf = matalg::canonical_form(AntisymmetricMatrix(k));
    EXPECT_NEAR(n.trace, 2.0 * cf.lambdas.cwiseAbs().sum(), 1e-10 * n.trace);
    EXPECT_NEAR(n.op, cf.lambdas.cwiseAbs().maxCoeff(), 1e-10 * n.op);
  }
}

TEST(AntisymmetricMatrix, PrincipalSubmatrix) {
  const auto m = bounds::family_cm(2, 2).cm().body();
  const auto p = m.principal({0, 3});
  EXPECT_EQ(p.dim(), 2);
  EXPECT_EQ(p(0, 1), m(0, 3));
  expect_error(ErrorCode::kIndexOutOfRange, [&] { m.principal({0, 4}); });
  expect_error(ErrorCode::kDimensionOdd, [&] { m.principal({0}); });
}

}  // namespace
}  // namespace fgext
