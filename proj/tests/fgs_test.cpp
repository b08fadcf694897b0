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
#include <sstream>

#include "fgext/bounds/family.hpp"
#include "fgext/fgs/cm_io.hpp"
#include "fgext/fgs/measures.hpp"
#include "fgext/fgs/random.hpp"
#include "fgext/fgs/states.hpp"
#include "fgext/matalg/spectral.hpp"
#include "fgext/oracle/dense_state.hpp"
#include "test_util.hpp"

namespace fgext {
namespace {

using fgs::BipartiteCM;
using fgs::Side;
using testing::expect_error;
using testing::max_abs_diff;

TEST(ValidateCm, VacuumIsOneMode) {
  const auto v = fgs::validate_cm(fgs::vacuum(1).matrix());
  EXPECT_EQ(v.modes(), 1);
  EXPECT_TRUE(v.is_pure());
}

TEST(ValidateCm, ScaledVacuumRejectedWithEigenvalue) {
  try {
    fgs::validate_cm(Matrix(1.2 * fgs::vacuum(1).matrix()));
    FAIL() << "accepted an unphysical matrix";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotBonaFide);
    ASSERT_TRUE(e.value().has_value());
    EXPECT_NEAR(*e.value(), 1.2, 1e-12);
  }
}

TEST(ValidateCm, FamilyTwoTwoSpectrum) {
  const auto m = bounds::family_cm(2, 2).cm();
  const auto s = matalg::hermitian_spectrum(m.body());
  const double r = std::sqrt(2.0) / 2.0;
  EXPECT_NEAR(s[0], -r, 1e-12);
  EXPECT_NEAR(s[1], -r, 1e-12);
  EXPECT_NEAR(s[2], r, 1e-12);
  EXPECT_NEAR(s[3], r, 1e-12);
  EXPECT_FALSE(m.is_pure());
}

TEST(ValidateCm, EntryAndRowBoundsHoldForRandomStates) {
  fgs::Rng rng(21);
  for (int t = 0; t < 100; ++t) {
    const auto m = fgs::random_cm(1 + t % 4, rng).matrix();
    EXPECT_LE(m.cwiseAbs().maxCoeff(), 1.0 + 1e-9);
    EXPECT_LE(m.rowwise().squaredNorm().maxCoeff(), 1.0 + 1e-9);
  }
}

TEST(StandardStates, BellPhiPlusAntidiagonal) {
  const Matrix m = fgs::bell(fgs::StateKind::kBellPhiPlus).matrix();
  Matrix want = Matrix::Zero(4, 4);
  want(0, 3) = 1;
  want(1, 2) = 1;
  want(2, 1) = -1;
  want(3, 0) = -1;
  EXPECT_EQ(m, want);
}

TEST(StandardStates, AllBellStatesArePure) {
  for (auto k : {fgs::StateKind::kBellPhiPlus, fgs::StateKind::kBellPhiMinus, fgs::StateKind::kBellPsiPlus,
                 fgs::StateKind::kBellPsiMinus}) {
    EXPECT_TRUE(fgs::bell(k).is_pure());
    EXPECT_EQ(fgs::marginal(BipartiteCM(fgs::bell(k), 1, 1), Side::kA).matrix(), Matrix::Zero(2, 2));
  }
}

TEST(StandardStates, SingleModeZeroIsMaximallyMixed) {
  EXPECT_EQ(fgs::single_mode(0.0).matrix(), Matrix::Zero(2, 2));
  expect_error(ErrorCode::kInvalidParameter, [] { fgs::single_mode(1.5); });
}

TEST(StandardStates, VacuumIsBlockDirectSum) {
  const Matrix m = fgs::vacuum(3).matrix();
  EXPECT_EQ(m.rows(), 6);
  for (int j = 0; j < 3; ++j) EXPECT_EQ(m.block(2 * j, 2 * j, 2, 2), fgs::vacuum(1).matrix());
  EXPECT_EQ(m.block(0, 2, 2, 4), Matrix::Zero(2, 4));
  expect_error(ErrorCode::kInvalidParameter, [] { fgs::vacuum(0); });
}

TEST(StandardStates, EprLayout) {
  const Matrix m = fgs::epr(2).matrix();
  EXPECT_EQ(m.topRightCorner(4, 4), Matrix::Identity(4, 4));
  EXPECT_TRUE(fgs::epr(2).is_pure());
}

TEST(StandardStates, DispatcherMatchesConstructors) {
  EXPECT_EQ(fgs::standard_state({fgs::StateKind::kVacuum, 2, 0.0}).matrix(), fgs::vacuum(2).matrix());
  EXPECT_EQ(fgs::standard_state({fgs::StateKind::kSingleMode, 1, 0.3}).matrix(),
            fgs::single_mode(0.3).matrix());
}

TEST(Bipartite, BlocksReassemble) {
  const auto b = bounds::family_cm(3, 2);
  Matrix m(4, 4);
  m << b.m_a(), b.x(), -b.x().transpose(), b.m_b();
  EXPECT_EQ(m, b.cm().matrix());
  expect_error(ErrorCode::kWrongSplit, [&] { BipartiteCM(b.cm(), 1, 2); });
}

TEST(Marginal, FamilySideA) {
  const auto a = fgs::marginal(bounds::family_cm(2, 2), Side::kA);
  EXPECT_LT(max_abs_diff(a.matrix(), fgs::single_mode(0.5).matrix()), 1e-15);
}

TEST(Marginal, ProductSideB) {
  const auto p = fgs::vacuum(1);
  const auto q = fgs::single_mode(-0.3);
  EXPECT_EQ(fgs::marginal(fgs::product_cm(p, q), Side::kB).matrix(), q.matrix());
}

TEST(Marginal, RandomMarginalsAreStates) {
  fgs::Rng rng(22);
  for (int t = 0; t < 500; ++t) {
    const Index na = 1 + t % 4;
    const Index nb = 1 + (t / 4) % 4;
    const BipartiteCM b(fgs::random_cm(na + nb, rng), na, nb);
    EXPECT_NO_THROW(fgs::marginal(b, Side::kA));
    EXPECT_NO_THROW(fgs::marginal(b, Side::kB));
  }
}

TEST(ProductCm, VacuaCombine) {
  const auto b = fgs::product_cm(fgs::vacuum(1), fgs::vacuum(1));
  EXPECT_EQ(b.cm().matrix(), fgs::vacuum(2).matrix());
  EXPECT_EQ(b.n_a(), 1);
  const auto z = fgs::product_cm(fgs::single_mode(0), fgs::single_mode(0));
  EXPECT_EQ(z.cm().matrix(), Matrix::Zero(4, 4));
}

TEST(Overlap, FamilyAgainstMaximallyEntangled) {
  EXPECT_NEAR(fgs::overlap(bounds::family_cm(2, 2).cm(), bounds::family_cm(1, 1).cm()), 0.625, 1e-12);
}

TEST(Overlap, PureSelfOverlapIsOne) {
  fgs::Rng rng(23);
  EXPECT_NEAR(fgs::overlap(fgs::vacuum(2), fgs::vacuum(2)), 1.0, 1e-12);
  const auto p = fgs::random_pure_cm(3, rng);
  EXPECT_NEAR(fgs::overlap(p, p), 1.0, 1e-10);
}

TEST(Overlap, VacuumAgainstMaximallyMixed) {
  EXPECT_NEAR(fgs::overlap(fgs::vacuum(1), fgs::single_mode(0)), 0.5, 1e-12);
}

TEST(Overlap, MatchesDenseTraceAndCanonicalPath) {
  fgs::Rng rng(24);
  for (int t = 0; t < 30; ++t) {
    const int n = 1 + t % 3;
    const auto m1 = fgs::random_cm(n, rng);
    const auto m2 = fgs::random_cm(n, rng);
    const double dense = (oracle::state_from_cm(m1).rho() * oracle::state_from_cm(m2).rho()).trace().real();
    EXPECT_NEAR(fgs::overlap(m1, m2), std::abs(dense), 1e-9);
    const auto cf = matalg::canonical_form(m1.body());
    double prod = 1.0;
    for (Index j = 0; j < cf.lambdas.size(); ++j) prod *= (1.0 + cf.lambdas(j) * cf.lambdas(j)) / 2.0;
    EXPECT_NEAR(fgs::overlap(m1, m1), prod, 1e-9);
  }
}

TEST(Entropy, Examples) {
  EXPECT_NEAR(fgs::gaussian_entropy(fgs::vacuum(1)), 0.0, 1e-12);
  EXPECT_NEAR(fgs::gaussian_entropy(fgs::single_mode(0)), 1.0, 1e-12);
  const auto a = fgs::marginal(bounds::family_cm(2, 2), Side::kA);
  EXPECT_NEAR(fgs::gaussian_entropy(a), 0.8112781244591328, 1e-12);
  EXPECT_NEAR(fgs::gaussian_entropy(a), oracle::von_neumann_entropy(oracle::state_from_cm(a).rho()), 1e-10);
}

TEST(Entropy, RotationInvariant) {
  fgs::Rng rng(25);
  for (int t = 0; t < 20; ++t) {
    const auto m = fgs::random_cm(1 + t % 4, rng);
    const Matrix o = fgs::random_special_orthogonal(m.dim(), rng);
    const auto r = fgs::validate_cm(matalg::antisymmetrize(Matrix(o * m.matrix() * o.transpose())));
    EXPECT_NEAR(fgs::gaussian_entropy(m), fgs::gaussian_entropy(r), 1e-9);
  }
}

TEST(BinaryEntropy, Values) {
  EXPECT_EQ(fgs::binary_entropy(0.0), 0.0);
  EXPECT_EQ(fgs::binary_entropy(1.0), 0.0);
  EXPECT_NEAR(fgs::binary_entropy(0.5), 1.0, 1e-15);
  EXPECT_NEAR(fgs::binary_entropy(0.25), 0.8112781244591328, 1e-14);
  EXPECT_NEAR(fgs::binary_entropy(0.25), fgs::binary_entropy(0.75), 1e-15);
  expect_error(ErrorCode::kOutOfRange, [] { fgs::binary_entropy(1.5); });
}

TEST(MutualInformation, Examples) {
  EXPECT_NEAR(fgs::mutual_information(fgs::product_cm(fgs::single_mode(0.3), fgs::vacuum(2))).i_ab, 0.0, 1e-12);
  const auto bell = fgs::mutual_information(BipartiteCM(fgs::bell(fgs::StateKind::kBellPhiPlus), 1, 1));
  EXPECT_NEAR(bell.i_ab, 2.0, 1e-10);
  EXPECT_NEAR(bell.e_cq, 1.0, 1e-10);
  const auto fam = bounds::family_cm(2, 2);
  const auto e = oracle::entropies(oracle::state_from_cm(fam.cm()), 1, 1);
  EXPECT_NEAR(fgs::mutual_information(fam).i_ab, e.i_ab, 1e-8);
}

TEST(MutualInformation, NonnegativeOnRandomStates) {
  fgs::Rng rng(26);
  for (int t = 0; t < 100; ++t) {
    const Index na = 1 + t % 3, nb = 1 + (t / 3) % 3;
    EXPECT_GE(fgs::mutual_information(BipartiteCM(fgs::random_cm(na + nb, rng), na, nb)).i_ab, -1e-9);
  }
}

TEST(Hamiltonian, Examples) {
  EXPECT_EQ(fgs::hamiltonian_from_cm(fgs::single_mode(0)).matrix(), Matrix::Zero(2, 2));
  const auto h = fgs::hamiltonian_from_cm(fgs::single_mode(std::tanh(1.0)));
  EXPECT_NEAR(h(0, 1), 2.0, 1e-12);
  expect_error(ErrorCode::kSingularState, [] { fgs::hamiltonian_from_cm(fgs::vacuum(1)); });
}

TEST(Hamiltonian, RoundTrip) {
  fgs::Rng rng(27);
  for (int t = 0; t < 30; ++t) {
    const auto m = fgs::random_cm(1 + t % 4, rng);
    const auto h = fgs::hamiltonian_from_cm(m);
    EXPECT_LT(max_abs_diff(fgs::cm_from_hamiltonian(h), m.matrix()), 1e-8);
  }
}

TEST(Parity, CmLevelAlwaysHolds) {
  EXPECT_TRUE(fgs::check_parity_superselection_cm(fgs::vacuum(1)));
  EXPECT_TRUE(fgs::check_parity_superselection_cm(fgs::bell(fgs::StateKind::kBellPhiPlus)));
  EXPECT_TRUE(fgs::check_parity_superselection_cm(bounds::family_cm(3, 2).cm()));
}

TEST(OracleEquivalence, AcceptedMatricesGiveDensityMatrices) {
  // Scaled random states straddle the physical boundary; acceptance must match positivity.
  fgs::Rng rng(28);
  std::uniform_real_distribution<double> scale(0.8, 1.2);
  for (int t = 0; t < 60; ++t) {
    const int n = 1 + t % 4;
    const Matrix m = scale(rng) * fgs::random_cm(n, rng).matrix();
    bool accepted = true;
    try {
      fgs::validate_cm(m);
    } catch (const Error&) {
      accepted = false;
    }
    const double top = matalg::canonical_form(matalg::antisymmetrize(m)).lambdas.cwiseAbs().maxCoeff();
    EXPECT_EQ(accepted, top <= 1.0 + 1e-9);
    if (accepted) EXPECT_NO_THROW(oracle::state_from_cm(fgs::validate_cm(m)));
  }
}

TEST(CmIo, RoundTripWithSplit) {
  const auto b = bounds::family_cm(3, 2);
  std::stringstream ss;
  fgs::write_cm_document(ss, b.cm().matrix(), std::make_pair(Index{1}, Index{1}));
  const auto doc = fgs::parse_cm_document(ss);
  EXPECT_EQ(doc.modes, 2);
  ASSERT_TRUE(doc.split.has_value());
  EXPECT_EQ(doc.split->first, 1);
  EXPECT_EQ(doc.matrix, b.cm().matrix());
}

TEST(CmIo, CommentsAndBlankLines) {
  std::stringstream ss("# vacuum\nmodes 1\n\nmatrix\n0 1 # row one\n-1 0\n");
  const auto doc = fgs::parse_cm_document(ss);
  EXPECT_EQ(doc.matrix, fgs::vacuum(1).matrix());
  EXPECT_FALSE(doc.split.has_value());
}

TEST(CmIo, Malformed) {
  for (const std::string bad : {"modes 1\nmatrix\n0 1\n", "modes 1\nmatrix\n0 1\n-1 x\n", "matrix\n0 1\n-1 0\n",
                                "modes 1\nmatrix\n0 1\n0.5 0\n", "modes 2\nsplit 1 2\nmatrix\n", "bogus 1\n"}) {
    std::stringstream ss(bad);
    expect_error(ErrorCode::kParseError, [&] { fgs::parse_cm_document(ss); });
  }
}

}  // namespace
}  // namespace fgext
