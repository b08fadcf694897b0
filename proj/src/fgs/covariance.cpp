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

#include "fgext/fgs/covariance.hpp"

#include <sstream>

#include "fgext/matalg/spectral.hpp"

namespace fgext::fgs {

bool CovarianceMatrix::is_pure(double tol) const {
  const Matrix sq = matrix() * matrix() + Matrix::Identity(dim(), dim());
  return sq.cwiseAbs().maxCoeff() <= tol;
}

CovarianceMatrix validate_cm(const AntisymmetricMatrix& k, double eps_psd) {
  const auto spec = matalg::hermitian_spectrum(k);
  if (!spec.empty()) {
    const double top = spec.back();
    if (top > 1.0 + eps_psd) {
      std::ostringstream os;
      os << "spectrum of iM reaches " << top << " (> 1)";
      throw Error(ErrorCode::kNotBonaFide, os.str(), top);
    }
  }
  return CovarianceMatrix(k);
}

CovarianceMatrix validate_cm(const Matrix& raw, double eps_psd) {
  return validate_cm(AntisymmetricMatrix(raw), eps_psd);
}

BipartiteCM::BipartiteCM(CovarianceMatrix cm, Index n_a, Index n_b)
    : cm_(std::move(cm)), n_a_(n_a), n_b_(n_b) {
  if (n_a < 0 || n_b < 0 || n_a + n_b != cm_.modes()) {
    std::ostringstream os;
    os << "split (" << n_a << ", " << n_b << ") does not cover " << cm_.modes() << " modes";
    throw Error(ErrorCode::kWrongSplit, os.str());
  }
}

CovarianceMatrix marginal(const BipartiteCM& b, Side side) {
  return validate_cm(side == Side::kA ? b.m_a() : b.m_b());
}

BipartiteCM product_cm(const CovarianceMatrix& m_a, const CovarianceMatrix& m_b) {
  return BipartiteCM(validate_cm(matalg::direct_sum(m_a.body(), m_b.body())), m_a.modes(),
                     m_b.modes());
}

bool check_parity_superselection_cm(const CovarianceMatrix&) { return true; }

}  // namespace fgext::fgs
