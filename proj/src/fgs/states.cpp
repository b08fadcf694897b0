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

#include "fgext/fgs/states.hpp"

namespace fgext::fgs {

CovarianceMatrix vacuum(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidParameter, "vacuum needs n >= 1");
  return validate_cm(matalg::block_diagonal(Vector::Ones(n)));
}

CovarianceMatrix single_mode(double lambda) {
  if (!(lambda >= -1.0 && lambda <= 1.0)) {
    throw Error(ErrorCode::kInvalidParameter, "single-mode lambda outside [-1, 1]", lambda);
  }
  return validate_cm(matalg::mode_block(lambda));
}

CovarianceMatrix epr(int m) {
  if (m < 1) throw Error(ErrorCode::kInvalidParameter, "epr needs m >= 1");
  const Index d = 2 * m;
  Matrix out = Matrix::Zero(2 * d, 2 * d);
  out.topRightCorner(d, d) = Matrix::Identity(d, d);
  out.bottomLeftCorner(d, d) = -Matrix::Identity(d, d);
  return validate_cm(out);
}

CovarianceMatrix bell(StateKind kind) {
  double s03 = 0.0;
  double s12 = 0.0;
  switch (kind) {
    case StateKind::kBellPhiPlus: s03 = 1.0; s12 = 1.0; break;
    case StateKind::kBellPhiMinus: s03 = -1.0; s12 = -1.0; break;
    case StateKind::kBellPsiPlus: s03 = -1.0; s12 = 1.0; break;
    case StateKind::kBellPsiMinus: s03 = 1.0; s12 = -1.0; break;
    default: throw Error(ErrorCode::kInvalidParameter, "not a Bell state kind");
  }
  Matrix m = Matrix::Zero(4, 4);
  m(0, 3) = s03;
  m(3, 0) = -s03;
  m(1, 2) = s12;
  m(2, 1) = -s12;
  return validate_cm(m);
}

CovarianceMatrix standard_state(const StandardState& spec) {
  switch (spec.kind) {
    case StateKind::kVacuum: return vacuum(spec.count);
    case StateKind::kEpr: return epr(spec.count);
    case StateKind::kSingleMode: return single_mode(spec.lambda);
    default: return bell(spec.kind);
  }
}

}  // namespace fgext::fgs
