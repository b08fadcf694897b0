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

#include "fgext/fgs/covariance.hpp"

namespace fgext::fgs {

// Sign convention: Majoranas gamma_{2j-1} = c_j + c_j^dag, gamma_{2j} = i(c_j - c_j^dag) and
// M_pq = Tr(i gamma_p gamma_q rho). The Fock vacuum then has the block [[0, 1], [-1, 0]] and
// an occupied mode has [[0, -1], [1, 0]].

enum class StateKind {
  kVacuum,
  kBellPhiPlus,
  kBellPhiMinus,
  kBellPsiPlus,
  kBellPsiMinus,
  kEpr,
  kSingleMode,
};

struct StandardState {
  StateKind kind = StateKind::kVacuum;
  /// Number of modes for kVacuum; modes per side for kEpr.
  int count = 1;
  /// Canonical value for kSingleMode.
  double lambda = 0.0;
};

CovarianceMatrix standard_state(const StandardState& spec);

CovarianceMatrix vacuum(int n);
CovarianceMatrix single_mode(double lambda);
/// [[0, I_{2m}], [-I_{2m}, 0]] between two m-mode registers.
CovarianceMatrix epr(int m);
CovarianceMatrix bell(StateKind kind);

}  // namespace fgext::fgs
