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

#include <Eigen/Dense>

namespace fgext {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Numerical thresholds shared by every module. One knob per failure class.
struct Tolerances {
  /// Slack allowed on positive-semidefinite conditions such as I + iM >= 0.
  double eps_psd = 1e-9;
  /// Expected accuracy of dense eigen decompositions.
  double eig = 1e-10;
  /// Relative accuracy of Pfaffian evaluation against sqrt(det).
  double pfaffian_rel = 1e-8;
  /// Slack on solver-produced witnesses (looser than eps_psd).
  double eps_feas = 1e-7;
  /// Allowed symmetric residue, relative to the input norm, when antisymmetrizing.
  double antisym_rtol = 1e-8;
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace fgext
