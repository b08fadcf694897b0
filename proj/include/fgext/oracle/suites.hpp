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

#include <cstdint>
#include <string>

namespace fgext::oracle {

/// Outcome of a randomized comparison between the covariance-matrix formalism
/// and brute-force Fock-space states.
struct SuiteReport {
  std::string name;
  int trials = 0;
  /// Number of individual comparisons (subsets, pairs, marginals, ...).
  long long checks = 0;
  /// Largest deviation from the identity being tested; for inequality suites,
  /// the largest violation (0 when every inequality holds).
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// cm_from_state(state_from_cm(M)) == M for random states, n cycling through 1..n_max.
SuiteReport roundtrip_suite(int n_max, int trials, std::uint64_t seed);

/// Tr(i^{m/2} gamma_S rho) == Pf(M[S]) for every even S with |S| <= 6.
SuiteReport wick_suite(int n_max, int trials, std::uint64_t seed);

/// ||M1 - M2||_op <= ||rho1 - rho2||_1 <= ||M1 - M2||_1 / 2 on random pairs.
SuiteReport sandwich_suite(int n_max, int trials, std::uint64_t seed);

/// Builds (2,1) extensions of locally processed family states and compares
/// both two-mode marginals of the extension with the input in trace distance.
SuiteReport extension_suite(int trials, std::uint64_t seed);

SuiteReport run_suite(const std::string& name, int n_max, int trials, std::uint64_t seed);

}  // namespace fgext::oracle
