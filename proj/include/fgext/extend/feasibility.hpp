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
#include <optional>
#include <string>

#include "fgext/extend/lmi_solver.hpp"
#include "fgext/fgs/covariance.hpp"

namespace fgext::extend {

using fgs::AntisymmetricMatrix;
using fgs::BipartiteCM;

/// Decide whether `b` admits k1 copies of A and k2 copies of B.
struct ExtendQuery {
  ExtendQuery(BipartiteCM b, int k1, int k2);

  BipartiteCM b;
  int k1;
  int k2;
};

enum class FeasibilityStatus { kFeasible, kInfeasibleCertified, kInfeasibleNumerical };

std::string to_string(FeasibilityStatus status);

struct Certificate {
  enum class Kind { kCrossCorrelation, kColumnSum };
  Kind kind;
  /// 1-based row of the input CM for column-sum certificates; 0 otherwise.
  Index row = 0;
  double value = 0.0;
  double bound = 0.0;
  std::string text;
};

struct FeasibilityOptions {
  double eps_feas = default_tolerances().eps_feas;
  int max_iters = 20000;
  std::uint64_t seed = 0;
  double gap_tol = 1e-9;
  /// Also run the solver on certified instances so `margin` is populated.
  bool solve_when_certified = true;
};

struct FeasibilityResult {
  FeasibilityStatus status = FeasibilityStatus::kInfeasibleNumerical;
  std::optional<AntisymmetricMatrix> delta_a;
  std::optional<AntisymmetricMatrix> delta_b;
  /// Smallest eigenvalue over all constraint blocks at the best point found (NaN if not solved).
  double margin = 0.0;
  /// Solver upper bound on the optimal margin is margin_bound; NaN if not solved.
  double margin_bound = 0.0;
  std::optional<Certificate> certificate;
  int newton_steps = 0;
  /// Minimum eigenvalue of the single-sided inequality; set by one_sided_feasibility.
  std::optional<double> one_sided_min_eig;

  bool feasible() const { return status == FeasibilityStatus::kFeasible; }
};

/// Certificate iff lambda_max(X^T X) > 4/(k1 k2) + eps_feas.
std::optional<Certificate> precheck_cross_correlation(const ExtendQuery& q,
                                                      double eps_feas = default_tolerances().eps_feas);

/// Row-norm bound on rows of the extension that contain no unknown block
/// (A-rows when k1 = 1, B-rows when k2 = 1).
std::optional<Certificate> precheck_column_sum(const ExtendQuery& q,
                                               double eps_feas = default_tolerances().eps_feas);

/// The three constraint blocks as a max-margin problem over (Delta_A, Delta_B).
MaxMarginProblem extension_problem(const ExtendQuery& q);

/// Margins of the three blocks for a given witness pair.
std::vector<double> witness_margins(const ExtendQuery& q, const Matrix& delta_a, const Matrix& delta_b);

/// Max-margin solve from y0; on an undecided outcome retries once from a
/// seeded perturbation of zero and keeps the better run.
MaxMarginResult solve_with_restart(const MaxMarginProblem& prob, const Vector& y0,
                                   const FeasibilityOptions& opts);

/// Feasible iff margin >= -eps_feas; InfeasibleNumerical iff the certified upper
/// bound is below -100 eps_feas; throws Error(kSolverStalled) otherwise.
FeasibilityStatus classify_margin(const MaxMarginResult& m, const FeasibilityOptions& opts);

/// Throws Error(kSolverStalled) when the budget runs out in the undecided band.
FeasibilityResult feasibility(const ExtendQuery& q, const FeasibilityOptions& opts = {});

FeasibilityResult one_sided_feasibility(const BipartiteCM& b, int k,
                                        const FeasibilityOptions& opts = {});

bool is_separable_gaussian(const BipartiteCM& b, double eps_psd = default_tolerances().eps_psd);

}  // namespace fgext::extend
