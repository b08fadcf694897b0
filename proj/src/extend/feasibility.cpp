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

#include "fgext/extend/feasibility.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>

#include "fgext/matalg/spectral.hpp"

namespace fgext::extend {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

ExtendQuery::ExtendQuery(BipartiteCM b_, int k1_, int k2_) : b(std::move(b_)), k1(k1_), k2(k2_) {
  if (k1 < 1 || k2 < 1) {
    throw Error(ErrorCode::kInvalidParameter,
                "extension multiplicities must be >= 1 (got " + std::to_string(k1) + ", " +
                    std::to_string(k2) + ")");
  }
}

std::string to_string(FeasibilityStatus status) {
  switch (status) {
    case FeasibilityStatus::kFeasible: return "Feasible";
    case FeasibilityStatus::kInfeasibleCertified: return "InfeasibleCertified";
    case FeasibilityStatus::kInfeasibleNumerical: return "InfeasibleNumerical";
  }
  return "Unknown";
}

std::optional<Certificate> precheck_cross_correlation(const ExtendQuery& q, double eps_feas) {
  const Matrix x = q.b.x();
  if (x.size() == 0) return std::nullopt;
  const double s = matalg::norms(x).op;
  const double top = s * s;
  const double bound = 4.0 / (static_cast<double>(q.k1) * q.k2);
  if (top <= bound + eps_feas) return std::nullopt;
  Certificate c;
  c.kind = Certificate::Kind::kCrossCorrelation;
  c.value = top;
  c.bound = bound;
  c.text = "cross-correlation bound: lambda_max(X^T X) = " + fmt(top) + " > 4/(k1 k2) = " +
           fmt(bound) + " (top singular value " + fmt(s) + ")";
  return c;
}

std::optional<Certificate> precheck_column_sum(const ExtendQuery& q, double eps_feas) {
  if (q.k1 != 1 && q.k2 != 1) return std::nullopt;
  const Matrix x = q.b.x();
  std::optional<Certificate> best;
  auto consider = [&](Index row, double value) {
    if (value <= 1.0 + eps_feas) return;
    if (best && value < best->value) return;  // ties go to the later row
    Certificate c;
    c.kind = Certificate::Kind::kColumnSum;
    c.row = row;
    c.value = value;
    c.bound = 1.0;
    best = c;
  };
  if (q.k1 == 1) {
    const Matrix ma = q.b.m_a();
    for (Index i = 0; i < ma.rows(); ++i) {
      consider(i + 1, ma.row(i).squaredNorm() + q.k2 * x.row(i).squaredNorm());
    }
  }
  if (q.k2 == 1) {
    const Matrix mb = q.b.m_b();
    for (Index i = 0; i < mb.rows(); ++i) {
      consider(2 * q.b.n_a() + i + 1, mb.row(i).squaredNorm() + q.k1 * x.col(i).squaredNorm());
    }
  }
  if (best) best->text = "column-sum row " + std::to_string(best->row) + ": " + fmt(best->value) + " > 1";
  return best;
}

MaxMarginProblem extension_problem(const ExtendQuery& q) {
  const Index da = 2 * q.b.n_a();
  const Index db = 2 * q.b.n_b();
  const int pa = antisym_param_count(da);
  const int pb = antisym_param_count(db);

  MaxMarginProblem prob;
  prob.num_vars = pa + pb;

  LmiBlock a{"delta_a", matalg::realify(Matrix::Identity(da, da), Matrix::Zero(da, da)), {}};
  append_antisym_terms(a, 0, da, 0, 1.0);
  LmiBlock b{"delta_b", matalg::realify(Matrix::Identity(db, db), Matrix::Zero(db, db)), {}};
  append_antisym_terms(b, pa, db, 0, 1.0);

  const double s = std::sqrt(static_cast<double>(q.k1) * q.k2);
  Matrix k0(da + db, da + db);
  k0.topLeftCorner(da, da) = q.k1 * q.b.m_a();
  k0.topRightCorner(da, db) = s * q.b.x();
  k0.bottomLeftCorner(db, da) = -s * q.b.x().transpose();
  k0.bottomRightCorner(db, db) = q.k2 * q.b.m_b();
  LmiBlock joint{"joint", matalg::realify(Matrix::Identity(da + db, da + db), k0), {}};
  append_antisym_terms(joint, 0, da, 0, -(q.k1 - 1.0));
  append_antisym_terms(joint, pa, db, da, -(q.k2 - 1.0));

  prob.blocks = {std::move(a), std::move(b), std::move(joint)};
  return prob;
}

std::vector<double> witness_margins(const ExtendQuery& q, const Matrix& delta_a, const Matrix& delta_b) {
  const MaxMarginProblem prob = extension_problem(q);
  Vector y(prob.num_vars);
  pack_antisym(delta_a, y, 0);
  pack_antisym(delta_b, y, antisym_param_count(delta_a.rows()));
  return prob.block_margins(y);
}

namespace {

bool decided(const MaxMarginResult& m, double eps_feas) {
  return m.margin >= -eps_feas || (m.converged && m.t + m.gap < -100.0 * eps_feas);
}

}  // namespace

MaxMarginResult solve_with_restart(const MaxMarginProblem& prob, const Vector& y0,
                                   const FeasibilityOptions& opts) {
  SolverOptions so;
  so.max_newton_steps = opts.max_iters;
  so.gap_tol = opts.gap_tol;
  MaxMarginResult best = maximize_margin(prob, y0, so);
  if (decided(best, opts.eps_feas)) return best;

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> noise(0.0, 1e-3);
  Vector y1(prob.num_vars);
  for (Index i = 0; i < y1.size(); ++i) y1(i) = noise(rng);
  MaxMarginResult retry = maximize_margin(prob, y1, so);
  const int total = best.newton_steps + retry.newton_steps;
  if (decided(retry, opts.eps_feas) || retry.margin > best.margin) best = std::move(retry);
  best.newton_steps = total;
  return best;
}

FeasibilityStatus classify_margin(const MaxMarginResult& m, const FeasibilityOptions& opts) {
  if (m.margin >= -opts.eps_feas) return FeasibilityStatus::kFeasible;
  if (m.converged && m.t + m.gap < -100.0 * opts.eps_feas) return FeasibilityStatus::kInfeasibleNumerical;
  throw Error(ErrorCode::kSolverStalled,
              "best margin " + fmt(m.margin) + " is undecided after " +
                  std::to_string(m.newton_steps) + " Newton steps",
              m.margin);
}

FeasibilityResult feasibility(const ExtendQuery& q, const FeasibilityOptions& opts) {
  FeasibilityResult r;
  r.certificate = precheck_cross_correlation(q, opts.eps_feas);
  if (!r.certificate) r.certificate = precheck_column_sum(q, opts.eps_feas);
  r.margin = kNaN;
  r.margin_bound = kNaN;
  if (r.certificate) {
    r.status = FeasibilityStatus::kInfeasibleCertified;
    if (!opts.solve_when_certified) return r;
  }

  const MaxMarginProblem prob = extension_problem(q);
  const int pa = antisym_param_count(2 * q.b.n_a());
  Vector y0(prob.num_vars);
  pack_antisym(q.b.m_a(), y0, 0);
  pack_antisym(q.b.m_b(), y0, pa);
  const MaxMarginResult best = solve_with_restart(prob, y0, opts);
  r.newton_steps = best.newton_steps;
  r.margin = best.margin;
  r.margin_bound = best.converged ? best.t + best.gap : kNaN;

  if (r.certificate) return r;

  r.status = classify_margin(best, opts);
  if (r.feasible()) {
    r.delta_a = AntisymmetricMatrix(unpack_antisym(best.y, 0, 2 * q.b.n_a()));
    r.delta_b = AntisymmetricMatrix(unpack_antisym(best.y, pa, 2 * q.b.n_b()));
  }
  return r;
}

FeasibilityResult one_sided_feasibility(const BipartiteCM& b, int k, const FeasibilityOptions& opts) {
  const ExtendQuery q(b, 1, k);
  FeasibilityResult r = feasibility(q, opts);
  if (!r.feasible()) return r;

  const Index da = 2 * b.n_a();
  const Index db = 2 * b.n_b();
  Vector diag(da + db);
  diag.head(da).setOnes();
  diag.tail(db).setConstant(1.0 / k);
  Matrix rhs = b.cm().matrix();
  rhs.bottomRightCorner(db, db) -= (1.0 - 1.0 / k) * r.delta_b->matrix();
  const double eig = matalg::realify_psd_check(Matrix(diag.asDiagonal()), rhs).min_eig;
  r.one_sided_min_eig = eig;
  // diag(I, I/k) scaling of the joint block can only shrink a negative margin.
  if (eig < std::min(r.margin, 0.0) - 1e-8) {
    throw std::logic_error("one-sided inequality disagrees with the joint block: " + fmt(eig));
  }
  return r;
}

bool is_separable_gaussian(const BipartiteCM& b, double eps_psd) {
  const Matrix x = b.x();
  return x.size() == 0 || matalg::norms(x).op <= eps_psd;
}

}  // namespace fgext::extend
