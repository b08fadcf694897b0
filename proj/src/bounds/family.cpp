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

#include "fgext/bounds/family.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "fgext/fgs/measures.hpp"
#include "fgext/matalg/spectral.hpp"

namespace fgext::bounds {

namespace {

void require_k(int k1, int k2) {
  if (k1 < 1 || k2 < 1) throw Error(ErrorCode::kInvalidParameter, "k1, k2 must be >= 1");
}

// Golden-section minimum of a convex function on [lo, hi].
double golden_min(const std::function<double(double)>& f, double lo, double hi, double tol) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc <= fd) {
      b = d; d = c; fd = fc;
      c = b - g * (b - a); fc = f(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + g * (b - a); fd = f(d);
    }
  }
  return std::min({fc, fd, f(lo), f(hi)});
}

}  // namespace

double two_mode_op_norm(const Matrix& k) {
  if (k.rows() != 4 || k.cols() != 4) throw Error(ErrorCode::kDimensionMismatch, "expected 4x4");
  double s = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) s += k(i, j) * k(i, j);
  const double p = k(0, 1) * k(2, 3) - k(0, 2) * k(1, 3) + k(0, 3) * k(1, 2);
  const double disc = std::max(0.0, s * s - 4.0 * p * p);
  return std::sqrt(std::max(0.0, (s + std::sqrt(disc)) / 2.0));
}

double lower_bound_two_mode(const fgs::BipartiteCM& b) {
  if (b.n_a() != 1 || b.n_b() != 1) {
    throw Error(ErrorCode::kWrongSplit, "two-mode lower bound needs a (1,1) split");
  }
  const Matrix m = b.cm().matrix();
  auto f = [&m](double a, double c) {
    Matrix k = m;
    k(0, 1) -= a; k(1, 0) += a;
    k(2, 3) -= c; k(3, 2) += c;
    return two_mode_op_norm(k);
  };
  constexpr int kGrid = 201;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kGrid; ++i) {
    for (int j = 0; j < kGrid; ++j) {
      best = std::min(best, f(-1.0 + 2.0 * i / (kGrid - 1), -1.0 + 2.0 * j / (kGrid - 1)));
    }
  }
  // The objective is convex in (a, b), so min over b is convex in a.
  const double refined = golden_min(
      [&](double a) { return golden_min([&](double c) { return f(a, c); }, -1.0, 1.0, 1e-11); },
      -1.0, 1.0, 1e-11);
  return std::min(best, refined);
}

fgs::BipartiteCM family_cm(int k1, int k2) {
  require_k(k1, k2);
  const double ma = (k1 - 1.0) / k1;
  const double mb = (k2 - 1.0) / k2;
  const double x = 1.0 / std::sqrt(static_cast<double>(k1) * k2);
  Matrix m = Matrix::Zero(4, 4);
  m(0, 1) = ma;
  m(2, 3) = mb;
  m(0, 3) = x;
  m(1, 2) = x;
  m = m - Matrix(m.transpose());
  return fgs::BipartiteCM(fgs::validate_cm(m), 1, 1);
}

std::array<double, 4> family_spectrum(int k1, int k2) {
  require_k(k1, k2);
  const double kk = static_cast<double>(k1) * k2;
  const double a = (k1 - 1.0) * std::sqrt(static_cast<double>(k2) / k1);
  const double b = (k2 - 1.0) * std::sqrt(static_cast<double>(k1) / k2);
  const double mid = (a * a + b * b) / 2.0 + 1.0;
  const double half = 0.5 * std::abs(a - b) * std::sqrt(a * a + 2.0 * a * b + b * b + 4.0);
  const double r1 = std::sqrt(mid + half) / std::sqrt(kk);
  const double r2 = std::sqrt(std::max(0.0, mid - half)) / std::sqrt(kk);
  return {-r1, -r2, r2, r1};
}

fgs::BipartiteCM epsilon_family(double eps) {
  if (!(eps > 0.0 && eps <= 2.0)) {
    throw Error(ErrorCode::kOutOfRange, "eps must lie in (0, 2]", eps);
  }
  const double h = eps / 2.0;
  const double s = std::sqrt(std::max(0.0, 1.0 - h * h));
  Matrix m = Matrix::Zero(4, 4);
  m(0, 1) = s;
  m(2, 3) = s;
  // X = (eps/2) diag(1, -1); with X proportional to the identity the state
  // would not be physical for any eps in (0, 2).
  m(0, 2) = h;
  m(1, 3) = -h;
  m = m - Matrix(m.transpose());
  return fgs::BipartiteCM(fgs::validate_cm(m), 1, 1);
}

double family_overlap_closed_form(int k1, int k2) {
  require_k(k1, k2);
  const double kk = static_cast<double>(k1) * k2;
  return 0.25 * ((2.0 * kk - k1 - k2 + 2.0) / kk + 2.0 / std::sqrt(kk));
}

double bosonic_strategy_lower_bound(int k1, int k2) {
  return fgs::overlap(family_cm(k1, k2).cm(), family_cm(1, 1).cm()) - 0.5;
}

}  // namespace fgext::bounds
