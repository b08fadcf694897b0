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

#include "fgext/channels/channel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fgext/fgs/states.hpp"
#include "fgext/matalg/spectral.hpp"

namespace fgext::channels {

GaussianChannel validate_channel(const Matrix& x, const Matrix& n, double eps_psd) {
  if (x.rows() % 2 != 0 || x.cols() % 2 != 0) {
    throw Error(ErrorCode::kDimensionOdd, "channel X must be 2n_out x 2n_in");
  }
  if (n.rows() != x.rows() || n.cols() != x.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "channel N must be 2n_out x 2n_out");
  }
  AntisymmetricMatrix nn(n);
  const Index d = x.rows();
  const auto check = matalg::realify_psd_check(Matrix::Identity(d, d) - x * x.transpose(), nn, eps_psd);
  if (!check.is_psd) {
    throw Error(ErrorCode::kNotCP,
                "I + iN - XX^T has eigenvalue " + std::to_string(check.min_eig), check.min_eig);
  }
  return GaussianChannel(x, std::move(nn));
}

CovarianceMatrix apply(const GaussianChannel& ch, const CovarianceMatrix& m, double eps_psd) {
  if (m.dim() != ch.x().cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "channel expects " + std::to_string(ch.n_in()) +
                                                   " input modes, got " + std::to_string(m.modes()));
  }
  const Matrix out = ch.x() * m.matrix() * ch.x().transpose() + ch.n().matrix();
  // A valid channel maps states to states; a failure here is a library bug.
  try {
    return fgs::validate_cm(out, eps_psd);
  } catch (const Error& e) {
    throw std::logic_error(std::string("channel output is not a state: ") + e.what());
  }
}

BipartiteCM apply_local(const GaussianChannel& on_a, const GaussianChannel& on_b, const BipartiteCM& b,
                        double eps_psd) {
  if (on_a.n_in() != b.n_a() || on_b.n_in() != b.n_b()) {
    throw Error(ErrorCode::kDimensionMismatch, "local channels do not match the split");
  }
  const Index da = on_a.x().rows();
  const Index db = on_b.x().rows();
  Matrix x = Matrix::Zero(da + db, b.cm().dim());
  x.topLeftCorner(da, on_a.x().cols()) = on_a.x();
  x.bottomRightCorner(db, on_b.x().cols()) = on_b.x();
  Matrix n = Matrix::Zero(da + db, da + db);
  n.topLeftCorner(da, da) = on_a.n().matrix();
  n.bottomRightCorner(db, db) = on_b.n().matrix();
  const GaussianChannel joint = validate_channel(x, n, eps_psd);
  return BipartiteCM(apply(joint, b.cm(), eps_psd), on_a.n_out(), on_b.n_out());
}

BipartiteCM choi_cm(const GaussianChannel& ch) {
  const Index dout = ch.x().rows();
  const Index din = ch.x().cols();
  Matrix m = Matrix::Zero(dout + din, dout + din);
  m.topLeftCorner(dout, dout) = ch.n().matrix();
  m.topRightCorner(dout, din) = ch.x();
  m.bottomLeftCorner(din, dout) = -ch.x().transpose();
  return BipartiteCM(fgs::validate_cm(m), ch.n_out(), ch.n_in());
}

extend::FeasibilityResult antidegradable(const GaussianChannel& ch, const extend::FeasibilityOptions& opts) {
  const Index d = ch.x().rows();
  const Matrix id = Matrix::Identity(d, d);
  extend::MaxMarginProblem prob;
  prob.num_vars = extend::antisym_param_count(d);
  extend::LmiBlock own{"delta", matalg::realify(id, Matrix::Zero(d, d)), {}};
  extend::append_antisym_terms(own, 0, d, 0, -1.0);
  extend::LmiBlock env{"channel",
                       matalg::realify(id - 2.0 * ch.x() * ch.x().transpose(), 2.0 * ch.n().matrix()), {}};
  extend::append_antisym_terms(env, 0, d, 0, -1.0);
  prob.blocks = {std::move(own), std::move(env)};

  Vector y0(prob.num_vars);
  extend::pack_antisym(ch.n().matrix(), y0, 0);
  const extend::MaxMarginResult best = extend::solve_with_restart(prob, y0, opts);

  extend::FeasibilityResult r;
  r.newton_steps = best.newton_steps;
  r.margin = best.margin;
  r.margin_bound = best.converged ? best.t + best.gap : std::numeric_limits<double>::quiet_NaN();
  // Antidegradability is 2-extendibility of the Choi state, so its analytic
  // obstructions apply verbatim.
  const extend::ExtendQuery q(choi_cm(ch), 2, 1);
  r.certificate = extend::precheck_cross_correlation(q, opts.eps_feas);
  if (!r.certificate) r.certificate = extend::precheck_column_sum(q, opts.eps_feas);
  if (r.certificate) {
    r.status = extend::FeasibilityStatus::kInfeasibleCertified;
    return r;
  }
  r.status = extend::classify_margin(best, opts);
  if (r.feasible()) r.delta_a = AntisymmetricMatrix(extend::unpack_antisym(best.y, 0, d));
  return r;
}

bool is_entanglement_breaking(const GaussianChannel& ch, double eps_psd) {
  const bool eb = ch.x().size() == 0 || matalg::norms(ch.x()).op <= eps_psd;
  if (eb && !extend::is_separable_gaussian(choi_cm(ch), eps_psd)) {
    throw std::logic_error("replacement channel with a correlated Choi state");
  }
  return eb;
}

GaussianChannel pure_loss(double lam) {
  if (!(lam >= 0.0 && lam <= 1.0)) throw Error(ErrorCode::kOutOfRange, "transmissivity must be in [0, 1]", lam);
  return validate_channel(std::sqrt(lam) * Matrix::Identity(2, 2), (1.0 - lam) * fgs::vacuum(1).matrix());
}

extend::FeasibilityResult channel_k_extendible(const GaussianChannel& ch, int k,
                                               const extend::FeasibilityOptions& opts) {
  return extend::feasibility(extend::ExtendQuery(choi_cm(ch), k, 1), opts);
}

GaussianChannel random_channel(Index modes, fgs::Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = u(rng);
  const Matrix q = fgs::random_special_orthogonal(2 * modes, rng);
  const Matrix m0 = fgs::random_cm(modes, rng).matrix();
  return validate_channel(std::sqrt(1.0 - r) * q, r * m0);
}

}  // namespace fgext::channels
