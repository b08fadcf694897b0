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

#include "fgext/extend/lmi_solver.hpp"

#include <cmath>
#include <limits>
#include <optional>

#include <Eigen/Cholesky>

#include "fgext/matalg/spectral.hpp"

namespace fgext::extend {

Matrix LmiBlock::evaluate(const Vector& y) const {
  Matrix g = base;
  for (const auto& term : terms) {
    const double w = y(term.var);
    if (w == 0.0) continue;
    for (const auto& e : term.entries) g(e.row(), e.col()) += w * e.value();
  }
  return g;
}

std::vector<double> MaxMarginProblem::block_margins(const Vector& y) const {
  std::vector<double> out;
  out.reserve(blocks.size());
  for (const auto& b : blocks) out.push_back(matalg::min_eigenvalue(b.evaluate(y)));
  return out;
}

double MaxMarginProblem::margin(const Vector& y) const {
  double m = std::numeric_limits<double>::infinity();
  for (double v : block_margins(y)) m = std::min(m, v);
  return m;
}

void append_antisym_terms(LmiBlock& block, int offset, Index dim, Index pos, double coeff) {
  if (coeff == 0.0) return;
  const Index d = block.base.rows() / 2;
  int var = offset;
  for (Index i = 0; i < dim; ++i) {
    for (Index j = i + 1; j < dim; ++j, ++var) {
      const Index r = pos + i;
      const Index c = pos + j;
      LmiTerm term;
      term.var = var;
      term.entries = {{d + r, c, coeff}, {c, d + r, coeff}, {d + c, r, -coeff}, {r, d + c, -coeff}};
      block.terms.push_back(std::move(term));
    }
  }
}

void pack_antisym(const Matrix& delta, Vector& y, int offset) {
  int var = offset;
  for (Index i = 0; i < delta.rows(); ++i)
    for (Index j = i + 1; j < delta.cols(); ++j) y(var++) = delta(i, j);
}

Matrix unpack_antisym(const Vector& y, int offset, Index dim) {
  Matrix m = Matrix::Zero(dim, dim);
  int var = offset;
  for (Index i = 0; i < dim; ++i) {
    for (Index j = i + 1; j < dim; ++j, ++var) {
      m(i, j) = y(var);
      m(j, i) = -y(var);
    }
  }
  return m;
}

namespace {

// Variables are (y_0 .. y_{p-1}, t); the t coefficient in every block is -I.
class Barrier {
 public:
  Barrier(const MaxMarginProblem& problem) : problem_(problem), p_(problem.num_vars) {
    for (const auto& b : problem.blocks) nu_ += static_cast<double>(b.base.rows());
  }

  double nu() const { return nu_; }

  /// Barrier value -s t - sum log det(G_b(y) - t I), or nullopt outside the domain.
  std::optional<double> value(const Vector& z, double s) const {
    double v = -s * z(p_);
    for (const auto& b : problem_.blocks) {
      Matrix g = b.evaluate(z.head(p_));
      g.diagonal().array() -= z(p_);
      Eigen::LLT<Matrix> llt(g);
      if (llt.info() != Eigen::Success) return std::nullopt;
      const Vector diag = llt.matrixLLT().diagonal();
      for (Index i = 0; i < diag.size(); ++i) {
        if (!(diag(i) > 0.0)) return std::nullopt;
        v -= 2.0 * std::log(diag(i));
      }
    }
    return v;
  }

  /// Gradient and Hessian at a strictly feasible z.
  bool derivatives(const Vector& z, double s, Vector& grad, Matrix& hess) const {
    const int nz = p_ + 1;
    grad = Vector::Zero(nz);
    hess = Matrix::Zero(nz, nz);
    grad(p_) = -s;
    for (const auto& b : problem_.blocks) {
      Matrix g = b.evaluate(z.head(p_));
      g.diagonal().array() -= z(p_);
      const Index d = g.rows();
      Eigen::LLT<Matrix> llt(g);
      if (llt.info() != Eigen::Success) return false;
      const Matrix w = llt.solve(Matrix::Identity(d, d));
      const Matrix w2 = w * w;

      // t has coefficient -I.
      grad(p_) += w.trace();
      hess(p_, p_) += w.squaredNorm();
      for (const auto& tk : b.terms) {
        double tr = 0.0;
        double cross = 0.0;
        for (const auto& e : tk.entries) {
          tr += e.value() * w(e.col(), e.row());
          cross += e.value() * w2(e.col(), e.row());
        }
        grad(tk.var) -= tr;
        hess(tk.var, p_) -= cross;
        hess(p_, tk.var) -= cross;
      }
      for (std::size_t a = 0; a < b.terms.size(); ++a) {
        for (std::size_t c = a; c < b.terms.size(); ++c) {
          // tr(W A W C) = sum A(i,j) W(j,k) C(k,l) W(l,i)
          double acc = 0.0;
          for (const auto& ea : b.terms[a].entries) {
            for (const auto& ec : b.terms[c].entries) {
              acc += ea.value() * ec.value() * w(ea.col(), ec.row()) * w(ec.col(), ea.row());
            }
          }
          hess(b.terms[a].var, b.terms[c].var) += acc;
          if (c != a) hess(b.terms[c].var, b.terms[a].var) += acc;
        }
      }
    }
    return true;
  }

 private:
  const MaxMarginProblem& problem_;
  int p_;
  double nu_ = 0.0;
};

}  // namespace

MaxMarginResult maximize_margin(const MaxMarginProblem& problem, const Vector& y0,
                                const SolverOptions& options) {
  const int p = problem.num_vars;
  Barrier barrier(problem);
  Vector z(p + 1);
  z.head(p) = y0;
  z(p) = problem.margin(y0) - 1.0;

  MaxMarginResult result;
  result.y = y0;
  result.t = z(p);
  result.gap = std::numeric_limits<double>::infinity();
  double s = 1.0;
  int steps = 0;
  Vector grad;
  Matrix hess;

  while (steps < options.max_newton_steps) {
    // Damped Newton centering with the self-concordant step 1/(1+lambda); it
    // needs no barrier-value comparisons, which lose precision near the optimum.
    bool centered = false;
    for (int inner = 0; inner < 100 && steps < options.max_newton_steps; ++inner) {
      if (!barrier.derivatives(z, s, grad, hess)) break;
      ++steps;
      // Jacobi scaling keeps the solve well conditioned as s grows.
      const Vector scale = hess.diagonal().cwiseMax(1e-300).cwiseSqrt().cwiseInverse();
      const Matrix hs = scale.asDiagonal() * hess * scale.asDiagonal();
      Vector dz = -(scale.asDiagonal() * Eigen::LDLT<Matrix>(hs).solve(scale.asDiagonal() * grad));
      if (!dz.allFinite()) break;
      const double decrement = std::max(0.0, -grad.dot(dz));
      if (decrement < 1e-12) {
        centered = true;
        break;
      }
      const double lambda = std::sqrt(decrement);
      double alpha = lambda < 0.25 ? 1.0 : 1.0 / (1.0 + lambda);
      bool moved = false;
      for (int ls = 0; ls < 60; ++ls, alpha *= 0.5) {
        const Vector trial = z + alpha * dz;
        if (barrier.value(trial, s)) {
          z = trial;
          moved = true;
          break;
        }
      }
      if (!moved) {
        centered = decrement < 1e-6;
        break;
      }
      if (decrement < 1e-9 && alpha == 1.0) {
        centered = true;
        break;
      }
    }
    if (!centered) break;
    // Approximately on the central path: the optimum lies in [t, t + nu/s].
    result.y = z.head(p);
    result.t = z(p);
    result.gap = barrier.nu() / s;
    result.converged = true;
    if (result.gap < options.gap_tol) break;
    s *= options.growth;
  }

  // The last iterate may be better than the last centered point.
  const double last = problem.margin(z.head(p));
  result.margin = problem.margin(result.y);
  if (last > result.margin) {
    result.y = z.head(p);
    result.margin = last;
  }
  result.newton_steps = steps;
  return result;
}

}  // namespace fgext::extend
