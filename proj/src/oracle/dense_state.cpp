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

#include "fgext/oracle/dense_state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "fgext/matalg/spectral.hpp"

namespace fgext::oracle {
namespace {

Complex trace_product(const SparseC& op, const CMatrix& rho) {
  Complex acc(0.0, 0.0);
  for (Index k = 0; k < op.outerSize(); ++k) {
    for (SparseC::InnerIterator it(op, k); it; ++it) {
      acc += it.value() * rho(it.col(), it.row());
    }
  }
  return acc;
}

// Fermionic swap of the modes at positions k and k + 1.
CMatrix fswap(const CMatrix& rho, int n, int k) {
  const Index dim = rho.rows();
  const std::uint32_t b1 = 1u << (n - 1 - k);
  const std::uint32_t b2 = 1u << (n - 2 - k);
  auto partner = [&](std::uint32_t x) {
    const bool x1 = x & b1, x2 = x & b2;
    std::uint32_t y = x & ~(b1 | b2);
    if (x1) y |= b2;
    if (x2) y |= b1;
    return y;
  };
  auto sign = [&](std::uint32_t x) { return ((x & b1) && (x & b2)) ? -1.0 : 1.0; };
  CMatrix out(dim, dim);
  for (Index r = 0; r < dim; ++r) {
    const auto rr = static_cast<std::uint32_t>(r);
    for (Index c = 0; c < dim; ++c) {
      const auto cc = static_cast<std::uint32_t>(c);
      out(r, c) = sign(rr) * sign(cc) * rho(partner(rr), partner(cc));
    }
  }
  return out;
}

}  // namespace

DenseState DenseState::create(int n, CMatrix rho, double tol) {
  if (n < 1 || n > kMaxModes) throw Error(ErrorCode::kTooManyModes, "dense state mode count");
  const Index dim = Index{1} << n;
  if (rho.rows() != dim || rho.cols() != dim) {
    throw Error(ErrorCode::kDimensionMismatch, "density matrix is not 2^n x 2^n");
  }
  std::ostringstream why;
  const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  const Complex tr = rho.trace();
  if (herm > tol) {
    why << "not Hermitian (" << herm << ")";
  } else if (std::abs(tr - 1.0) > tol) {
    why << "trace " << tr.real() << " != 1";
  } else {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(rho, Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues()(0);
    if (lo < -tol) {
      why << "negative eigenvalue " << lo;
    } else {
      const auto& p = jordan_wigner(n)->parity;
      const CMatrix comm = p * rho - rho * p;
      const double c = comm.cwiseAbs().maxCoeff();
      if (c > tol) why << "does not commute with parity (" << c << ")";
    }
  }
  if (!why.str().empty()) throw Error(ErrorCode::kInvalidParameter, "invalid density matrix: " + why.str());
  return DenseState(n, std::move(rho));
}

DenseState state_from_cm(const fgs::CovarianceMatrix& m) {
  const int n = static_cast<int>(m.modes());
  if (n > kMaxModes) throw Error(ErrorCode::kTooManyModes, "dense oracle supports at most 12 modes");
  const auto majoranas = jordan_wigner(n);
  const auto cf = matalg::canonical_form(m.body());
  const Index dim = Index{1} << n;

  std::vector<SparseC> rotated(2 * n, SparseC(dim, dim));
  for (int a = 0; a < 2 * n; ++a) {
    for (int b = 0; b < 2 * n; ++b) {
      const double w = cf.rotation(b, a);
      if (w != 0.0) rotated[a] += Complex(w, 0.0) * majoranas->gammas[b];
    }
  }

  CMatrix rho = CMatrix::Identity(dim, dim) / static_cast<double>(dim);
  for (int j = 0; j < n; ++j) {
    const double l = cf.lambdas(j);
    if (l == 0.0) continue;
    const SparseC pair = rotated[2 * j] * rotated[2 * j + 1];
    rho += Complex(0.0, l) * (rho * pair);
  }
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DenseState::create(n, std::move(rho), 1e-9);
}

fgs::CovarianceMatrix cm_from_state(const DenseState& s) {
  const auto majoranas = jordan_wigner(s.modes());
  const int d = 2 * s.modes();
  Matrix m = Matrix::Zero(d, d);
  for (int p = 0; p < d; ++p) {
    for (int q = p + 1; q < d; ++q) {
      const SparseC prod = majoranas->gammas[p] * majoranas->gammas[q];
      const double v = (Complex(0.0, 1.0) * trace_product(prod, s.rho())).real();
      m(p, q) = v;
      m(q, p) = -v;
    }
  }
  return fgs::validate_cm(m);
}

double trace_distance(const DenseState& a, const DenseState& b) {
  if (a.modes() != b.modes()) throw Error(ErrorCode::kDimensionMismatch, "trace distance of unequal sizes");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(a.rho() - b.rho(), Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

Complex monomial_expectation(const DenseState& s, const std::vector<int>& idx) {
  const auto majoranas = jordan_wigner(s.modes());
  const int d = 2 * s.modes();
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] < 0 || idx[k] >= d) throw Error(ErrorCode::kIndexOutOfRange, "Majorana index out of range");
    if (k > 0 && idx[k] <= idx[k - 1]) {
      throw Error(ErrorCode::kIndexOutOfRange, "Majorana indices must be strictly increasing");
    }
  }
  if (idx.empty()) return s.rho().trace();
  SparseC prod = majoranas->gammas[idx[0]];
  for (std::size_t k = 1; k < idx.size(); ++k) prod = (prod * majoranas->gammas[idx[k]]).eval();
  return trace_product(prod, s.rho());
}

WickCheck wick_check(const DenseState& s, const fgs::CovarianceMatrix& m, const std::vector<int>& idx) {
  if (idx.size() % 2 != 0) throw Error(ErrorCode::kOddSubset, "Wick check needs an even index subset");
  if (m.modes() != s.modes()) throw Error(ErrorCode::kDimensionMismatch, "state and CM sizes differ");
  const Complex raw = monomial_expectation(s, idx);
  // i^{m/2}
  Complex phase(1.0, 0.0);
  for (std::size_t k = 0; k < idx.size() / 2; ++k) phase *= Complex(0.0, 1.0);
  std::vector<Index> sub(idx.begin(), idx.end());
  return {(phase * raw).real(), matalg::pfaffian(m.body().principal(sub))};
}

double von_neumann_entropy(const CMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Index k = 0; k < es.eigenvalues().size(); ++k) {
    const double p = es.eigenvalues()(k);
    if (p > 1e-15) s -= p * std::log2(p);
  }
  return s;
}

CMatrix partial_trace_tail(const CMatrix& rho, int n_total, int n_keep) {
  const Index d_keep = Index{1} << n_keep;
  const Index d_rest = Index{1} << (n_total - n_keep);
  CMatrix out = CMatrix::Zero(d_keep, d_keep);
  for (Index a = 0; a < d_keep; ++a)
    for (Index a2 = 0; a2 < d_keep; ++a2)
      for (Index b = 0; b < d_rest; ++b) out(a, a2) += rho(a * d_rest + b, a2 * d_rest + b);
  return out;
}

CMatrix partial_trace_head(const CMatrix& rho, int n_total, int n_keep) {
  const Index d_keep = Index{1} << n_keep;
  const Index d_rest = Index{1} << (n_total - n_keep);
  CMatrix out = CMatrix::Zero(d_keep, d_keep);
  for (Index b = 0; b < d_keep; ++b)
    for (Index b2 = 0; b2 < d_keep; ++b2)
      for (Index a = 0; a < d_rest; ++a) out(b, b2) += rho(a * d_keep + b, a * d_keep + b2);
  return out;
}

Entropies entropies(const DenseState& s, int n_a, int n_b) {
  if (n_a < 0 || n_b < 0 || n_a + n_b != s.modes()) {
    throw Error(ErrorCode::kWrongSplit, "split does not match the state's mode count");
  }
  const double s_ab = von_neumann_entropy(s.rho());
  const double s_a = n_a == 0 ? 0.0 : von_neumann_entropy(partial_trace_tail(s.rho(), s.modes(), n_a));
  const double s_b = n_b == 0 ? 0.0 : von_neumann_entropy(partial_trace_head(s.rho(), s.modes(), n_b));
  return {s_a, s_b, s_ab, s_a + s_b - s_ab};
}

DenseState permute_modes(const DenseState& s, const std::vector<int>& order) {
  const int n = s.modes();
  if (static_cast<int>(order.size()) != n) throw Error(ErrorCode::kDimensionMismatch, "permutation size");
  std::vector<int> current(n);
  for (int k = 0; k < n; ++k) current[k] = k;
  CMatrix rho = s.rho();
  for (int target = 0; target < n; ++target) {
    const auto it = std::find(current.begin() + target, current.end(), order[target]);
    if (it == current.end()) throw Error(ErrorCode::kIndexOutOfRange, "order is not a permutation");
    for (int p = static_cast<int>(it - current.begin()); p > target; --p) {
      rho = fswap(rho, n, p - 1);
      std::swap(current[p - 1], current[p]);
    }
  }
  return DenseState::create(n, std::move(rho), 1e-9);
}

DenseState reduced_state(const DenseState& s, const std::vector<int>& keep) {
  const int n = s.modes();
  std::vector<int> order(keep);
  for (int k = 0; k < n; ++k) {
    if (std::find(keep.begin(), keep.end(), k) == keep.end()) order.push_back(k);
  }
  const DenseState permuted = permute_modes(s, order);
  const int n_keep = static_cast<int>(keep.size());
  return DenseState::create(n_keep, partial_trace_tail(permuted.rho(), n, n_keep), 1e-9);
}

bool check_parity_superselection(const DenseState& s, double tol) {
  const auto& p = jordan_wigner(s.modes())->parity;
  const CMatrix comm = p * s.rho() - s.rho() * p;
  return comm.cwiseAbs().maxCoeff() <= tol;
}

DenseState tensor(const DenseState& a, const DenseState& b) {
  const int n = a.modes() + b.modes();
  if (n > kMaxModes) throw Error(ErrorCode::kTooManyModes, "tensor product too large");
  const Index da = a.dim(), db = b.dim();
  CMatrix out(da * db, da * db);
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < da; ++j) out.block(i * db, j * db, db, db) = a.rho()(i, j) * b.rho();
  return DenseState::create(n, std::move(out), 1e-9);
}

}  // namespace fgext::oracle
