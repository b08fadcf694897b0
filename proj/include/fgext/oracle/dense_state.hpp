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

#include <complex>
#include <memory>
#include <vector>

#include <Eigen/Sparse>

#include "fgext/fgs/covariance.hpp"

// Brute-force Fock-space representation. This is the only part of the library that uses
// complex arithmetic; everything else works on real covariance matrices.
namespace fgext::oracle {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using SparseC = Eigen::SparseMatrix<Complex>;

inline constexpr int kMaxModes = 12;

/// Jordan-Wigner Majoranas in the occupation basis, mode 1 being the most significant qubit:
///   gamma_{2j-1} = Z^(j-1) X I..., gamma_{2j} = -Z^(j-1) Y I...
/// so that gamma_{2j-1} = c_j + c_j^dag and gamma_{2j} = i(c_j - c_j^dag).
struct MajoranaSet {
  int n = 0;
  std::vector<SparseC> gammas;
  /// i^n gamma_1 gamma_2 ... gamma_2n = (-1)^N.
  SparseC parity;
};

/// Memoized per n; the cache is safe for concurrent readers. Throws TooManyModes for n > 12.
std::shared_ptr<const MajoranaSet> jordan_wigner(int n);

/// Density matrix on n modes. Construction checks unit trace, Hermiticity, positivity and
/// commutation with parity, each within `tol`.
class DenseState {
 public:
  static DenseState create(int n, CMatrix rho, double tol = 1e-10);

  int modes() const noexcept { return n_; }
  Index dim() const noexcept { return rho_.rows(); }
  const CMatrix& rho() const noexcept { return rho_; }

 private:
  DenseState(int n, CMatrix rho) : n_(n), rho_(std::move(rho)) {}

  int n_;
  CMatrix rho_;
};

/// rho = 2^-n prod_j (I + i lambda_j gt_{2j-1} gt_{2j}) with gt = O^T gamma.
DenseState state_from_cm(const fgs::CovarianceMatrix& m);

/// M_pq = Re Tr(i gamma_p gamma_q rho), zero diagonal.
fgs::CovarianceMatrix cm_from_state(const DenseState& s);

/// ||rho_a - rho_b||_1.
double trace_distance(const DenseState& a, const DenseState& b);

/// Tr(gamma_{i1} ... gamma_{im} rho) for strictly increasing 0-based indices, without any
/// phase prefactor.
Complex monomial_expectation(const DenseState& s, const std::vector<int>& idx);

struct WickCheck {
  double lhs;
  double rhs;
};

/// lhs = Re Tr(i^{m/2} gamma(idx) rho), rhs = Pf(M[idx]); idx 0-based, strictly increasing,
/// even size.
WickCheck wick_check(const DenseState& s, const fgs::CovarianceMatrix& m,
                     const std::vector<int>& idx);

/// Von Neumann entropy in bits.
double von_neumann_entropy(const CMatrix& rho);

/// Partial trace keeping the first `n_keep` modes.
CMatrix partial_trace_tail(const CMatrix& rho, int n_total, int n_keep);
/// Partial trace keeping the last `n_keep` modes.
CMatrix partial_trace_head(const CMatrix& rho, int n_total, int n_keep);

struct Entropies {
  double s_a;
  double s_b;
  double s_ab;
  double i_ab;
};

/// A = first n_a modes, B = the remaining n_b modes.
Entropies entropies(const DenseState& s, int n_a, int n_b);

/// Relabels modes with fermionic swaps: mode k of the result is mode order[k] of `s`.
DenseState permute_modes(const DenseState& s, const std::vector<int>& order);

/// Reduced state on an arbitrary list of modes, in the listed order.
DenseState reduced_state(const DenseState& s, const std::vector<int>& keep);

/// ||[rho, P]||_max <= tol.
bool check_parity_superselection(const DenseState& s, double tol = 1e-10);

/// Tensor product in the Jordan-Wigner basis, a on the leading modes. Valid as a fermionic
/// product for parity-respecting factors.
DenseState tensor(const DenseState& a, const DenseState& b);

}  // namespace fgext::oracle
