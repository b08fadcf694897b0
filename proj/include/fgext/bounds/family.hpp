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

#include <array>

#include "fgext/fgs/covariance.hpp"

namespace fgext::bounds {

/// Largest |eigenvalue| of i K for a 4x4 antisymmetric K, in closed form.
double two_mode_op_norm(const Matrix& k);

/// inf over |a|,|b| <= 1 of || M - (a-block (+) b-block) ||_op for a 1+1 mode state.
/// Lower-bounds the trace distance to the separable set. Throws WrongSplit otherwise.
double lower_bound_two_mode(const fgs::BipartiteCM& b);

/// Two-mode state obtained by sending the halves of a maximally entangled pair
/// through pure-loss channels of transmissivity 1/k1 and 1/k2.
fgs::BipartiteCM family_cm(int k1, int k2);

/// Closed-form spectrum of i*family_cm(k1,k2), ascending.
std::array<double, 4> family_spectrum(int k1, int k2);

/// C_eps: only (1,1)-extendible for every eps in (0, 2], with ||X||_1 = eps.
fgs::BipartiteCM epsilon_family(double eps);

/// Closed form of overlap(family_cm(k1,k2), family_cm(1,1)).
double family_overlap_closed_form(int k1, int k2);

/// Overlap-based distance bound from the bosonic argument: overlap - 1/2,
/// which is 1/(2k^2) on the diagonal k1 = k2 = k.
double bosonic_strategy_lower_bound(int k1, int k2);

}  // namespace fgext::bounds
