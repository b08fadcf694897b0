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

#include "fgext/oracle/suites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "fgext/bounds/family.hpp"
#include "fgext/channels/channel.hpp"
#include "fgext/core/error.hpp"
#include "fgext/extend/extension.hpp"
#include "fgext/fgs/random.hpp"
#include "fgext/matalg/spectral.hpp"
#include "fgext/oracle/dense_state.hpp"

namespace fgext::oracle {

namespace {

void check_sizes(int n_max, int trials) {
  if (n_max < 1 || n_max > kMaxModes) throw Error(ErrorCode::kInvalidParameter, "n_max out of range");
  if (trials < 1) throw Error(ErrorCode::kInvalidParameter, "trials must be positive");
}

void even_subsets(int dim, int max_size, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (cur.size() % 2 == 0) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_size) return;
    for (int i = start; i < dim; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

SuiteReport roundtrip_suite(int n_max, int trials, std::uint64_t seed) {
  check_sizes(n_max, trials);
  SuiteReport r{"roundtrip", trials, 0, 0.0, 1e-9, false};
  fgs::Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int n = 1 + t % n_max;
    const auto m = fgs::random_cm(n, rng);
    const auto back = cm_from_state(state_from_cm(m));
    r.max_residual = std::max(r.max_residual, (back.matrix() - m.matrix()).cwiseAbs().maxCoeff());
    ++r.checks;
  }
  r.passed = r.max_residual < r.tolerance;
  return r;
}

SuiteReport wick_suite(int n_max, int trials, std::uint64_t seed) {
  check_sizes(n_max, trials);
  SuiteReport r{"wick", trials, 0, 0.0, 1e-8, false};
  fgs::Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int n = 1 + t % n_max;
    const auto m = fgs::random_cm(n, rng);
    const auto s = state_from_cm(m);
    std::vector<std::vector<int>> subsets;
    even_subsets(2 * n, 6, subsets);
    for (const auto& idx : subsets) {
      const auto w = wick_check(s, m, idx);
      r.max_residual = std::max(r.max_residual, std::abs(w.lhs - w.rhs));
      ++r.checks;
    }
  }
  r.passed = r.max_residual < r.tolerance;
  return r;
}

SuiteReport sandwich_suite(int n_max, int trials, std::uint64_t seed) {
  check_sizes(n_max, trials);
  SuiteReport r{"sandwich", trials, 0, 0.0, 1e-9, false};
  fgs::Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int n = 1 + t % n_max;
    const auto m1 = fgs::random_cm(n, rng);
    const auto m2 = fgs::random_cm(n, rng);
    const double td = trace_distance(state_from_cm(m1), state_from_cm(m2));
    const auto nm = matalg::norms(m1.matrix() - m2.matrix());
    r.max_residual = std::max({r.max_residual, nm.op - td, td - 0.5 * nm.trace});
    r.checks += 2;
  }
  r.passed = r.max_residual <= r.tolerance;
  return r;
}

SuiteReport extension_suite(int trials, std::uint64_t seed) {
  check_sizes(1, trials);
  SuiteReport r{"extension", trials, 0, 0.0, 1e-8, false};
  fgs::Rng rng(seed);
  const auto base = bounds::family_cm(2, 1);
  for (int t = 0; t < trials; ++t) {
    // Local channels preserve extendibility, so every instance stays (2,1)-extendible.
    const auto b = t == 0 ? base
                          : channels::apply_local(channels::random_channel(1, rng),
                                                  channels::random_channel(1, rng), base);
    const extend::ExtendQuery q(b, 2, 1);
    const auto res = extend::feasibility(q);
    if (!res.feasible()) {
      r.max_residual = std::numeric_limits<double>::infinity();
      continue;
    }
    const auto ext = extend::build_extension(q, res);
    const auto rho = state_from_cm(ext);
    const auto target = state_from_cm(b.cm());
    for (int copy = 0; copy < 2; ++copy) {
      const auto marg = reduced_state(rho, {copy, 2});
      r.max_residual = std::max(r.max_residual, trace_distance(marg, target));
      ++r.checks;
    }
  }
  r.passed = r.max_residual < r.tolerance;
  return r;
}

SuiteReport run_suite(const std::string& name, int n_max, int trials, std::uint64_t seed) {
  if (name == "roundtrip") return roundtrip_suite(n_max, trials, seed);
  if (name == "wick") return wick_suite(n_max, trials, seed);
  if (name == "sandwich") return sandwich_suite(n_max, trials, seed);
  if (name == "extension") return extension_suite(trials, seed);
  throw Error(ErrorCode::kInvalidParameter, "unknown suite '" + name + "'");
}

}  // namespace fgext::oracle
