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

#include <bit>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "fgext/oracle/dense_state.hpp"

namespace fgext::oracle {
namespace {

std::shared_ptr<const MajoranaSet> build(int n) {
  auto set = std::make_shared<MajoranaSet>();
  set->n = n;
  const std::uint32_t dim = 1u << n;
  const std::uint32_t all = dim - 1;
  const Complex i_unit(0.0, 1.0);

  for (int j = 0; j < n; ++j) {
    const int pos = n - 1 - j;
    const std::uint32_t bit = 1u << pos;
    // Occupations of modes 1..j-1 live in the bits above `pos`.
    const std::uint32_t before = all ^ ((bit << 1) - 1);
    std::vector<Eigen::Triplet<Complex>> odd;
    std::vector<Eigen::Triplet<Complex>> even;
    odd.reserve(dim);
    even.reserve(dim);
    for (std::uint32_t b = 0; b < dim; ++b) {
      const double string_sign = (std::popcount(b & before) % 2) ? -1.0 : 1.0;
      const bool occupied = (b & bit) != 0;
      const std::uint32_t target = b ^ bit;
      odd.emplace_back(target, b, Complex(string_sign, 0.0));
      // -Y: |0> -> -i|1>, |1> -> i|0>.
      even.emplace_back(target, b, string_sign * (occupied ? i_unit : -i_unit));
    }
    SparseC g_odd(dim, dim), g_even(dim, dim);
    g_odd.setFromTriplets(odd.begin(), odd.end());
    g_even.setFromTriplets(even.begin(), even.end());
    set->gammas.push_back(std::move(g_odd));
    set->gammas.push_back(std::move(g_even));
  }

  std::vector<Eigen::Triplet<Complex>> par;
  for (std::uint32_t b = 0; b < dim; ++b) {
    par.emplace_back(b, b, Complex(std::popcount(b) % 2 ? -1.0 : 1.0, 0.0));
  }
  set->parity.resize(dim, dim);
  set->parity.setFromTriplets(par.begin(), par.end());
  return set;
}

}  // namespace

std::shared_ptr<const MajoranaSet> jordan_wigner(int n) {
  if (n < 1 || n > kMaxModes) {
    throw Error(ErrorCode::kTooManyModes,
                "mode count " + std::to_string(n) + " outside [1, " + std::to_string(kMaxModes) + "]");
  }
  static std::shared_mutex mutex;
  static std::map<int, std::shared_ptr<const MajoranaSet>> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto built = build(n);
  std::unique_lock lock(mutex);
  auto [it, inserted] = cache.emplace(n, std::move(built));
  return it->second;
}

}  // namespace fgext::oracle
