// Copyright 2026 The lowrank-games Authors.
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

#include "lowrank/bounds.h"

#include <stdexcept>

namespace lowrank {

Integer Binomial(std::size_t n, std::size_t k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer FCount(std::size_t n) {
  Integer total = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    total += Binomial(n + k, k) * Binomial(n, k);
  }
  return total;
}

Integer Tau(std::size_t d) {
  if (d == 0 || d % 2 != 0) {
    throw std::invalid_argument("tau(d) is defined for even d >= 2 only");
  }
  return FCount(d / 2) + FCount(d / 2 - 1) - 1;
}

Integer KeidingPhi(std::size_t d, std::size_t k) {
  if (d == 0 || k < d) throw std::invalid_argument("Phi_{d,k} needs k >= d >= 1");
  if (d % 2 == 0) {
    const std::size_t h = k - d / 2;
    Rational value(Integer(k) * Binomial(h, k - d), Integer(h));
    value.canonicalize();
    if (value.get_den() != 1) {
      throw std::logic_error("Phi_{d,k} evaluated to a non-integer");
    }
    return value.get_num();
  }
  return 2 * Binomial(k - (d + 1) / 2, k - d);
}

Integer RankComponentBound(std::size_t d, std::size_t k) {
  if (k + 1 > d) throw std::invalid_argument("component bound needs k + 1 <= d");
  const Integer c = Binomial(d, k + 1);
  return c * c;
}

Integer HierarchyCount(std::size_t d, std::size_t k) {
  if (k < 2 || k > d) {
    throw std::invalid_argument("hierarchy count needs 2 <= k <= d");
  }
  return Tau(k - 1) * Integer(2 * (d - k) + 1);
}

BoundReport ComputeBounds(std::size_t d, std::optional<std::size_t> k) {
  if (d == 0) throw std::invalid_argument("d must be at least 1");
  BoundReport report;
  report.d = d;
  report.k = k;
  if (d % 2 == 0) report.tau = Tau(d);
  report.keiding = KeidingPhi(d, 2 * d) - 1;
  if (k) report.rank_component_bound = RankComponentBound(d, *k);
  return report;
}

}  // namespace lowrank
