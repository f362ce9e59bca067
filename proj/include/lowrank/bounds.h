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

#ifndef LOWRANK_BOUNDS_H_
#define LOWRANK_BOUNDS_H_

#include <cstddef>
#include <optional>

#include "lowrank/rational.h"

namespace lowrank {

Integer Binomial(std::size_t n, std::size_t k);

// f(n) = sum_{k=0}^{n} C(n+k, k) C(n, k).
Integer FCount(std::size_t n);

// von Stengel's lower bound f(d/2) + f(d/2 - 1) - 1 for even d >= 2.
// Throws std::invalid_argument for odd or zero d.
Integer Tau(std::size_t d);

// Keiding's Phi_{d,k}:
//   d even:  k / (k - d/2) * C(k - d/2, k - d)
//   d odd:   2 * C(k - (d+1)/2, k - d)
// Requires k >= d >= 1. The number of equilibria of a non-degenerate d x d
// game is at most Phi_{d,2d} - 1.
Integer KeidingPhi(std::size_t d, std::size_t k);

// C(d, k+1)^2. Throws std::invalid_argument if k + 1 > d.
Integer RankComponentBound(std::size_t d, std::size_t k);

// tau(k-1) * (2(d-k) + 1): equilibria of the block game built from a
// (k-1)-dimensional inner game with tau(k-1) equilibria and the rank-1
// family of size d-k+1. Requires k - 1 even and 2 <= k <= d.
Integer HierarchyCount(std::size_t d, std::size_t k);

struct BoundReport {
  std::size_t d = 0;
  std::optional<std::size_t> k;
  std::optional<Integer> tau;  // even d only
  Integer keiding;             // Phi_{d,2d} - 1
  std::optional<Integer> rank_component_bound;
};

BoundReport ComputeBounds(std::size_t d, std::optional<std::size_t> k);

}  // namespace lowrank

#endif  // LOWRANK_BOUNDS_H_
