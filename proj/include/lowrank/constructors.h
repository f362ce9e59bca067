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

#ifndef LOWRANK_CONSTRUCTORS_H_
#define LOWRANK_CONSTRUCTORS_H_

#include <cstddef>
#include <optional>
#include <utility>

#include "lowrank/game.h"
#include "lowrank/matrix.h"
#include "lowrank/rational.h"

namespace lowrank {

// d x d game with a_ij = 2ij - i^2 + j^2 and b_ij = 2ij + i^2 - j^2
// (1-based). A + B = (4ij) has rank 1, A = B^T, and the game has exactly
// 2d - 1 equilibria. Throws std::invalid_argument for d = 0.
BimatrixGame Rank1Family(std::size_t d);

// A = B = (-(i-j)^2). Differs from Rank1Family(d) by constant column shifts
// of A and constant row shifts of B, so both have the same equilibria.
BimatrixGame AuxFamily(std::size_t d);

// A = B = I_d; 2^d - 1 equilibria.
BimatrixGame IdentityGame(std::size_t d);

// diag(inner, outer) for both payoff matrices. Both games must be square.
BimatrixGame BlockGame(const BimatrixGame& inner, const BimatrixGame& outer);

// c_ij = p(g_i - g_j) with p(t) = sum_k coefficients[k] t^k. The rank is at
// most (n+1)(n+2)/2 for a polynomial of degree n.
RationalMatrix PolyKernelMatrix(const RationalVector& g,
                                const RationalVector& coefficients);

// Returns (u, v) with c_ij = u_i + v_j and u_0 = 0, if such vectors exist.
std::optional<std::pair<RationalVector, RationalVector>>
FindAdditiveDecomposition(const RationalMatrix& c);

// a'_ij = a_ij - v_j, b'_ij = b_ij - u_i. Requires a_ij + b_ij = u_i + v_j;
// throws std::invalid_argument otherwise. The result is zero-sum with the
// same equilibria.
BimatrixGame AdditiveToZeroSum(const BimatrixGame& game,
                               const RationalVector& u,
                               const RationalVector& v);

}  // namespace lowrank

#endif  // LOWRANK_CONSTRUCTORS_H_
