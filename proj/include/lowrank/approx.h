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

#ifndef LOWRANK_APPROX_H_
#define LOWRANK_APPROX_H_

#include <cstddef>
#include <vector>

#include "lowrank/game.h"
#include "lowrank/matrix.h"
#include "lowrank/rational.h"

namespace lowrank {

inline constexpr long kSvdDenominatorCap = 1000000;
inline constexpr std::size_t kMaxApproxRank = 4;

// Rank-<=k approximation of `c` from a floating-point Jacobi SVD. The leading
// k singular triplets are rationalized as factors (sigma * u, v) with
// denominators at most kSvdDenominatorCap and multiplied out exactly, so the
// result has rank <= k. If k >= rank(c), c itself is returned.
RationalMatrix SvdTruncate(const RationalMatrix& c, std::size_t k);

// (A', B') = (A + (C'-C)/2, B + (C'-C)/2), so that A' + B' = C'.
struct GamePerturbation {
  BimatrixGame original;
  RationalMatrix c_prime;
  BimatrixGame perturbed;
  // |C - C'| / |A + B|. The defining inequality |C - C'| < eps |A+B| is
  // strict, so this is the infimum of admissible eps rather than a member.
  Rational eps;
};

// Throws std::invalid_argument on shape mismatch, on a zero-sum original
// (eps undefined), or when |C - C'| >= |A + B|.
GamePerturbation PerturbGame(const BimatrixGame& game,
                             const RationalMatrix& c_prime);

// Is the equilibrium `eq` of the original a 3 eps-approximate equilibrium of
// the perturbed game? Throws std::invalid_argument if `eq` is not an exact
// equilibrium of the original.
bool CheckPerturbationTheorem(const GamePerturbation& pert,
                              const MixedProfile& eq);

struct ApproxOptions {
  std::size_t max_rank = kMaxApproxRank;
  std::size_t threads = 0;  // 0: hardware concurrency
};

struct ApproxResult {
  EquilibriumReport report;
  // Verified bound: loss <= bound (absolute scheme: eps |A+B|; relative
  // scheme: rho * s).
  Rational bound;
  std::size_t levels = 0;     // grid refinement levels visited
  std::size_t lps_solved = 0;
  std::size_t cell = 0;       // winning cell, row-major within its level
};

// Finds a profile with loss <= eps |A+B| for a game of small rank k. A + B is
// factorized exactly as sum_i u_i v_i^T and each z_i = x^T u_i is gridded
// into cells; every cell gives one LP in which the bilinear term is replaced
// by sum_i zhat_i (v_i^T y) at the cell centre zhat. Grids are dyadic
// subdivisions of [min u_i, max u_i], refined one level at a time until the
// best exactly verified loss meets the bound. Candidates from coarser levels
// stay in the pool, so a smaller eps never yields a larger loss.
//
// Throws std::invalid_argument for eps <= 0 and GuardExceeded when
// rank(A+B) > options.max_rank.
ApproxResult ApproxAbsolute(const BimatrixGame& game, const Rational& eps,
                            const ApproxOptions& options = {});

// 1 - 1/(1+eps)^2.
Rational RelativeRatio(const Rational& eps);

// Relative approximation for A + B = sum_i u_i v_i^T with nonnegative
// factors: returns (x, y) with s - x^T C y <= rho s, where s is the sum of
// best-response payoffs and rho = RelativeRatio(eps). Uses geometric grids on
// z_i = x^T u_i and w_i = v_i^T y with one LP per cell.
//
// A factor whose range starts at 0 gets a first interval [0, max * eps /
// (1 + eps)] followed by the geometric progression; the ratio guarantee is
// not claimed for cells using that interval, and every candidate is verified
// exactly.
//
// Throws std::invalid_argument if eps <= 0, the factors are negative or do
// not reconstruct A + B.
ApproxResult ApproxRelative(const BimatrixGame& game,
                            const RankFactorization& decomposition,
                            const Rational& eps,
                            const ApproxOptions& options = {});

// Interval endpoints of the geometric grid over [lo, hi] used by
// ApproxRelative: lo, lo (1+eps), ..., truncated at hi.
std::vector<Rational> GeometricGrid(const Rational& lo, const Rational& hi,
                                    const Rational& eps);

}  // namespace lowrank

#endif  // LOWRANK_APPROX_H_
