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

#ifndef LOWRANK_GAME_H_
#define LOWRANK_GAME_H_

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lowrank/matrix.h"
#include "lowrank/rational.h"

namespace lowrank {

// Two-player game (A, B) with payoffs x^T A y and x^T B y. Immutable; the sum
// matrix C = A + B, its rank and its max-abs norm are computed once.
class BimatrixGame {
 public:
  // Throws std::invalid_argument if A and B differ in shape or are empty.
  BimatrixGame(RationalMatrix a, RationalMatrix b);

  const RationalMatrix& a() const { return a_; }
  const RationalMatrix& b() const { return b_; }
  const RationalMatrix& sum() const { return c_; }
  std::size_t rank() const { return rank_; }
  const Rational& sum_norm() const { return norm_; }

  std::size_t rows() const { return a_.rows(); }
  std::size_t cols() const { return a_.cols(); }
  bool is_square() const { return rows() == cols(); }
  bool is_zero_sum() const { return rank_ == 0; }

  friend bool operator==(const BimatrixGame& l, const BimatrixGame& r) {
    return l.a_ == r.a_ && l.b_ == r.b_;
  }

 private:
  RationalMatrix a_;
  RationalMatrix b_;
  RationalMatrix c_;
  std::size_t rank_;
  Rational norm_;
};

// A point of S1 x S2.
struct MixedProfile {
  RationalVector x;
  RationalVector y;

  friend bool operator==(const MixedProfile&, const MixedProfile&) = default;
  friend auto operator<=>(const MixedProfile& l, const MixedProfile& r) {
    if (auto c = Compare(l.x, r.x); c != 0) return c;
    return Compare(l.y, r.y);
  }

 private:
  static std::strong_ordering Compare(const RationalVector& l,
                                      const RationalVector& r);
};

// Unit vector e_i of length n.
RationalVector UnitVector(std::size_t n, std::size_t i);
RationalVector Uniform(std::size_t n);

// Throws std::invalid_argument unless x, y are probability vectors sized for
// `game`.
void ValidateProfile(const BimatrixGame& game, const MixedProfile& p);
bool IsProbabilityVector(const RationalVector& v);

std::vector<std::size_t> Support(const RationalVector& v);

// l(x,y) = max_i A^(i) y + max_j x^T B_(j) - x^T (A+B) y.
Rational Loss(const BimatrixGame& game, const MixedProfile& p);

// (max_i A^(i) y, max_j x^T B_(j)).
std::pair<Rational, Rational> BestResponseValues(const BimatrixGame& game,
                                                 const MixedProfile& p);

bool IsExactEquilibrium(const BimatrixGame& game, const MixedProfile& p);

// l(x,y) <= eps * |A+B|. For a zero-sum game the right side is 0, so the
// test coincides with exactness for every eps. Throws std::invalid_argument
// for eps < 0.
bool IsEpsApproximate(const BimatrixGame& game, const MixedProfile& p,
                      const Rational& eps);

// Deviation form of the same test: x^T A y' + x'^T B y - x'^T C y' over all
// pure deviations (x, y) against the profile (x', y'). Agrees with
// IsEpsApproximate on every input.
bool CheckDeviationBound(const BimatrixGame& game, const MixedProfile& p,
                         const Rational& eps);

// s - z^T Q z with s at its least feasible value max_ij (A^(i) | B_(j)^T) z
// and Q the symmetric (m+n)x(m+n) block matrix with off-diagonal blocks
// C/2 and C^T/2. Identical to Loss.
Rational QpObjective(const BimatrixGame& game, const MixedProfile& p);

// Pure best responses can never outnumber the support of the opposing
// strategy. Checked at the vertices of both best-response polyhedra.
bool IsNondegenerate(const BimatrixGame& game);

enum class ReportKind { kExact, kEpsApproximate, kRelativeApproximate };

const char* ToString(ReportKind kind);

struct EquilibriumReport {
  MixedProfile profile;
  Rational loss;
  Rational payoff1;
  Rational payoff2;
  ReportKind kind = ReportKind::kExact;
  // eps for kEpsApproximate, rho for kRelativeApproximate, 0 otherwise.
  Rational parameter;
  std::vector<std::size_t> support1;
  std::vector<std::size_t> support2;
  // Certificate: least feasible s = max_i A^(i) y + max_j x^T B_(j).
  Rational s;
};

// Recomputes loss, payoffs, supports and s from scratch. Throws
// std::logic_error if kind is kExact and the loss is nonzero.
EquilibriumReport MakeReport(const BimatrixGame& game, MixedProfile profile,
                             ReportKind kind = ReportKind::kExact,
                             Rational parameter = 0);

}  // namespace lowrank

#endif  // LOWRANK_GAME_H_
