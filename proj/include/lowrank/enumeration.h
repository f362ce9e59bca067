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

#ifndef LOWRANK_ENUMERATION_H_
#define LOWRANK_ENUMERATION_H_

#include <cstddef>
#include <utility>
#include <vector>

#include "lowrank/game.h"
#include "lowrank/rational.h"

namespace lowrank {

inline constexpr std::size_t kDefaultEnumerationCap = 24;

enum class PolyhedronSide { kP, kQ };

// Best-response polyhedron over (strategy, payoff) in R^k x R.
//
//   P: (x, v)  labels 0..m-1:     x_i >= 0
//              labels m..m+n-1:   x^T B_(j) <= v
//   Q: (y, u)  labels 0..m-1:     A^(i) y <= u
//              labels m..m+n-1:   y_j >= 0
//
// plus the normalization 1^T (strategy) = 1. Every label row is stored as
// row . point <= 0.
struct BestResponsePolyhedron {
  PolyhedronSide side = PolyhedronSide::kQ;
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<RationalVector> rows;  // m + n rows of length dim() + 1

  std::size_t strategy_dim() const { return side == PolyhedronSide::kP ? m : n; }
  std::size_t num_labels() const { return m + n; }
  bool IsBestResponseLabel(std::size_t label) const {
    return side == PolyhedronSide::kP ? label >= m : label < m;
  }
  // Slack of label row `label` at `point` (nonnegative iff satisfied).
  Rational Slack(std::size_t label, const RationalVector& point) const;
};

struct PolyhedronVertex {
  RationalVector point;  // strategy coordinates followed by the payoff scalar
  std::vector<std::size_t> binding;  // sorted labels with zero slack

  RationalVector strategy() const {
    return RationalVector(point.begin(), point.end() - 1);
  }
  const Rational& payoff() const { return point.back(); }
  std::size_t BindingBestResponses(const BestResponsePolyhedron& poly) const;
};

std::pair<BestResponsePolyhedron, BestResponsePolyhedron> BuildPolyhedra(
    const BimatrixGame& game);

// All vertices, sorted lexicographically by point. Exhaustive search over
// strategy_dim()-subsets of labels.
std::vector<PolyhedronVertex> EnumerateVertices(
    const BestResponsePolyhedron& poly);

struct EquilibriumSet {
  std::vector<EquilibriumReport> extreme_equilibria;  // lexicographic order
  std::vector<std::vector<std::size_t>> components;  // indices into the list
  std::size_t component_count() const { return components.size(); }
  bool nondegenerate = true;
};

// Extreme equilibria from complementary vertex pairs of P and Q. Components
// are filled in. Throws GuardExceeded if m + n > cap.
EquilibriumSet EnumerateEquilibria(const BimatrixGame& game,
                                   std::size_t cap = kDefaultEnumerationCap);

// Independent brute force: for every support pair solve the indifference
// equations and keep the solutions with zero loss. Lexicographic order.
std::vector<MixedProfile> SupportEnumerationOracle(
    const BimatrixGame& game, std::size_t cap = kDefaultEnumerationCap);

// One equilibrium of a zero-sum game from the maximin/minimax LP pair.
// Throws std::invalid_argument unless A + B = 0.
EquilibriumReport SolveZeroSum(const BimatrixGame& game);

// Groups the extreme equilibria: two are joined when their strategies can be
// exchanged, i.e. (x1, y2) and (x2, y1) are equilibria as well. Returns the
// groups as index lists in order of their smallest member.
std::vector<std::vector<std::size_t>> ConnectedComponents(
    const std::vector<EquilibriumReport>& equilibria, const BimatrixGame& game);

std::size_t CountConnectedComponents(const EquilibriumSet& set,
                                     const BimatrixGame& game);

}  // namespace lowrank

#endif  // LOWRANK_ENUMERATION_H_
