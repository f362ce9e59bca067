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

#include "lowrank/enumeration.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "lowrank/errors.h"
#include "lowrank/lp.h"

namespace lowrank {
namespace {

struct LexLess {
  bool operator()(const RationalVector& l, const RationalVector& r) const {
    return std::lexicographical_compare(l.begin(), l.end(), r.begin(), r.end());
  }
};

void CheckCap(const BimatrixGame& game, std::size_t cap) {
  if (game.rows() + game.cols() > cap) {
    throw GuardExceeded("enumeration cap exceeded: m + n = " +
                        std::to_string(game.rows() + game.cols()) + " > " +
                        std::to_string(cap));
  }
}

// Visits every k-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void ForEachSubset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t Find(std::size_t i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }
  void Join(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Rational BestResponsePolyhedron::Slack(std::size_t label,
                                       const RationalVector& point) const {
  return -Dot(rows.at(label), point);
}

std::size_t PolyhedronVertex::BindingBestResponses(
    const BestResponsePolyhedron& poly) const {
  return static_cast<std::size_t>(
      std::count_if(binding.begin(), binding.end(), [&](std::size_t label) {
        return poly.IsBestResponseLabel(label);
      }));
}

std::pair<BestResponsePolyhedron, BestResponsePolyhedron> BuildPolyhedra(
    const BimatrixGame& game) {
  const std::size_t m = game.rows(), n = game.cols();
  BestResponsePolyhedron p{PolyhedronSide::kP, m, n, {}};
  BestResponsePolyhedron q{PolyhedronSide::kQ, m, n, {}};
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector row(m + 1);
    row[i] = -1;
    p.rows.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < n; ++j) {
    RationalVector row(m + 1);
    for (std::size_t i = 0; i < m; ++i) row[i] = game.b()(i, j);
    row[m] = -1;
    p.rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector row(n + 1);
    for (std::size_t j = 0; j < n; ++j) row[j] = game.a()(i, j);
    row[n] = -1;
    q.rows.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < n; ++j) {
    RationalVector row(n + 1);
    row[j] = -1;
    q.rows.push_back(std::move(row));
  }
  return {std::move(p), std::move(q)};
}

std::vector<PolyhedronVertex> EnumerateVertices(
    const BestResponsePolyhedron& poly) {
  const std::size_t k = poly.strategy_dim();
  const std::size_t labels = poly.num_labels();
  std::map<RationalVector, PolyhedronVertex, LexLess> found;
  ForEachSubset(labels, k, [&](const std::vector<std::size_t>& tight) {
    // k tight label rows plus the normalization row in k + 1 unknowns.
    RationalMatrix system(k + 1, k + 1);
    RationalVector rhs(k + 1);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c <= k; ++c) system(r, c) = poly.rows[tight[r]][c];
    }
    for (std::size_t c = 0; c < k; ++c) system(k, c) = 1;
    rhs[k] = 1;
    auto point = SolveUnique(std::move(system), std::move(rhs));
    if (!point || found.contains(*point)) return;
    PolyhedronVertex vertex;
    for (std::size_t label = 0; label < labels; ++label) {
      const int s = sgn(poly.Slack(label, *point));
      if (s < 0) return;
      if (s == 0) vertex.binding.push_back(label);
    }
    vertex.point = *point;
    found.emplace(std::move(*point), std::move(vertex));
  });
  std::vector<PolyhedronVertex> out;
  out.reserve(found.size());
  for (auto& [point, vertex] : found) out.push_back(std::move(vertex));
  return out;
}

EquilibriumSet EnumerateEquilibria(const BimatrixGame& game, std::size_t cap) {
  CheckCap(game, cap);
  const auto [p, q] = BuildPolyhedra(game);
  const auto p_vertices = EnumerateVertices(p);
  const auto q_vertices = EnumerateVertices(q);
  const std::size_t labels = game.rows() + game.cols();

  std::vector<MixedProfile> profiles;
  std::vector<bool> covered(labels);
  for (const auto& pv : p_vertices) {
    for (const auto& qv : q_vertices) {
      std::fill(covered.begin(), covered.end(), false);
      for (auto l : pv.binding) covered[l] = true;
      for (auto l : qv.binding) covered[l] = true;
      if (std::all_of(covered.begin(), covered.end(), [](bool b) { return b; })) {
        profiles.push_back({pv.strategy(), qv.strategy()});
      }
    }
  }
  std::sort(profiles.begin(), profiles.end());

  EquilibriumSet set;
  for (auto& profile : profiles) {
    // MakeReport recomputes the loss and rejects anything nonzero.
    set.extreme_equilibria.push_back(MakeReport(game, std::move(profile)));
  }
  set.components = ConnectedComponents(set.extreme_equilibria, game);
  set.nondegenerate = IsNondegenerate(game);
  return set;
}

std::vector<MixedProfile> SupportEnumerationOracle(const BimatrixGame& game,
                                                   std::size_t cap) {
  CheckCap(game, cap);
  const std::size_t m = game.rows(), n = game.cols();
  std::vector<MixedProfile> out;
  for (std::size_t rows_mask = 1; rows_mask < (std::size_t{1} << m);
       ++rows_mask) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < m; ++i) {
      if (rows_mask >> i & 1) rows.push_back(i);
    }
    for (std::size_t cols_mask = 1; cols_mask < (std::size_t{1} << n);
         ++cols_mask) {
      std::vector<std::size_t> cols;
      for (std::size_t j = 0; j < n; ++j) {
        if (cols_mask >> j & 1) cols.push_back(j);
      }
      // y on cols: A^(i) y = u for i in rows, sum y = 1.
      RationalMatrix ys(rows.size() + 1, cols.size() + 1);
      RationalVector yb(rows.size() + 1);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
          ys(r, c) = game.a()(rows[r], cols[c]);
        }
        ys(r, cols.size()) = -1;
      }
      for (std::size_t c = 0; c < cols.size(); ++c) ys(rows.size(), c) = 1;
      yb[rows.size()] = 1;
      auto ysol = SolveUnique(std::move(ys), std::move(yb));
      if (!ysol) continue;
      // x on rows: x^T B_(j) = v for j in cols, sum x = 1.
      RationalMatrix xs(cols.size() + 1, rows.size() + 1);
      RationalVector xb(cols.size() + 1);
      for (std::size_t c = 0; c < cols.size(); ++c) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
          xs(c, r) = game.b()(rows[r], cols[c]);
        }
        xs(c, rows.size()) = -1;
      }
      for (std::size_t r = 0; r < rows.size(); ++r) xs(cols.size(), r) = 1;
      xb[cols.size()] = 1;
      auto xsol = SolveUnique(std::move(xs), std::move(xb));
      if (!xsol) continue;

      MixedProfile profile{RationalVector(m), RationalVector(n)};
      bool nonnegative = true;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        nonnegative &= sgn((*xsol)[r]) >= 0;
        profile.x[rows[r]] = (*xsol)[r];
      }
      for (std::size_t c = 0; c < cols.size(); ++c) {
        nonnegative &= sgn((*ysol)[c]) >= 0;
        profile.y[cols[c]] = (*ysol)[c];
      }
      if (!nonnegative) continue;
      // Best-response condition against every pure strategy.
      if (IsExactEquilibrium(game, profile)) out.push_back(std::move(profile));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EquilibriumReport SolveZeroSum(const BimatrixGame& game) {
  if (!game.sum().IsZero()) {
    throw std::invalid_argument("SolveZeroSum requires A + B = 0");
  }
  const std::size_t m = game.rows(), n = game.cols();
  const RationalMatrix& a = game.a();

  // Row player: maximize v s.t. x^T A_(j) >= v, x in S1.
  LinearProgram row_lp;
  for (std::size_t i = 0; i < m; ++i) row_lp.AddVariable(0);
  const std::size_t v = row_lp.AddVariable(-1, std::nullopt);
  for (std::size_t j = 0; j < n; ++j) {
    RationalVector coef(m + 1);
    for (std::size_t i = 0; i < m; ++i) coef[i] = a(i, j);
    coef[v] = -1;
    row_lp.AddConstraint(std::move(coef), Sense::kGreaterEqual, 0);
  }
  RationalVector ones_x(m, Rational(1));
  row_lp.AddConstraint(ones_x, Sense::kEqual, 1);

  // Column player: minimize w s.t. A^(i) y <= w, y in S2.
  LinearProgram col_lp;
  for (std::size_t j = 0; j < n; ++j) col_lp.AddVariable(0);
  const std::size_t w = col_lp.AddVariable(1, std::nullopt);
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector coef(n + 1);
    for (std::size_t j = 0; j < n; ++j) coef[j] = a(i, j);
    coef[w] = -1;
    col_lp.AddConstraint(std::move(coef), Sense::kLessEqual, 0);
  }
  RationalVector ones_y(n, Rational(1));
  col_lp.AddConstraint(ones_y, Sense::kEqual, 1);

  const LpSolution row_sol = SolveLp(row_lp);
  const LpSolution col_sol = SolveLp(col_lp);
  if (row_sol.status != LpStatus::kOptimal ||
      col_sol.status != LpStatus::kOptimal) {
    throw std::logic_error("zero-sum LP did not reach an optimum");
  }
  MixedProfile profile{
      RationalVector(row_sol.point.begin(), row_sol.point.begin() + m),
      RationalVector(col_sol.point.begin(), col_sol.point.begin() + n)};
  return MakeReport(game, std::move(profile));
}

std::vector<std::vector<std::size_t>> ConnectedComponents(
    const std::vector<EquilibriumReport>& equilibria, const BimatrixGame& game) {
  const std::size_t count = equilibria.size();
  UnionFind uf(count);
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a + 1; b < count; ++b) {
      const auto& pa = equilibria[a].profile;
      const auto& pb = equilibria[b].profile;
      if (IsExactEquilibrium(game, {pa.x, pb.y}) &&
          IsExactEquilibrium(game, {pb.x, pa.y})) {
        uf.Join(a, b);
      }
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < count; ++i) groups[uf.Find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

std::size_t CountConnectedComponents(const EquilibriumSet& set,
                                     const BimatrixGame& game) {
  return ConnectedComponents(set.extreme_equilibria, game).size();
}

bool IsNondegenerate(const BimatrixGame& game) {
  const auto [p, q] = BuildPolyhedra(game);
  for (const auto* poly : {&p, &q}) {
    for (const auto& vertex : EnumerateVertices(*poly)) {
      if (vertex.BindingBestResponses(*poly) >
          Support(vertex.strategy()).size()) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace lowrank
