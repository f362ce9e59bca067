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

#include "lowrank/approx.h"

#include <Eigen/Dense>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "lowrank/errors.h"
#include "lowrank/lp.h"
#include "lowrank/parallel.h"

namespace lowrank {

RationalMatrix SvdTruncate(const RationalMatrix& c, std::size_t k) {
  if (k >= MatrixRank(c)) return c;
  const auto rows = static_cast<Eigen::Index>(c.rows());
  const auto cols = static_cast<Eigen::Index>(c.cols());
  Eigen::MatrixXd dense(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      dense(i, j) = c(static_cast<std::size_t>(i), static_cast<std::size_t>(j))
                        .get_d();
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(dense,
                                        Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(1e-12);
  const auto& sigma = svd.singularValues();
  RationalMatrix out(c.rows(), c.cols());
  for (std::size_t t = 0; t < k && static_cast<Eigen::Index>(t) < sigma.size();
       ++t) {
    const auto ti = static_cast<Eigen::Index>(t);
    if (sigma(ti) <= 1e-12 * sigma(0)) break;
    RationalVector left(c.rows()), right(c.cols());
    for (Eigen::Index i = 0; i < rows; ++i) {
      left[static_cast<std::size_t>(i)] = RationalApproximation(
          sigma(ti) * svd.matrixU()(i, ti), kSvdDenominatorCap);
    }
    for (Eigen::Index j = 0; j < cols; ++j) {
      right[static_cast<std::size_t>(j)] =
          RationalApproximation(svd.matrixV()(j, ti), kSvdDenominatorCap);
    }
    out += OuterProduct(left, right);
  }
  return out;
}

GamePerturbation PerturbGame(const BimatrixGame& game,
                             const RationalMatrix& c_prime) {
  if (c_prime.rows() != game.rows() || c_prime.cols() != game.cols()) {
    throw std::invalid_argument("C' does not match the game's shape");
  }
  if (sgn(game.sum_norm()) == 0) {
    throw std::invalid_argument("perturbation of a zero-sum game: |A+B| = 0");
  }
  const RationalMatrix delta = c_prime - game.sum();
  const Rational eps = MaxAbsEntry(delta) / game.sum_norm();
  if (eps >= 1) {
    throw std::invalid_argument("|C - C'| >= |A + B|: no eps < 1 exists");
  }
  const RationalMatrix half = delta * Rational(1, 2);
  BimatrixGame perturbed(game.a() + half, game.b() + half);
  return GamePerturbation{game, c_prime, std::move(perturbed), eps};
}

bool CheckPerturbationTheorem(const GamePerturbation& pert,
                              const MixedProfile& eq) {
  if (!IsExactEquilibrium(pert.original, eq)) {
    throw std::invalid_argument("profile is not an equilibrium of the original");
  }
  return IsEpsApproximate(pert.perturbed, eq, 3 * pert.eps);
}

namespace {

struct Interval {
  Rational lo;
  Rational hi;
};

// Variables: x (m), y (n), s1, s2 with s1 >= A^(i) y and s2 >= x^T B_(j).
// Splitting s this way gives m + n rows instead of the m * n rows
// s >= A^(i) y + x^T B_(j); both describe the same feasible (x, y, s).
LinearProgram BaseLp(const BimatrixGame& game, const RationalVector& y_cost,
                     const std::optional<Rational>& s_cap) {
  const std::size_t m = game.rows(), n = game.cols();
  LinearProgram lp;
  for (std::size_t i = 0; i < m; ++i) lp.AddVariable(0);
  for (std::size_t j = 0; j < n; ++j) lp.AddVariable(y_cost[j]);
  const std::size_t s1 = lp.AddVariable(1, std::nullopt);
  const std::size_t s2 = lp.AddVariable(1, std::nullopt);
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector row(s1 + 1);
    for (std::size_t j = 0; j < n; ++j) row[m + j] = game.a()(i, j);
    row[s1] = -1;
    lp.AddConstraint(std::move(row), Sense::kLessEqual, 0);
  }
  for (std::size_t j = 0; j < n; ++j) {
    RationalVector row(s2 + 1);
    for (std::size_t i = 0; i < m; ++i) row[i] = game.b()(i, j);
    row[s2] = -1;
    lp.AddConstraint(std::move(row), Sense::kLessEqual, 0);
  }
  RationalVector sum_x(m, Rational(1));
  lp.AddConstraint(std::move(sum_x), Sense::kEqual, 1);
  RationalVector sum_y(m + n);
  for (std::size_t j = 0; j < n; ++j) sum_y[m + j] = 1;
  lp.AddConstraint(std::move(sum_y), Sense::kEqual, 1);
  if (s_cap) {
    RationalVector row(s2 + 1);
    row[s1] = 1;
    row[s2] = 1;
    lp.AddConstraint(std::move(row), Sense::kLessEqual, *s_cap);
  }
  return lp;
}

// lo <= coefficients . x <= hi on the x block (offset 0) or y block.
void AddRange(LinearProgram& lp, std::size_t offset, const RationalVector& coef,
              const Interval& range) {
  RationalVector row(offset + coef.size());
  std::copy(coef.begin(), coef.end(), row.begin() + static_cast<long>(offset));
  if (range.lo == range.hi) {
    lp.AddConstraint(std::move(row), Sense::kEqual, range.lo);
    return;
  }
  lp.AddConstraint(row, Sense::kGreaterEqual, range.lo);
  lp.AddConstraint(std::move(row), Sense::kLessEqual, range.hi);
}

struct Candidate {
  std::optional<EquilibriumReport> report;
  std::size_t level = 0;
  std::size_t cell = 0;
};

MixedProfile ExtractProfile(const BimatrixGame& game, const RationalVector& point) {
  const auto m = static_cast<long>(game.rows());
  const auto n = static_cast<long>(game.cols());
  return {RationalVector(point.begin(), point.begin() + m),
          RationalVector(point.begin() + m, point.begin() + m + n)};
}

Rational MinOf(const RationalVector& v) { return *std::min_element(v.begin(), v.end()); }
Rational MaxOf(const RationalVector& v) { return *std::max_element(v.begin(), v.end()); }

void ValidateEps(const Rational& eps) {
  if (sgn(eps) <= 0) throw std::invalid_argument("eps must be positive");
}

}  // namespace

ApproxResult ApproxAbsolute(const BimatrixGame& game, const Rational& eps,
                            const ApproxOptions& options) {
  ValidateEps(eps);
  if (game.rank() > options.max_rank) {
    throw GuardExceeded("rank(A+B) = " + std::to_string(game.rank()) +
                        " exceeds the approximation guard of " +
                        std::to_string(options.max_rank));
  }
  const Rational target = eps * game.sum_norm();
  const std::size_t m = game.rows(), n = game.cols();
  ApproxResult result;

  if (game.rank() == 0) {
    // Zero-sum: the quadratic term vanishes and one LP is exact.
    const LpSolution sol = SolveLp(BaseLp(game, RationalVector(n), std::nullopt));
    if (sol.status != LpStatus::kOptimal) {
      throw std::logic_error("zero-sum LP did not reach an optimum");
    }
    result.report = MakeReport(game, ExtractProfile(game, sol.point),
                               ReportKind::kEpsApproximate, eps);
    result.bound = target;
    result.levels = 1;
    result.lps_solved = 1;
    return result;
  }

  const RankFactorization f = RankFactorize(game.sum());
  const std::size_t k = f.rank();
  std::vector<Rational> z_lo(k), z_range(k), step(k);
  for (std::size_t i = 0; i < k; ++i) {
    z_lo[i] = MinOf(f.u[i]);
    z_range[i] = MaxOf(f.u[i]) - z_lo[i];
    Rational v_max = 0;
    for (const auto& e : f.v[i]) v_max = std::max(v_max, Rational(abs(e)));
    step[i] = target / (2 * Rational(k) * v_max);
  }
  // Level by which every cell is at most step wide; the cell holding an
  // equilibrium then has loss <= target / 2.
  std::size_t guaranteed = 0;
  for (std::size_t i = 0; i < k; ++i) {
    Rational width = z_range[i];
    std::size_t level = 0;
    while (width > step[i]) {
      width /= 2;
      ++level;
    }
    guaranteed = std::max(guaranteed, level);
  }

  Candidate best;
  for (std::size_t level = 0; level <= guaranteed + 4; ++level) {
    const std::size_t pieces = std::size_t{1} << level;
    std::size_t cells = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (sgn(z_range[i]) > 0) cells *= pieces;
    }
    std::vector<std::optional<EquilibriumReport>> found(cells);
    ParallelFor(
        cells,
        [&](std::size_t cell) {
          RationalVector y_cost(n);
          std::vector<Interval> ranges(k);
          std::size_t rest = cell;
          for (std::size_t i = k; i-- > 0;) {
            Rational lo = z_lo[i], hi = z_lo[i];
            if (sgn(z_range[i]) > 0) {
              const Rational width = z_range[i] / Rational(Integer(pieces));
              const std::size_t q = rest % pieces;
              rest /= pieces;
              lo = z_lo[i] + width * Rational(Integer(q));
              hi = lo + width;
            }
            const Rational center = (lo + hi) / 2;
            for (std::size_t j = 0; j < n; ++j) y_cost[j] -= center * f.v[i][j];
            ranges[i] = {lo, hi};
          }
          LinearProgram lp = BaseLp(game, y_cost, game.sum_norm());
          for (std::size_t i = 0; i < k; ++i) AddRange(lp, 0, f.u[i], ranges[i]);
          const LpSolution sol = SolveLp(lp);
          if (sol.status != LpStatus::kOptimal) return;
          found[cell] = MakeReport(game, ExtractProfile(game, sol.point),
                                   ReportKind::kEpsApproximate, eps);
        },
        options.threads);
    result.lps_solved += cells;
    result.levels = level + 1;
    for (std::size_t cell = 0; cell < cells; ++cell) {
      if (!found[cell]) continue;
      if (!best.report || found[cell]->loss < best.report->loss) {
        best = {std::move(found[cell]), level, cell};
      }
    }
    if (best.report && best.report->loss <= target) {
      result.report = std::move(*best.report);
      result.bound = target;
      result.cell = best.cell;
      return result;
    }
  }
  throw std::logic_error("absolute approximation failed to verify; m = " +
                         std::to_string(m));
}

Rational RelativeRatio(const Rational& eps) {
  const Rational g = 1 + eps;
  return 1 - 1 / (g * g);
}

std::vector<Rational> GeometricGrid(const Rational& lo, const Rational& hi,
                                    const Rational& eps) {
  ValidateEps(eps);
  if (sgn(lo) < 0 || lo > hi) {
    throw std::invalid_argument("geometric grid needs 0 <= lo <= hi");
  }
  if (lo == hi) return {lo, hi};
  std::vector<Rational> ends{lo};
  Rational next = sgn(lo) == 0 ? Rational(hi * eps / (1 + eps)) : lo;
  if (sgn(lo) == 0) ends.push_back(next);
  while (ends.back() < hi) {
    next = ends.back() * (1 + eps);
    ends.push_back(next < hi ? next : hi);
  }
  return ends;
}

ApproxResult ApproxRelative(const BimatrixGame& game,
                            const RankFactorization& decomposition,
                            const Rational& eps, const ApproxOptions& options) {
  ValidateEps(eps);
  if (!IsNonnegative(decomposition)) {
    throw std::invalid_argument("decomposition has negative entries");
  }
  if (decomposition.rows != game.rows() || decomposition.cols != game.cols() ||
      decomposition.Reconstruct() != game.sum()) {
    throw std::invalid_argument("decomposition does not reconstruct A + B");
  }
  const std::size_t k = decomposition.rank();
  if (k > options.max_rank) {
    throw GuardExceeded("decomposition has " + std::to_string(k) +
                        " terms, above the guard of " +
                        std::to_string(options.max_rank));
  }
  const std::size_t m = game.rows();
  const Rational rho = RelativeRatio(eps);

  // Axes 0..k-1 grid z_i, axes k..2k-1 grid w_i.
  std::vector<std::vector<Rational>> grids;
  for (const auto* side : {&decomposition.u, &decomposition.v}) {
    for (const auto& vec : *side) {
      grids.push_back(GeometricGrid(MinOf(vec), MaxOf(vec), eps));
    }
  }
  std::size_t cells = 1;
  for (const auto& g : grids) cells *= g.size() - 1;

  std::vector<std::optional<EquilibriumReport>> found(cells);
  ParallelFor(
      cells,
      [&](std::size_t cell) {
        LinearProgram lp =
            BaseLp(game, RationalVector(game.cols()), std::nullopt);
        std::size_t rest = cell;
        std::vector<Interval> ranges(grids.size());
        for (std::size_t axis = grids.size(); axis-- > 0;) {
          const std::size_t pieces = grids[axis].size() - 1;
          const std::size_t q = rest % pieces;
          rest /= pieces;
          ranges[axis] = {grids[axis][q], grids[axis][q + 1]};
        }
        for (std::size_t i = 0; i < k; ++i) {
          AddRange(lp, 0, decomposition.u[i], ranges[i]);
          AddRange(lp, m, decomposition.v[i], ranges[k + i]);
        }
        const LpSolution sol = SolveLp(lp);
        if (sol.status != LpStatus::kOptimal) return;
        EquilibriumReport report =
            MakeReport(game, ExtractProfile(game, sol.point),
                       ReportKind::kRelativeApproximate, rho);
        if (report.loss <= rho * report.s) found[cell] = std::move(report);
      },
      options.threads);

  ApproxResult result;
  result.levels = 1;
  result.lps_solved = cells;
  std::optional<std::size_t> best;
  for (std::size_t cell = 0; cell < cells; ++cell) {
    if (found[cell] && (!best || found[cell]->loss < found[*best]->loss)) {
      best = cell;
    }
  }
  if (!best) {
    throw std::logic_error("no grid cell met the relative guarantee");
  }
  result.report = std::move(*found[*best]);
  result.bound = rho * result.report.s;
  result.cell = *best;
  return result;
}

}  // namespace lowrank
