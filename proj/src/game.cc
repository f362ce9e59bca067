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

#include "lowrank/game.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace lowrank {

BimatrixGame::BimatrixGame(RationalMatrix a, RationalMatrix b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.empty() || b_.empty()) {
    throw std::invalid_argument("payoff matrices must be nonempty");
  }
  if (a_.rows() != b_.rows() || a_.cols() != b_.cols()) {
    throw std::invalid_argument("payoff matrices A and B differ in shape");
  }
  c_ = a_ + b_;
  rank_ = MatrixRank(c_);
  norm_ = MaxAbsEntry(c_);
}

std::strong_ordering MixedProfile::Compare(const RationalVector& l,
                                           const RationalVector& r) {
  const std::size_t n = std::min(l.size(), r.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (const int c = cmp(l[i], r[i]); c != 0) {
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return l.size() <=> r.size();
}

RationalVector UnitVector(std::size_t n, std::size_t i) {
  RationalVector e(n);
  e.at(i) = 1;
  return e;
}

RationalVector Uniform(std::size_t n) {
  return RationalVector(n, Rational(1, static_cast<unsigned long>(n)));
}

bool IsProbabilityVector(const RationalVector& v) {
  if (v.empty()) return false;
  for (const auto& e : v) {
    if (sgn(e) < 0) return false;
  }
  return Sum(v) == 1;
}

void ValidateProfile(const BimatrixGame& game, const MixedProfile& p) {
  if (p.x.size() != game.rows() || p.y.size() != game.cols()) {
    throw std::invalid_argument("profile dimensions do not match the game");
  }
  if (!IsProbabilityVector(p.x) || !IsProbabilityVector(p.y)) {
    throw std::invalid_argument("profile is not a pair of mixed strategies");
  }
}

std::vector<std::size_t> Support(const RationalVector& v) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) s.push_back(i);
  }
  return s;
}

namespace {

Rational MaxOf(const RationalVector& v) {
  return *std::max_element(v.begin(), v.end());
}

}  // namespace

std::pair<Rational, Rational> BestResponseValues(const BimatrixGame& game,
                                                 const MixedProfile& p) {
  ValidateProfile(game, p);
  return {MaxOf(game.a().Apply(p.y)), MaxOf(game.b().ApplyLeft(p.x))};
}

Rational Loss(const BimatrixGame& game, const MixedProfile& p) {
  const auto [row_best, col_best] = BestResponseValues(game, p);
  return row_best + col_best - game.sum().Bilinear(p.x, p.y);
}

bool IsExactEquilibrium(const BimatrixGame& game, const MixedProfile& p) {
  return sgn(Loss(game, p)) == 0;
}

bool IsEpsApproximate(const BimatrixGame& game, const MixedProfile& p,
                      const Rational& eps) {
  if (sgn(eps) < 0) throw std::invalid_argument("eps must be nonnegative");
  return Loss(game, p) <= eps * game.sum_norm();
}

bool CheckDeviationBound(const BimatrixGame& game, const MixedProfile& p,
                         const Rational& eps) {
  if (sgn(eps) < 0) throw std::invalid_argument("eps must be nonnegative");
  ValidateProfile(game, p);
  const Rational bound = eps * game.sum_norm();
  const Rational base = game.sum().Bilinear(p.x, p.y);
  // The left side is bilinear in the deviation pair, so pure pairs suffice.
  for (std::size_t i = 0; i < game.rows(); ++i) {
    Rational row_payoff = 0;
    for (std::size_t j = 0; j < game.cols(); ++j) {
      row_payoff += game.a()(i, j) * p.y[j];
    }
    for (std::size_t j = 0; j < game.cols(); ++j) {
      Rational col_payoff = 0;
      for (std::size_t r = 0; r < game.rows(); ++r) {
        col_payoff += p.x[r] * game.b()(r, j);
      }
      if (row_payoff + col_payoff - base > bound) return false;
    }
  }
  return true;
}

Rational QpObjective(const BimatrixGame& game, const MixedProfile& p) {
  ValidateProfile(game, p);
  const std::size_t m = game.rows(), n = game.cols();
  RationalVector z(p.x);
  z.insert(z.end(), p.y.begin(), p.y.end());

  // s = max over (i, j) of the row (A^(i) | B_(j)^T) applied to z.
  Rational s;
  bool first = true;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational value = 0;
      for (std::size_t c = 0; c < n; ++c) value += game.a()(i, c) * z[m + c];
      for (std::size_t r = 0; r < m; ++r) value += game.b()(r, j) * z[r];
      if (first || value > s) s = value;
      first = false;
    }
  }

  RationalMatrix q(m + n, m + n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational half = game.sum()(i, j) / 2;
      q(i, m + j) = half;
      q(m + j, i) = half;
    }
  }
  return s - q.Bilinear(z, z);
}

const char* ToString(ReportKind kind) {
  switch (kind) {
    case ReportKind::kExact:
      return "exact";
    case ReportKind::kEpsApproximate:
      return "eps_approximate";
    case ReportKind::kRelativeApproximate:
      return "relative_approximate";
  }
  return "unknown";
}

EquilibriumReport MakeReport(const BimatrixGame& game, MixedProfile profile,
                             ReportKind kind, Rational parameter) {
  EquilibriumReport report;
  const auto [row_best, col_best] = BestResponseValues(game, profile);
  report.s = row_best + col_best;
  report.payoff1 = game.a().Bilinear(profile.x, profile.y);
  report.payoff2 = game.b().Bilinear(profile.x, profile.y);
  report.loss = report.s - report.payoff1 - report.payoff2;
  if (kind == ReportKind::kExact && sgn(report.loss) != 0) {
    throw std::logic_error("exact report for a profile with positive loss");
  }
  report.support1 = Support(profile.x);
  report.support2 = Support(profile.y);
  report.kind = kind;
  report.parameter = kind == ReportKind::kExact ? Rational(0) : parameter;
  report.profile = std::move(profile);
  return report;
}

}  // namespace lowrank
