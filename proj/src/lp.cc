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

#include "lowrank/lp.h"

#include <stdexcept>
#include <utility>

namespace lowrank {

std::size_t LinearProgram::AddVariable(Rational cost,
                                       std::optional<Rational> lower,
                                       std::optional<Rational> upper) {
  if (lower && upper && *lower > *upper) {
    throw std::invalid_argument("variable lower bound exceeds upper bound");
  }
  objective_.push_back(std::move(cost));
  lower_.push_back(std::move(lower));
  upper_.push_back(std::move(upper));
  return objective_.size() - 1;
}

void LinearProgram::AddConstraint(RationalVector coefficients, Sense sense,
                                  Rational rhs) {
  rows_.push_back(std::move(coefficients));
  senses_.push_back(sense);
  rhs_.push_back(std::move(rhs));
}

bool LinearProgram::IsFeasible(const RationalVector& point) const {
  if (point.size() != num_variables()) return false;
  for (std::size_t j = 0; j < point.size(); ++j) {
    if (lower_[j] && point[j] < *lower_[j]) return false;
    if (upper_[j] && point[j] > *upper_[j]) return false;
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < rows_[r].size(); ++j) {
      lhs += rows_[r][j] * point[j];
    }
    switch (senses_[r]) {
      case Sense::kLessEqual:
        if (lhs > rhs_[r]) return false;
        break;
      case Sense::kEqual:
        if (lhs != rhs_[r]) return false;
        break;
      case Sense::kGreaterEqual:
        if (lhs < rhs_[r]) return false;
        break;
    }
  }
  return true;
}

const char* ToString(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

namespace {

// x_j = offset + sum coef * column, all columns >= 0.
struct VariableMap {
  Rational offset;
  std::vector<std::pair<std::size_t, int>> terms;
};

// Dense tableau in canonical form for the current basis. Row `rows` holds
// reduced costs; the last column holds right-hand sides (negated objective in
// the cost row).
class Tableau {
 public:
  Tableau(std::vector<RationalVector> rows, std::vector<std::size_t> basis,
          std::size_t width)
      : t_(std::move(rows)), basis_(std::move(basis)), width_(width) {
    t_.emplace_back(width_);
  }

  std::size_t num_rows() const { return t_.size() - 1; }
  std::size_t rhs_col() const { return width_ - 1; }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const Rational& at(std::size_t r, std::size_t c) const { return t_[r][c]; }
  std::size_t pivots() const { return pivots_; }

  void SetCosts(const RationalVector& costs) {
    auto& z = t_.back();
    for (std::size_t c = 0; c < width_; ++c) z[c] = c < costs.size() ? costs[c] : 0;
    z[rhs_col()] = 0;
    for (std::size_t r = 0; r < num_rows(); ++r) {
      const Rational& cb = costs[basis_[r]];
      if (sgn(cb) == 0) continue;
      for (std::size_t c = 0; c < width_; ++c) {
        if (sgn(t_[r][c]) != 0) z[c] -= cb * t_[r][c];
      }
    }
  }

  Rational Objective() const { return -t_.back()[rhs_col()]; }

  // Runs Bland's rule over columns [0, allowed). Returns false if unbounded.
  bool Optimize(std::size_t allowed) {
    while (true) {
      std::size_t enter = allowed;
      for (std::size_t c = 0; c < allowed; ++c) {
        if (sgn(t_.back()[c]) < 0) {
          enter = c;
          break;
        }
      }
      if (enter == allowed) return true;
      std::size_t leave = num_rows();
      Rational best_ratio;
      for (std::size_t r = 0; r < num_rows(); ++r) {
        if (sgn(t_[r][enter]) <= 0) continue;
        Rational ratio = t_[r][rhs_col()] / t_[r][enter];
        if (leave == num_rows() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == num_rows()) return false;
      Pivot(leave, enter);
    }
  }

  void Pivot(std::size_t row, std::size_t col) {
    const Rational inv = 1 / t_[row][col];
    for (auto& e : t_[row]) {
      if (sgn(e) != 0) e *= inv;
    }
    for (std::size_t r = 0; r < t_.size(); ++r) {
      if (r == row || sgn(t_[r][col]) == 0) continue;
      const Rational factor = t_[r][col];
      for (std::size_t c = 0; c < width_; ++c) {
        if (sgn(t_[row][c]) != 0) t_[r][c] -= factor * t_[row][c];
      }
    }
    basis_[row] = col;
    ++pivots_;
  }

  void DropRow(std::size_t row) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(row));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
  }

 private:
  std::vector<RationalVector> t_;
  std::vector<std::size_t> basis_;
  std::size_t width_ = 0;
  std::size_t pivots_ = 0;
};

void Validate(const LinearProgram& lp) {
  if (lp.num_variables() == 0) {
    throw std::invalid_argument("linear program has no variables");
  }
  for (const auto& row : lp.rows()) {
    if (row.size() > lp.num_variables()) {
      throw std::invalid_argument("constraint row longer than variable count");
    }
  }
}

}  // namespace

LpSolution SolveLp(const LinearProgram& lp) {
  Validate(lp);
  const std::size_t n = lp.num_variables();

  // Map every variable onto nonnegative structural columns.
  std::vector<VariableMap> vars(n);
  std::size_t structural = 0;
  struct UpperRow {
    std::size_t column;
    Rational bound;
  };
  std::vector<UpperRow> upper_rows;
  for (std::size_t j = 0; j < n; ++j) {
    const auto& lo = lp.lower()[j];
    const auto& hi = lp.upper()[j];
    if (lo) {
      vars[j].offset = *lo;
      vars[j].terms.emplace_back(structural, 1);
      if (hi) upper_rows.push_back({structural, *hi - *lo});
      ++structural;
    } else if (hi) {
      vars[j].offset = *hi;
      vars[j].terms.emplace_back(structural++, -1);
    } else {
      vars[j].terms.emplace_back(structural++, 1);
      vars[j].terms.emplace_back(structural++, -1);
    }
  }

  // Equality rows over structural columns, plus one slack per inequality.
  struct StdRow {
    RationalVector coef;
    Rational rhs;
    int slack_sign = 0;  // +1 for <=, -1 for >=, 0 for =
  };
  std::vector<StdRow> std_rows;
  for (std::size_t r = 0; r < lp.num_constraints(); ++r) {
    StdRow row{RationalVector(structural), lp.rhs()[r], 0};
    const auto& coef = lp.rows()[r];
    for (std::size_t j = 0; j < coef.size(); ++j) {
      if (sgn(coef[j]) == 0) continue;
      row.rhs -= coef[j] * vars[j].offset;
      for (const auto& [col, sign] : vars[j].terms) {
        row.coef[col] += sign > 0 ? coef[j] : Rational(-coef[j]);
      }
    }
    switch (lp.senses()[r]) {
      case Sense::kLessEqual:
        row.slack_sign = 1;
        break;
      case Sense::kGreaterEqual:
        row.slack_sign = -1;
        break;
      case Sense::kEqual:
        break;
    }
    std_rows.push_back(std::move(row));
  }
  for (const auto& ur : upper_rows) {
    StdRow row{RationalVector(structural), ur.bound, 1};
    row.coef[ur.column] = 1;
    std_rows.push_back(std::move(row));
  }

  std::size_t num_slacks = 0;
  for (const auto& row : std_rows) num_slacks += row.slack_sign != 0;
  const std::size_t m = std_rows.size();

  // Columns: structural | slacks | artificials | rhs.
  std::vector<bool> needs_artificial(m);
  std::size_t num_artificial = 0;
  for (std::size_t r = 0; r < m; ++r) {
    const bool flip = sgn(std_rows[r].rhs) < 0;
    const int slack = flip ? -std_rows[r].slack_sign : std_rows[r].slack_sign;
    needs_artificial[r] = slack != 1;
    num_artificial += needs_artificial[r];
  }
  const std::size_t slack_begin = structural;
  const std::size_t art_begin = slack_begin + num_slacks;
  const std::size_t width = art_begin + num_artificial + 1;

  std::vector<RationalVector> rows;
  std::vector<std::size_t> basis;
  rows.reserve(m);
  std::size_t next_slack = slack_begin, next_art = art_begin;
  for (std::size_t r = 0; r < m; ++r) {
    RationalVector t(width);
    const bool flip = sgn(std_rows[r].rhs) < 0;
    for (std::size_t c = 0; c < structural; ++c) {
      t[c] = flip ? Rational(-std_rows[r].coef[c]) : std_rows[r].coef[c];
    }
    std::size_t basic = 0;
    if (std_rows[r].slack_sign != 0) {
      const int s = flip ? -std_rows[r].slack_sign : std_rows[r].slack_sign;
      t[next_slack] = s;
      if (s == 1) basic = next_slack;
      ++next_slack;
    }
    if (needs_artificial[r]) {
      t[next_art] = 1;
      basic = next_art++;
    }
    t[width - 1] = flip ? Rational(-std_rows[r].rhs) : std_rows[r].rhs;
    rows.push_back(std::move(t));
    basis.push_back(basic);
  }

  Tableau tableau(std::move(rows), std::move(basis), width);
  LpSolution solution;

  if (num_artificial > 0) {
    RationalVector phase1(width - 1);
    for (std::size_t c = art_begin; c < width - 1; ++c) phase1[c] = 1;
    tableau.SetCosts(phase1);
    tableau.Optimize(width - 1);
    if (sgn(tableau.Objective()) > 0) {
      solution.status = LpStatus::kInfeasible;
      solution.pivots = tableau.pivots();
      return solution;
    }
    // Drive remaining (zero-level) artificials out of the basis.
    for (std::size_t r = 0; r < tableau.num_rows();) {
      if (tableau.basis()[r] < art_begin) {
        ++r;
        continue;
      }
      std::size_t col = art_begin;
      for (std::size_t c = 0; c < art_begin; ++c) {
        if (sgn(tableau.at(r, c)) != 0) {
          col = c;
          break;
        }
      }
      if (col == art_begin) {
        tableau.DropRow(r);  // redundant equality
      } else {
        tableau.Pivot(r, col);
        ++r;
      }
    }
  }

  RationalVector phase2(width - 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [col, sign] : vars[j].terms) {
      phase2[col] += sign > 0 ? lp.objective()[j] : Rational(-lp.objective()[j]);
    }
  }
  tableau.SetCosts(phase2);
  if (!tableau.Optimize(art_begin)) {
    solution.status = LpStatus::kUnbounded;
    solution.pivots = tableau.pivots();
    return solution;
  }

  RationalVector std_values(art_begin);
  for (std::size_t r = 0; r < tableau.num_rows(); ++r) {
    if (tableau.basis()[r] < art_begin) {
      std_values[tableau.basis()[r]] = tableau.at(r, tableau.rhs_col());
    }
  }
  solution.status = LpStatus::kOptimal;
  solution.point.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational value = vars[j].offset;
    for (const auto& [col, sign] : vars[j].terms) {
      if (sign > 0) {
        value += std_values[col];
      } else {
        value -= std_values[col];
      }
    }
    solution.point[j] = std::move(value);
  }
  solution.objective_value = Dot(lp.objective(), solution.point);
  solution.pivots = tableau.pivots();
  return solution;
}

}  // namespace lowrank
