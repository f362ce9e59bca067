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

#ifndef LOWRANK_LP_H_
#define LOWRANK_LP_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "lowrank/rational.h"

namespace lowrank {

enum class Sense { kLessEqual, kEqual, kGreaterEqual };

// minimize c^T x  subject to  row_r . x (sense_r) rhs_r,  lower <= x <= upper.
// A missing bound is infinite. Variables default to x >= 0.
class LinearProgram {
 public:
  LinearProgram() = default;

  // Returns the index of the new variable.
  std::size_t AddVariable(Rational cost,
                          std::optional<Rational> lower = Rational(0),
                          std::optional<Rational> upper = std::nullopt);

  // `coefficients` may be shorter than num_variables(); missing entries are 0.
  void AddConstraint(RationalVector coefficients, Sense sense, Rational rhs);

  std::size_t num_variables() const { return objective_.size(); }
  std::size_t num_constraints() const { return rhs_.size(); }

  const RationalVector& objective() const { return objective_; }
  const std::vector<RationalVector>& rows() const { return rows_; }
  const std::vector<Sense>& senses() const { return senses_; }
  const RationalVector& rhs() const { return rhs_; }
  const std::vector<std::optional<Rational>>& lower() const { return lower_; }
  const std::vector<std::optional<Rational>>& upper() const { return upper_; }

  // True iff `point` satisfies every row and bound exactly.
  bool IsFeasible(const RationalVector& point) const;

 private:
  RationalVector objective_;
  std::vector<RationalVector> rows_;
  std::vector<Sense> senses_;
  RationalVector rhs_;
  std::vector<std::optional<Rational>> lower_;
  std::vector<std::optional<Rational>> upper_;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  RationalVector point;      // empty unless optimal
  Rational objective_value;  // 0 unless optimal
  std::size_t pivots = 0;
};

// Exact two-phase tableau simplex with Bland's rule. Deterministic: the same
// program always yields the same point. Throws std::invalid_argument on
// malformed programs (no variables, ragged rows, lower > upper).
LpSolution SolveLp(const LinearProgram& lp);

const char* ToString(LpStatus status);

}  // namespace lowrank

#endif  // LOWRANK_LP_H_
