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

#ifndef LOWRANK_MATRIX_H_
#define LOWRANK_MATRIX_H_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "lowrank/rational.h"

namespace lowrank {

// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, RationalVector entries);
  // Row-by-row literal, e.g. {{2, 7}, {1, 8}}. All rows must have equal length.
  RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RationalMatrix Identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return entries_.empty(); }
  const RationalVector& entries() const { return entries_; }

  Rational& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  RationalVector Row(std::size_t i) const;
  RationalVector Col(std::size_t j) const;
  RationalMatrix Transpose() const;

  // M v and v^T M.
  RationalVector Apply(const RationalVector& v) const;
  RationalVector ApplyLeft(const RationalVector& v) const;
  // x^T M y.
  Rational Bilinear(const RationalVector& x, const RationalVector& y) const;

  bool IsZero() const;

  RationalMatrix& operator+=(const RationalMatrix& other);
  RationalMatrix& operator-=(const RationalMatrix& other);
  RationalMatrix& operator*=(const Rational& scalar);

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  RationalVector entries_;
};

RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b);
RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b);
RationalMatrix operator*(RationalMatrix a, const Rational& scalar);
RationalMatrix operator-(RationalMatrix a);
RationalMatrix Multiply(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix OuterProduct(const RationalVector& u, const RationalVector& v);

// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t MatrixRank(const RationalMatrix& m);

// max_ij |m_ij|. Throws std::invalid_argument on an empty matrix.
Rational MaxAbsEntry(const RationalMatrix& m);

// Solves a possibly rectangular system M z = b. Returns the solution only if
// the system is consistent and the solution is unique.
std::optional<RationalVector> SolveUnique(RationalMatrix m, RationalVector b);

// C = sum_i u[i] v[i]^T.
struct RankFactorization {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<RationalVector> u;
  std::vector<RationalVector> v;
  bool nonnegative = true;

  std::size_t rank() const { return u.size(); }
  RationalMatrix Reconstruct() const;
};

// Exact rank-one deflation with pivots taken as the first nonzero entry in
// column-major scan order. Each u is scaled so its pivot entry is 1, which
// makes its first nonzero entry positive.
RankFactorization RankFactorize(const RationalMatrix& m);

// Recomputes the nonnegativity flag from the factor entries.
bool IsNonnegative(const RankFactorization& f);

}  // namespace lowrank

#endif  // LOWRANK_MATRIX_H_
