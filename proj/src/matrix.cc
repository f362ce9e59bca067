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

#include "lowrank/matrix.h"

#include <stdexcept>
#include <utility>

namespace lowrank {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols,
                               RationalVector entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw std::invalid_argument("matrix entry count does not match shape");
  }
}

RationalMatrix::RationalMatrix(
    std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw std::invalid_argument("ragged matrix literal");
    }
    for (long e : row) entries_.emplace_back(e);
  }
}

RationalMatrix RationalMatrix::Identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalVector RationalMatrix::Row(std::size_t i) const {
  return RationalVector(entries_.begin() + i * cols_,
                        entries_.begin() + (i + 1) * cols_);
}

RationalVector RationalMatrix::Col(std::size_t j) const {
  RationalVector col(rows_);
  for (std::size_t i = 0; i < rows_; ++i) col[i] = (*this)(i, j);
  return col;
}

RationalMatrix RationalMatrix::Transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

RationalVector RationalMatrix::Apply(const RationalVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Apply: size mismatch");
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn(v[j]) != 0) out[i] += (*this)(i, j) * v[j];
    }
  }
  return out;
}

RationalVector RationalMatrix::ApplyLeft(const RationalVector& v) const {
  if (v.size() != rows_) {
    throw std::invalid_argument("ApplyLeft: size mismatch");
  }
  RationalVector out(cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (sgn(v[i]) == 0) continue;
    for (std::size_t j = 0; j < cols_; ++j) out[j] += v[i] * (*this)(i, j);
  }
  return out;
}

Rational RationalMatrix::Bilinear(const RationalVector& x,
                                  const RationalVector& y) const {
  return Dot(x, Apply(y));
}

bool RationalMatrix::IsZero() const {
  for (const auto& e : entries_) {
    if (sgn(e) != 0) return false;
  }
  return true;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("matrix sum: shape mismatch");
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    entries_[k] += other.entries_[k];
  }
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("matrix difference: shape mismatch");
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    entries_[k] -= other.entries_[k];
  }
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) {
  return a += b;
}
RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) {
  return a -= b;
}
RationalMatrix operator*(RationalMatrix a, const Rational& scalar) {
  return a *= scalar;
}
RationalMatrix operator-(RationalMatrix a) { return a *= Rational(-1); }

RationalMatrix Multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix product: shape mismatch");
  }
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

RationalMatrix OuterProduct(const RationalVector& u, const RationalVector& v) {
  RationalMatrix out(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out(i, j) = u[i] * v[j];
  }
  return out;
}

std::size_t MatrixRank(const RationalMatrix& m) {
  if (m.empty()) return 0;
  // Clear denominators row by row, then run Bareiss elimination over Z.
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Integer> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    Integer lcm = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      a[i * cols + j] = m(i, j).get_num() * (lcm / m(i, j).get_den());
    }
  }
  auto at = [&](std::size_t i, std::size_t j) -> Integer& {
    return a[i * cols + j];
  };
  std::size_t rank = 0;
  Integer prev_pivot = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && at(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    }
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        Integer v = at(rank, col) * at(i, j) - at(i, col) * at(rank, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
        at(i, j) = v;
      }
      at(i, col) = 0;
    }
    prev_pivot = at(rank, col);
    ++rank;
  }
  return rank;
}

Rational MaxAbsEntry(const RationalMatrix& m) {
  if (m.empty()) throw std::invalid_argument("MaxAbsEntry of empty matrix");
  Rational best = 0;
  for (const auto& e : m.entries()) {
    if (abs(e) > best) best = abs(e);
  }
  return best;
}

std::optional<RationalVector> SolveUnique(RationalMatrix m, RationalVector b) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (b.size() != rows) throw std::invalid_argument("SolveUnique: shape mismatch");
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == rows) return std::nullopt;  // free variable
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(rank, j));
      std::swap(b[pivot], b[rank]);
    }
    const Rational inv = 1 / m(rank, col);
    for (std::size_t j = col; j < cols; ++j) m(rank, j) *= inv;
    b[rank] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || sgn(m(i, col)) == 0) continue;
      const Rational factor = m(i, col);
      for (std::size_t j = col; j < cols; ++j) m(i, j) -= factor * m(rank, j);
      b[i] -= factor * b[rank];
    }
    ++rank;
  }
  for (std::size_t i = rank; i < rows; ++i) {
    if (sgn(b[i]) != 0) return std::nullopt;  // inconsistent
  }
  b.resize(cols);
  return b;
}

RationalMatrix RankFactorization::Reconstruct() const {
  RationalMatrix out(rows, cols);
  for (std::size_t p = 0; p < u.size(); ++p) out += OuterProduct(u[p], v[p]);
  return out;
}

RankFactorization RankFactorize(const RationalMatrix& m) {
  RankFactorization f;
  f.rows = m.rows();
  f.cols = m.cols();
  RationalMatrix residual = m;
  while (true) {
    std::size_t pr = 0, pc = 0;
    bool found = false;
    for (std::size_t j = 0; j < residual.cols() && !found; ++j) {
      for (std::size_t i = 0; i < residual.rows(); ++i) {
        if (sgn(residual(i, j)) != 0) {
          pr = i;
          pc = j;
          found = true;
          break;
        }
      }
    }
    if (!found) break;
    RationalVector u = residual.Col(pc);
    const Rational pivot = residual(pr, pc);
    for (auto& e : u) e /= pivot;
    RationalVector v = residual.Row(pr);
    residual -= OuterProduct(u, v);
    f.u.push_back(std::move(u));
    f.v.push_back(std::move(v));
  }
  f.nonnegative = IsNonnegative(f);
  return f;
}

bool IsNonnegative(const RankFactorization& f) {
  for (const auto* side : {&f.u, &f.v}) {
    for (const auto& vec : *side) {
      for (const auto& e : vec) {
        if (sgn(e) < 0) return false;
      }
    }
  }
  return true;
}

}  // namespace lowrank
