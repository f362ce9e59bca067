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

#include "lowrank/constructors.h"

#include <stdexcept>

namespace lowrank {
namespace {

void RequirePositive(std::size_t d) {
  if (d == 0) throw std::invalid_argument("dimension d must be at least 1");
}

}  // namespace

BimatrixGame Rank1Family(std::size_t d) {
  RequirePositive(d);
  RationalMatrix a(d, d), b(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      const long i = static_cast<long>(r) + 1, j = static_cast<long>(c) + 1;
      a(r, c) = 2 * i * j - i * i + j * j;
      b(r, c) = 2 * i * j + i * i - j * j;
    }
  }
  return BimatrixGame(std::move(a), std::move(b));
}

BimatrixGame AuxFamily(std::size_t d) {
  RequirePositive(d);
  RationalMatrix a(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      const long diff = static_cast<long>(r) - static_cast<long>(c);
      a(r, c) = -diff * diff;
    }
  }
  RationalMatrix b = a;
  return BimatrixGame(std::move(a), std::move(b));
}

BimatrixGame IdentityGame(std::size_t d) {
  RequirePositive(d);
  return BimatrixGame(RationalMatrix::Identity(d), RationalMatrix::Identity(d));
}

BimatrixGame BlockGame(const BimatrixGame& inner, const BimatrixGame& outer) {
  if (!inner.is_square() || !outer.is_square()) {
    throw std::invalid_argument("block game requires square blocks");
  }
  const std::size_t k = inner.rows(), d = k + outer.rows();
  RationalMatrix a(d, d), b(d, d);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      a(i, j) = inner.a()(i, j);
      b(i, j) = inner.b()(i, j);
    }
  }
  for (std::size_t i = 0; i < outer.rows(); ++i) {
    for (std::size_t j = 0; j < outer.cols(); ++j) {
      a(k + i, k + j) = outer.a()(i, j);
      b(k + i, k + j) = outer.b()(i, j);
    }
  }
  return BimatrixGame(std::move(a), std::move(b));
}

RationalMatrix PolyKernelMatrix(const RationalVector& g,
                                const RationalVector& coefficients) {
  if (g.empty()) throw std::invalid_argument("kernel grid values are empty");
  if (coefficients.empty()) {
    throw std::invalid_argument("kernel polynomial has no coefficients");
  }
  const std::size_t d = g.size();
  RationalMatrix c(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Rational t = g[i] - g[j];
      Rational value = 0;  // Horner
      for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
        value = value * t + *it;
      }
      c(i, j) = value;
    }
  }
  return c;
}

std::optional<std::pair<RationalVector, RationalVector>>
FindAdditiveDecomposition(const RationalMatrix& c) {
  if (c.empty()) return std::nullopt;
  RationalVector u(c.rows()), v(c.cols());
  for (std::size_t i = 0; i < c.rows(); ++i) u[i] = c(i, 0) - c(0, 0);
  for (std::size_t j = 0; j < c.cols(); ++j) v[j] = c(0, j);
  for (std::size_t i = 0; i < c.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) {
      if (c(i, j) != u[i] + v[j]) return std::nullopt;
    }
  }
  return std::make_pair(std::move(u), std::move(v));
}

BimatrixGame AdditiveToZeroSum(const BimatrixGame& game,
                               const RationalVector& u,
                               const RationalVector& v) {
  if (u.size() != game.rows() || v.size() != game.cols()) {
    throw std::invalid_argument("decomposition vectors have wrong length");
  }
  RationalMatrix a = game.a(), b = game.b();
  for (std::size_t i = 0; i < game.rows(); ++i) {
    for (std::size_t j = 0; j < game.cols(); ++j) {
      if (game.sum()(i, j) != u[i] + v[j]) {
        throw std::invalid_argument(
            "A + B is not the additive function u_i + v_j");
      }
      a(i, j) -= v[j];
      b(i, j) -= u[i];
    }
  }
  return BimatrixGame(std::move(a), std::move(b));
}

}  // namespace lowrank
