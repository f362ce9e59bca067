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

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "lowrank/constructors.h"
#include "lowrank/enumeration.h"
#include "test_util.h"

namespace lowrank {
namespace {

TEST(Rank1FamilyTest, SmallCases) {
  const BimatrixGame g2 = Rank1Family(2);
  EXPECT_EQ(g2.a(), (RationalMatrix{{2, 7}, {1, 8}}));
  EXPECT_EQ(g2.b(), (RationalMatrix{{2, 1}, {7, 8}}));
  const BimatrixGame g1 = Rank1Family(1);
  EXPECT_EQ(g1.a(), (RationalMatrix{{2}}));
  EXPECT_EQ(g1.b(), (RationalMatrix{{2}}));
  EXPECT_THROW(Rank1Family(0), std::invalid_argument);
}

TEST(Rank1FamilyTest, SumIsFourIJWithRankOne) {
  for (std::size_t d = 1; d <= 8; ++d) {
    const BimatrixGame g = Rank1Family(d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        EXPECT_EQ(g.sum()(i, j), Rational(4 * (i + 1) * (j + 1)));
      }
    }
    EXPECT_EQ(g.rank(), 1u);
    EXPECT_EQ(g.sum_norm(), Rational(4 * d * d));
  }
}

TEST(AuxFamilyTest, ValuesAndRank) {
  EXPECT_EQ(AuxFamily(2).a(), (RationalMatrix{{0, -1}, {-1, 0}}));
  EXPECT_EQ(AuxFamily(1).a(), (RationalMatrix{{0}}));
  for (std::size_t d = 3; d <= 8; ++d) EXPECT_EQ(AuxFamily(d).rank(), 3u);
  EXPECT_THROW(AuxFamily(0), std::invalid_argument);
}

TEST(AuxFamilyTest, SameEquilibriaAsRank1Family) {
  for (std::size_t d = 2; d <= 5; ++d) {
    EXPECT_EQ(SupportEnumerationOracle(AuxFamily(d)),
              SupportEnumerationOracle(Rank1Family(d)))
        << "d = " << d;
  }
}

TEST(IdentityGameTest, Values) {
  const BimatrixGame g = IdentityGame(2);
  EXPECT_EQ(g.a(), (RationalMatrix{{1, 0}, {0, 1}}));
  EXPECT_EQ(g.b(), g.a());
  EXPECT_THROW(IdentityGame(0), std::invalid_argument);
}

TEST(BlockGameTest, ShapeAndRankAdditivity) {
  const BimatrixGame inner = IdentityGame(2), outer = Rank1Family(3);
  const BimatrixGame g = BlockGame(inner, outer);
  EXPECT_EQ(g.rows(), 5u);
  EXPECT_EQ(g.cols(), 5u);
  EXPECT_EQ(g.rank(), inner.rank() + outer.rank());
  EXPECT_EQ(g.a()(3, 4), outer.a()(1, 2));
  EXPECT_EQ(g.a()(0, 3), 0);

  const BimatrixGame zero(RationalMatrix(1, 1), RationalMatrix(1, 1));
  const BimatrixGame zz = BlockGame(zero, zero);
  EXPECT_EQ(zz.a(), RationalMatrix(2, 2));
  EXPECT_EQ(zz.b(), RationalMatrix(2, 2));

  const BimatrixGame rect(RationalMatrix(1, 2), RationalMatrix(1, 2));
  EXPECT_THROW(BlockGame(rect, outer), std::invalid_argument);
}

TEST(BlockGameTest, RankAdditivityOnRandomBlocks) {
  std::mt19937 rng(3);
  for (int t = 0; t < 20; ++t) {
    const std::size_t k = 1 + rng() % 3, d = 1 + rng() % 3;
    const BimatrixGame inner(testing::RandomIntMatrix(rng, k, k, -3, 3),
                             testing::RandomIntMatrix(rng, k, k, -3, 3));
    const BimatrixGame outer(testing::RandomIntMatrix(rng, d, d, -3, 3),
                             testing::RandomIntMatrix(rng, d, d, -3, 3));
    EXPECT_EQ(BlockGame(inner, outer).rank(), inner.rank() + outer.rank());
  }
}

TEST(PolyKernelMatrixTest, Examples) {
  EXPECT_EQ(PolyKernelMatrix({1, 2, 3}, {0, 0, -1}), AuxFamily(3).a());
  const RationalMatrix constant = PolyKernelMatrix({1, 2, 3, 4}, {5});
  EXPECT_EQ(MatrixRank(constant), 1u);
  EXPECT_EQ(MaxAbsEntry(constant), 5);
  EXPECT_LE(MatrixRank(PolyKernelMatrix({1, 2, 3, 4, 5, 6}, {0, 0, 0, 1})), 10u);
  EXPECT_THROW(PolyKernelMatrix({}, {1}), std::invalid_argument);
}

TEST(PolyKernelMatrixTest, RankBoundOnRandomKernels) {
  std::mt19937 rng(4);
  std::uniform_int_distribution<long> value(-6, 6);
  for (int t = 0; t < 60; ++t) {
    const std::size_t degree = rng() % 5, d = 1 + rng() % 16;
    RationalVector g(d), p(degree + 1);
    for (auto& e : g) e = Rational(value(rng), 1 + rng() % 3);
    for (auto& e : p) e = value(rng);
    const std::size_t bound = (degree + 1) * (degree + 2) / 2;
    EXPECT_LE(MatrixRank(PolyKernelMatrix(g, p)), bound);
  }
}

TEST(AdditiveDecompositionTest, FindExamples) {
  auto uv = FindAdditiveDecomposition(RationalMatrix{{1, 3}, {2, 4}});
  ASSERT_TRUE(uv);
  EXPECT_EQ(uv->first, (RationalVector{0, 1}));
  EXPECT_EQ(uv->second, (RationalVector{1, 3}));
  EXPECT_FALSE(FindAdditiveDecomposition(RationalMatrix{{4, 8}, {8, 16}}));
  uv = FindAdditiveDecomposition(RationalMatrix(2, 3));
  ASSERT_TRUE(uv);
  EXPECT_EQ(uv->first, RationalVector(2));
  EXPECT_EQ(uv->second, RationalVector(3));
}

TEST(AdditiveToZeroSumTest, Example) {
  const BimatrixGame g(RationalMatrix{{1, 2}, {3, 4}}, RationalMatrix{{0, 1}, {-1, 0}});
  const BimatrixGame z = AdditiveToZeroSum(g, {0, 1}, {1, 3});
  EXPECT_EQ(z.a(), (RationalMatrix{{0, -1}, {2, 1}}));
  EXPECT_EQ(z.b(), -z.a());
  EXPECT_TRUE(z.is_zero_sum());
}

TEST(AdditiveToZeroSumTest, ZeroSumAndRowConstantInputs) {
  const RationalMatrix a{{3, -1}, {0, 2}};
  const BimatrixGame zs(a, -a);
  EXPECT_EQ(AdditiveToZeroSum(zs, {0, 0}, {0, 0}), zs);

  // Row-constant: a_ij + b_ij = c for all i, j.
  const BimatrixGame rc(a, RationalMatrix{{4, 8}, {7, 5}} );
  EXPECT_EQ(rc.sum(), (RationalMatrix{{7, 7}, {7, 7}}));
  const BimatrixGame z = AdditiveToZeroSum(rc, {7, 7}, {0, 0});
  EXPECT_EQ(z.a(), a);
  EXPECT_TRUE(z.is_zero_sum());
}

TEST(AdditiveToZeroSumTest, RejectsNonAdditiveSums) {
  EXPECT_THROW(AdditiveToZeroSum(Rank1Family(2), {0, 0}, {0, 0}),
               std::invalid_argument);
  EXPECT_THROW(AdditiveToZeroSum(Rank1Family(2), {0}, {0, 0}),
               std::invalid_argument);
}

TEST(AdditiveToZeroSumTest, PreservesEquilibriaOnSampledProfiles) {
  std::mt19937 rng(12);
  std::uniform_int_distribution<long> value(-5, 5);
  for (int t = 0; t < 30; ++t) {
    const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4;
    const RationalMatrix a = testing::RandomIntMatrix(rng, m, n, -9, 9);
    RationalVector u(m), v(n);
    for (auto& e : u) e = value(rng);
    for (auto& e : v) e = value(rng);
    RationalMatrix b(m, n);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) b(i, j) = u[i] + v[j] - a(i, j);
    }
    const BimatrixGame g(a, b);
    const auto uv = FindAdditiveDecomposition(g.sum());
    ASSERT_TRUE(uv);
    const BimatrixGame z = AdditiveToZeroSum(g, uv->first, uv->second);
    EXPECT_TRUE(z.sum().IsZero());
    auto profiles = SupportEnumerationOracle(g);
    for (int s = 0; s < 10; ++s) profiles.push_back(testing::RandomProfile(rng, g));
    for (const auto& p : profiles) {
      EXPECT_EQ(IsExactEquilibrium(g, p), IsExactEquilibrium(z, p));
    }
  }
}

}  // namespace
}  // namespace lowrank
