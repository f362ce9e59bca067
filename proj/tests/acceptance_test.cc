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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits with
// the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lowrank/approx.h"
#include "lowrank/bounds.h"
#include "lowrank/constructors.h"
#include "lowrank/enumeration.h"
#include "lowrank/game.h"
#include "lowrank/matrix.h"
#include "test_util.h"

namespace lowrank {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects the first few failure messages of a criterion.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  bool ok() const { return failures_ == 0; }
  std::string notes() const {
    if (failures_ <= 3) return notes_;
    return notes_ + "; +" + std::to_string(failures_ - 3) + " more";
  }

 private:
  int failures_ = 0;
  std::string notes_;
};

std::vector<MixedProfile> Profiles(const EquilibriumSet& set) {
  std::vector<MixedProfile> out;
  for (const auto& r : set.extreme_equilibria) out.push_back(r.profile);
  return out;
}

std::vector<MixedProfile> Rank1ClosedForm(std::size_t d) {
  std::vector<MixedProfile> out;
  for (std::size_t i = 0; i < d; ++i) out.push_back({UnitVector(d, i), UnitVector(d, i)});
  for (std::size_t i = 0; i + 1 < d; ++i) {
    out.push_back({testing::Half(d, i), testing::Half(d, i)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

void Criterion1(Check& c) {
  for (std::size_t d = 2; d <= 6; ++d) {
    const auto found = Profiles(EnumerateEquilibria(Rank1Family(d)));
    c.Expect(found.size() == 2 * d - 1, "d=" + std::to_string(d) + " count " +
                                            std::to_string(found.size()));
    c.Expect(found == Rank1ClosedForm(d), "d=" + std::to_string(d) + " set differs");
  }
}

void Criterion2(Check& c) {
  for (std::size_t d = 2; d <= 6; ++d) {
    const auto q = BuildPolyhedra(Rank1Family(d)).second;
    const auto vertices = EnumerateVertices(q);
    c.Expect(6 * vertices.size() == d * (d * d + 5),
             "d=" + std::to_string(d) + " vertices " + std::to_string(vertices.size()));
    std::size_t class2 = 0, expected = 0;
    for (const auto& v : vertices) class2 += v.BindingBestResponses(q) == 2;
    for (std::size_t k = 1; k < d; ++k) expected += k * (d - k);
    c.Expect(class2 == expected, "d=" + std::to_string(d) + " class-2 " +
                                     std::to_string(class2));
  }
}

void Criterion3(Check& c) {
  for (std::size_t d = 2; d <= 6; ++d) {
    const auto [p, q] = BuildPolyhedra(Rank1Family(d));
    for (const auto* poly : {&p, &q}) {
      for (const auto& v : EnumerateVertices(*poly)) {
        c.Expect(v.BindingBestResponses(*poly) <= 2, "d=" + std::to_string(d));
      }
    }
  }
}

void Criterion4(Check& c) {
  for (std::size_t d = 2; d <= 6; ++d) {
    const BimatrixGame g = Rank1Family(d);
    c.Expect(IsNondegenerate(g), "d=" + std::to_string(d) + " degenerate");
    const std::size_t components = CountConnectedComponents(EnumerateEquilibria(g), g);
    c.Expect(components == 2 * d - 1,
             "d=" + std::to_string(d) + " components " + std::to_string(components));
  }
}

void Criterion5(Check& c) {
  const auto set = EnumerateEquilibria(BlockGame(IdentityGame(2), Rank1Family(3)));
  const Integer needed = HierarchyCount(5, 3);
  c.Expect(needed == 15, "hierarchy count " + needed.get_str());
  c.Expect(Integer(set.extreme_equilibria.size()) >= needed,
           "found " + std::to_string(set.extreme_equilibria.size()));
}

void Criterion6(Check& c) {
  c.Expect(Tau(2) == 3 && Tau(4) == 15 && Tau(6) == 75, "tau values");
  c.Expect(Tau(4) == (Integer(1) << 4) - 1, "tau(4) != 2^4 - 1");
  c.Expect(KeidingPhi(2, 4) - 1 == 3, "Phi_{2,4} - 1");
  c.Expect(KeidingPhi(3, 6) - 1 == 7, "Phi_{3,6} - 1");
  c.Expect(KeidingPhi(4, 8) - 1 == 19, "Phi_{4,8} - 1");
  for (std::size_t d = 2; d <= 4; ++d) {
    const Integer count = EnumerateEquilibria(IdentityGame(d)).extreme_equilibria.size();
    c.Expect(count == (Integer(1) << d) - 1, "identity d=" + std::to_string(d));
    c.Expect(count <= KeidingPhi(d, 2 * d) - 1, "Keiding d=" + std::to_string(d));
  }
}

void Criterion7(Check& c) {
  std::mt19937 rng(7001);
  for (int t = 0; t < 20; ++t) {
    const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4;
    const RationalMatrix a = testing::RandomIntMatrix(rng, m, n, -9, 9);
    const RationalVector u = testing::RandomIntMatrix(rng, 1, m, -9, 9).Row(0);
    const RationalVector v = testing::RandomIntMatrix(rng, 1, n, -9, 9).Row(0);
    RationalMatrix sum(m, n);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) sum(i, j) = u[i] + v[j];
    }
    const BimatrixGame g(a, sum - a);
    const BimatrixGame z = AdditiveToZeroSum(g, u, v);
    c.Expect(z.is_zero_sum(), "reduction not zero-sum");
    c.Expect(SupportEnumerationOracle(g) == SupportEnumerationOracle(z),
             "trial " + std::to_string(t));
  }
}

void Criterion8(Check& c) {
  std::mt19937 rng(8001);
  int games = 0;
  while (games < 20) {
    const std::size_t d = 2 + rng() % 3;
    const BimatrixGame g(testing::RandomIntMatrix(rng, d, d, -9, 9),
                         testing::RandomIntMatrix(rng, d, d, -9, 9));
    if (g.sum().IsZero()) continue;
    const RationalMatrix c_prime = SvdTruncate(g.sum(), 1);
    if (MaxAbsEntry(g.sum() - c_prime) >= g.sum_norm()) continue;
    const auto pert = PerturbGame(g, c_prime);
    for (const auto& r : EnumerateEquilibria(g).extreme_equilibria) {
      if (!CheckPerturbationTheorem(pert, r.profile)) {
        std::ostringstream note;
        note << "game " << games << " d=" << d << " eps=" << ToString(pert.eps)
             << " loss'=" << ToString(Loss(pert.perturbed, r.profile))
             << " > 3eps|C'|=" << ToString(3 * pert.eps * pert.perturbed.sum_norm());
        c.Expect(false, note.str());
      }
    }
    ++games;
  }
}

void Criterion9(Check& c) {
  for (std::size_t d : {4u, 6u, 8u, 10u}) {
    const BimatrixGame g = Rank1Family(d);
    for (const Rational& eps : {Rational(1, 10), Rational(1, 20)}) {
      const auto start = Clock::now();
      const auto r = ApproxAbsolute(g, eps);
      const double elapsed = Seconds(start);
      const std::string tag = "d=" + std::to_string(d) + " eps=" + ToString(eps);
      c.Expect(Loss(g, r.report.profile) <= eps * g.sum_norm(), tag + " loss");
      c.Expect(elapsed < 60, tag + " took " + std::to_string(elapsed) + "s");
    }
  }
}

void Criterion10(Check& c) {
  for (std::size_t d = 2; d <= 4; ++d) {
    const BimatrixGame g = Rank1Family(d);
    RationalVector u(d);
    for (std::size_t i = 0; i < d; ++i) u[i] = 2 * static_cast<long>(i + 1);
    const RankFactorization f{d, d, {u}, {u}, true};
    for (const Rational& eps : {Rational(1, 2), Rational(1, 4)}) {
      const auto start = Clock::now();
      const auto r = ApproxRelative(g, f, eps);
      const double elapsed = Seconds(start);
      const auto& p = r.report.profile;
      const auto [best1, best2] = BestResponseValues(g, p);
      const Rational s = best1 + best2;
      const std::string tag = "d=" + std::to_string(d) + " eps=" + ToString(eps);
      c.Expect(s - g.sum().Bilinear(p.x, p.y) <= RelativeRatio(eps) * s, tag + " ratio");
      c.Expect(elapsed < 60, tag + " took " + std::to_string(elapsed) + "s");
    }
  }
}

void Criterion11(Check& c) {
  std::vector<std::pair<std::string, BimatrixGame>> games;
  for (std::size_t d = 1; d <= 6; ++d) {
    games.emplace_back("rank1:" + std::to_string(d), Rank1Family(d));
    games.emplace_back("aux:" + std::to_string(d), AuxFamily(d));
    if (d <= 5) games.emplace_back("identity:" + std::to_string(d), IdentityGame(d));
  }
  games.emplace_back("block", BlockGame(IdentityGame(2), Rank1Family(3)));
  games.emplace_back("poly", BimatrixGame(PolyKernelMatrix({1, 2, 3, 4}, {1, 0, 1}),
                                          PolyKernelMatrix({1, 2, 3, 4}, {1, 0, 1})));
  std::mt19937 rng(11001);
  int random = 0;
  while (random < 50) {
    const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4;
    const BimatrixGame g(testing::RandomIntMatrix(rng, m, n, -9, 9),
                         testing::RandomIntMatrix(rng, m, n, -9, 9));
    if (!IsNondegenerate(g)) continue;
    games.emplace_back("random:" + std::to_string(random++), g);
  }
  for (const auto& [name, g] : games) {
    c.Expect(Profiles(EnumerateEquilibria(g)) == SupportEnumerationOracle(g), name);
  }
}

void Criterion12(Check& c) {
  std::mt19937 rng(12001);
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4;
    const BimatrixGame g(testing::RandomIntMatrix(rng, m, n, -9, 9),
                         testing::RandomIntMatrix(rng, m, n, -9, 9));
    const MixedProfile p = testing::RandomProfile(rng, g);
    c.Expect(QpObjective(g, p) == Loss(g, p), "trial " + std::to_string(t));
  }
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0: no wall-clock cap
  std::function<void(Check&)> run;
};

int RunAll() {
  const std::vector<Criterion> criteria = {
      {1, "rank-1 family has exactly 2d-1 equilibria (d=2..6)", 10, Criterion1},
      {2, "vertex census d(d^2+5)/6 and class-2 count", 30, Criterion2},
      {3, "at most two binding best responses per vertex", 0, Criterion3},
      {4, "rank-1 family nondegenerate with 2d-1 components", 0, Criterion4},
      {5, "block hierarchy d=5 k=3 has >= 15 equilibria", 0, Criterion5},
      {6, "tau, Keiding and identity-game counts", 0, Criterion6},
      {7, "additive games keep equilibria under zero-sum reduction", 0, Criterion7},
      {8, "equilibria stay 3eps-approximate after rank-1 SVD perturbation", 0, Criterion8},
      {9, "absolute approximation meets eps|A+B| (d=4..10)", 0, Criterion9},
      {10, "relative approximation meets 1-1/(1+eps)^2", 0, Criterion10},
      {11, "vertex enumeration agrees with support enumeration", 0, Criterion11},
      {12, "QP objective equals loss on 200 random profiles", 0, Criterion12},
  };
  int failed = 0;
  for (const auto& criterion : criteria) {
    Check check;
    const auto start = Clock::now();
    try {
      criterion.run(check);
    } catch (const std::exception& e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed = Seconds(start);
    if (criterion.limit_seconds > 0 && elapsed >= criterion.limit_seconds) {
      check.Expect(false, "exceeded " + std::to_string(criterion.limit_seconds) + "s");
    }
    failed += !check.ok();
    std::printf("[%s] %2d %s (%.2fs)%s%s\n", check.ok() ? "PASS" : "FAIL", criterion.id,
                criterion.name, elapsed, check.ok() ? "" : ": ", check.notes().c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed;
}

}  // namespace
}  // namespace lowrank

int main() { return lowrank::RunAll(); }
