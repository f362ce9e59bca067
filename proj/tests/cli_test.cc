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
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "lowrank/constructors.h"
#include "lowrank/io.h"

namespace lowrank {
namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs lrgame with `args`; stderr is discarded.
RunResult RunLrgame(const std::string& args) {
  const std::string command = std::string(LRGAME_PATH) + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.out.append(buffer, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string Golden(const std::string& name) {
  return io::ReadFile(std::string(LOWRANK_GOLDEN_DIR) + "/" + name);
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("lrgame_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  // Writes `game` to a file in the scratch directory.
  std::string Save(const std::string& name, const BimatrixGame& game) const {
    io::WriteFile(Path(name), io::WriteGame(game));
    return Path(name);
  }

  fs::path dir_;
};

TEST_F(CliTest, GenWritesFamilies) {
  auto r = RunLrgame("gen rank1 --d 4 --out " + Path("g.txt"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("rank(A+B) = 1"), std::string::npos);
  EXPECT_EQ(io::ParseGame(io::ReadFile(Path("g.txt"))), Rank1Family(4));

  r = RunLrgame("gen rank1 --d 2");
  EXPECT_EQ(r.out, Golden("rank1_d2.game"));

  r = RunLrgame("gen identity --d 3");
  EXPECT_EQ(io::ParseGame(r.out), IdentityGame(3));

  r = RunLrgame("gen block --inner identity:2 --outer rank1:3");
  EXPECT_EQ(r.exit_code, 0);
  const BimatrixGame block = io::ParseGame(r.out);
  EXPECT_EQ(block.rows(), 5u);
  EXPECT_EQ(block, BlockGame(IdentityGame(2), Rank1Family(3)));

  r = RunLrgame("gen poly --g 1,2,3 --coef 0,0,1");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(io::ParseGame(r.out).a(), (RationalMatrix{{0, 1, 4}, {1, 0, 1}, {4, 1, 0}}));
}

TEST_F(CliTest, GenRejectsBadParameters) {
  EXPECT_EQ(RunLrgame("gen rank1").exit_code, 2);
  EXPECT_EQ(RunLrgame("gen rank1 --d 0").exit_code, 2);
  EXPECT_EQ(RunLrgame("gen nosuch --d 3").exit_code, 2);
  EXPECT_EQ(RunLrgame("gen block --inner identity:2").exit_code, 2);
  EXPECT_EQ(RunLrgame("frobnicate").exit_code, 2);
}

TEST_F(CliTest, SolveGolden) {
  const auto r = RunLrgame("solve --mode enum " + std::string(LOWRANK_GOLDEN_DIR) + "/rank1_d2.game");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, Golden("solve_rank1_d2.json"));
}

TEST_F(CliTest, SolveModes) {
  const std::string game = Save("g.txt", Rank1Family(4));
  auto j = nlohmann::json::parse(RunLrgame("solve --mode enum " + game).out);
  EXPECT_EQ(j["count"], 7);
  j = nlohmann::json::parse(RunLrgame("solve --mode components " + game).out);
  EXPECT_EQ(j["component_count"], 7);
  EXPECT_EQ(j["rank_component_bound"], "36");
  j = nlohmann::json::parse(RunLrgame("components " + game).out);
  EXPECT_EQ(j["component_count"], 7);

  const RationalMatrix a{{1, -1}, {-1, 1}};
  j = nlohmann::json::parse(RunLrgame("solve --mode zerosum " + Save("mp.txt", {a, -a})).out);
  EXPECT_EQ(j["equilibria"][0]["x"], nlohmann::json({"1/2", "1/2"}));
  EXPECT_EQ(j["equilibria"][0]["y"], nlohmann::json({"1/2", "1/2"}));
  EXPECT_EQ(j["equilibria"][0]["payoff1"], "0");
}

TEST_F(CliTest, SolveWritesOutFile) {
  const std::string game = Save("g.txt", Rank1Family(3));
  const auto r = RunLrgame("solve " + game + " --out " + Path("report.json"));
  EXPECT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(io::ReadFile(Path("report.json")));
  EXPECT_EQ(j["count"], 5);
}

TEST_F(CliTest, ApproxSchemes) {
  const std::string g4 = Save("g4.txt", Rank1Family(4));
  auto r = RunLrgame("approx --scheme abs --eps 1/10 " + g4);
  EXPECT_EQ(r.exit_code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["bound"], "32/5");
  RationalVector x, y;
  for (const auto& e : j["equilibria"][0]["x"]) x.push_back(ParseRational(e.get<std::string>()));
  for (const auto& e : j["equilibria"][0]["y"]) y.push_back(ParseRational(e.get<std::string>()));
  EXPECT_LE(Loss(Rank1Family(4), {x, y}), Rational(32, 5));

  const std::string g2 = Save("g2.txt", Rank1Family(2));
  r = RunLrgame("approx --scheme rel --eps 1/2 --decomp " + std::string(LOWRANK_GOLDEN_DIR) +
          "/rank1_d2.decomp " + g2);
  EXPECT_EQ(r.exit_code, 0);
  j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["equilibria"][0]["kind"], "relative_approximate");
  EXPECT_EQ(j["equilibria"][0]["rho"], "5/9");
  const Rational loss = ParseRational(j["equilibria"][0]["loss"].get<std::string>());
  const Rational s = ParseRational(j["equilibria"][0]["s"].get<std::string>());
  EXPECT_LE(loss, Rational(5, 9) * s);
}

TEST_F(CliTest, ApproxErrors) {
  const std::string g = Save("g.txt", Rank1Family(2));
  EXPECT_EQ(RunLrgame("approx --scheme abs --eps 0 " + g).exit_code, 2);
  EXPECT_EQ(RunLrgame("approx --scheme rel --eps 1/2 " + g).exit_code, 2);
  EXPECT_EQ(RunLrgame("approx --scheme abs --eps 1/2 " + Save("id.txt", IdentityGame(5))).exit_code,
            4);
}

TEST_F(CliTest, VerifyExamples) {
  const std::string g = Save("g.txt", Rank1Family(2));
  auto r = RunLrgame("verify --profile '1/2,1/2;1/2,1/2' " + g);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["loss"], "0");
  r = RunLrgame("verify --profile '1,0;0,1' " + g);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(nlohmann::json::parse(r.out)["loss"], "2");
  EXPECT_EQ(RunLrgame("verify --profile '1,0;0,1' --eps 1/8 " + g).exit_code, 0);
  EXPECT_EQ(RunLrgame("verify --profile '1,0;0,1' --eps 1/9 " + g).exit_code, 1);
  EXPECT_EQ(RunLrgame("verify --profile '1,0' " + g).exit_code, 3);
}

TEST_F(CliTest, BoundsGolden) {
  auto r = RunLrgame("bounds --d 4 --k 1");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, Golden("bounds_d4_k1.json"));
  const auto j = nlohmann::json::parse(RunLrgame("bounds --d 3").out);
  EXPECT_FALSE(j["bounds"].contains("tau"));
  EXPECT_EQ(j["bounds"]["keiding_bound"], "7");
}

TEST_F(CliTest, RankfactAndPerturb) {
  const std::string g = Save("g.txt", Rank1Family(2));
  auto r = RunLrgame("rankfact " + g);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(io::ParseDecomposition(r.out).Reconstruct(), Rank1Family(2).sum());

  const BimatrixGame near_rank1(RationalMatrix{{5, 1}, {1, 4}}, RationalMatrix(2, 2));
  r = RunLrgame("perturb --k 1 " + Save("n.txt", near_rank1));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(RunLrgame("perturb --k 1 " + Save("id.txt", IdentityGame(2))).exit_code, 2);
  EXPECT_EQ(r.out.find('.'), std::string::npos);  // no floating point
}

TEST_F(CliTest, ParseAndCapErrors) {
  io::WriteFile(Path("bad.txt"), "2 2\n1 x\n");
  EXPECT_EQ(RunLrgame("solve " + Path("bad.txt")).exit_code, 3);
  EXPECT_EQ(RunLrgame("solve " + Path("missing.txt")).exit_code, 3);
  EXPECT_EQ(RunLrgame("solve --cap 3 " + Save("g.txt", Rank1Family(4))).exit_code, 4);
  EXPECT_EQ(RunLrgame("solve --mode zerosum " + Save("h.txt", Rank1Family(2))).exit_code, 2);
}

}  // namespace
}  // namespace lowrank
