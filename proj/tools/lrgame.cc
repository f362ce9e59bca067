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

// lrgame: construct, solve, approximate and verify low-rank bimatrix games.
//
// Exit codes: 0 success or verified, 1 verification failed, 2 usage error,
// 3 input parse error, 4 guard or cap exceeded.

#include <cstddef>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "lowrank/approx.h"
#include "lowrank/bounds.h"
#include "lowrank/constructors.h"
#include "lowrank/enumeration.h"
#include "lowrank/errors.h"
#include "lowrank/io.h"

namespace {

using lowrank::BimatrixGame;
using lowrank::Rational;
namespace io = lowrank::io;

enum ExitCode {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kParse = 3,
  kGuard = 4,
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "rank1:3", "identity:2", "aux:4".
BimatrixGame ParseFamily(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw UsageError("block argument must be family:d, got '" + text + "'");
  }
  const std::string family = text.substr(0, colon);
  std::size_t d = 0;
  try {
    d = std::stoul(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw UsageError("bad dimension in '" + text + "'");
  }
  if (family == "rank1") return lowrank::Rank1Family(d);
  if (family == "aux") return lowrank::AuxFamily(d);
  if (family == "identity") return lowrank::IdentityGame(d);
  throw UsageError("unknown block family '" + family + "'");
}

Rational ParseEps(const std::string& text) {
  Rational eps;
  try {
    eps = lowrank::ParseRational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--eps: ") + e.what());
  }
  if (sgn(eps) <= 0) throw UsageError("--eps must be positive");
  return eps;
}

lowrank::RationalVector ParseList(const std::string& text, const char* flag) {
  lowrank::RationalVector out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    try {
      out.push_back(lowrank::ParseRational(text.substr(start, comma - start)));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string(flag) + ": " + e.what());
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void Emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    io::WriteFile(out_path, text);
  }
}

void EmitJson(const std::string& out_path, const nlohmann::ordered_json& j) {
  Emit(out_path, j.dump(2) + "\n");
}

struct Options {
  std::string family;
  std::size_t d = 0;
  std::optional<std::size_t> k;
  std::string inner, outer;
  std::string g, coef;
  std::string game_path;
  std::string mode = "enum";
  std::string scheme = "abs";
  std::string eps;
  std::string decomp_path;
  std::string profile;
  std::string out;
  std::size_t cap = lowrank::kDefaultEnumerationCap;
  std::size_t threads = 0;
};

int RunGen(const Options& o) {
  std::optional<BimatrixGame> game;
  if (o.family == "block") {
    if (o.inner.empty() || o.outer.empty()) {
      throw UsageError("gen block needs --inner and --outer");
    }
    game = lowrank::BlockGame(ParseFamily(o.inner), ParseFamily(o.outer));
  } else if (o.family == "poly") {
    if (o.g.empty() || o.coef.empty()) {
      throw UsageError("gen poly needs --g and --coef");
    }
    auto kernel =
        lowrank::PolyKernelMatrix(ParseList(o.g, "--g"), ParseList(o.coef, "--coef"));
    game.emplace(kernel, kernel);
  } else {
    if (o.d == 0) throw UsageError("--d must be at least 1");
    game = ParseFamily(o.family + ":" + std::to_string(o.d));
  }
  Emit(o.out, io::WriteGame(*game));
  (o.out.empty() ? std::cerr : std::cout) << "rank(A+B) = " << game->rank() << '\n';
  return kOk;
}

int RunSolve(const Options& o, const std::string& mode) {
  const BimatrixGame game = io::ParseGame(io::ReadFile(o.game_path));
  auto j = io::Envelope("solve");
  j["mode"] = mode;
  j["game"] = io::GameSummaryJson(game);
  if (mode == "zerosum") {
    const auto report = lowrank::SolveZeroSum(game);
    j["value"] = lowrank::ToString(report.payoff1);
    j["equilibria"] = nlohmann::ordered_json::array({io::ReportToJson(report)});
    EmitJson(o.out, j);
    return kOk;
  }
  if (mode != "enum" && mode != "components") {
    throw UsageError("unknown solve mode '" + mode + "'");
  }
  const auto set = lowrank::EnumerateEquilibria(game, o.cap);
  j["nondegenerate"] = set.nondegenerate;
  j["count"] = set.extreme_equilibria.size();
  auto list = nlohmann::ordered_json::array();
  for (const auto& r : set.extreme_equilibria) list.push_back(io::ReportToJson(r));
  j["equilibria"] = std::move(list);
  if (mode == "components") {
    j["component_count"] = set.component_count();
    j["components"] = set.components;
    if (game.is_square() && game.rank() + 1 <= game.rows()) {
      j["rank_component_bound"] =
          lowrank::RankComponentBound(game.rows(), game.rank()).get_str();
    }
  }
  EmitJson(o.out, j);
  return kOk;
}

int RunApprox(const Options& o) {
  const BimatrixGame game = io::ParseGame(io::ReadFile(o.game_path));
  const Rational eps = ParseEps(o.eps);
  lowrank::ApproxOptions options;
  options.threads = o.threads;
  lowrank::ApproxResult result;
  if (o.scheme == "abs") {
    result = lowrank::ApproxAbsolute(game, eps, options);
  } else if (o.scheme == "rel") {
    if (o.decomp_path.empty()) throw UsageError("--scheme rel needs --decomp");
    const auto decomposition = io::ParseDecomposition(io::ReadFile(o.decomp_path));
    result = lowrank::ApproxRelative(game, decomposition, eps, options);
  } else {
    throw UsageError("unknown scheme '" + o.scheme + "'");
  }
  auto j = io::Envelope("approx");
  j["scheme"] = o.scheme;
  j["game"] = io::GameSummaryJson(game);
  j["eps"] = lowrank::ToString(eps);
  j["bound"] = lowrank::ToString(result.bound);
  j["verified"] = result.report.loss <= result.bound;
  j["levels"] = result.levels;
  j["lps_solved"] = result.lps_solved;
  j["equilibria"] = nlohmann::ordered_json::array({io::ReportToJson(result.report)});
  EmitJson(o.out, j);
  return kOk;
}

int RunVerify(const Options& o) {
  const BimatrixGame game = io::ParseGame(io::ReadFile(o.game_path));
  if (o.profile.empty()) throw UsageError("verify needs --profile");
  const auto profile = io::ParseProfile(o.profile, game);
  const Rational loss = lowrank::Loss(game, profile);
  auto j = io::Envelope("verify");
  j["game"] = io::GameSummaryJson(game);
  j["x"] = io::VectorToJson(profile.x);
  j["y"] = io::VectorToJson(profile.y);
  j["loss"] = lowrank::ToString(loss);
  bool ok = false;
  if (o.eps.empty()) {
    ok = lowrank::IsExactEquilibrium(game, profile);
    j["kind"] = "exact";
  } else {
    const Rational eps = lowrank::ParseRational(o.eps);
    if (sgn(eps) < 0) throw UsageError("--eps must be nonnegative");
    ok = lowrank::IsEpsApproximate(game, profile, eps);
    j["kind"] = "eps_approximate";
    j["eps"] = lowrank::ToString(eps);
    j["bound"] = lowrank::ToString(eps * game.sum_norm());
  }
  j["verified"] = ok;
  EmitJson(o.out, j);
  return ok ? kOk : kVerifyFailed;
}

int RunBounds(const Options& o) {
  if (o.d == 0) throw UsageError("--d must be at least 1");
  auto j = io::Envelope("bounds");
  j["bounds"] = io::BoundsToJson(lowrank::ComputeBounds(o.d, o.k));
  EmitJson(o.out, j);
  return kOk;
}

int RunRankFact(const Options& o) {
  const BimatrixGame game = io::ParseGame(io::ReadFile(o.game_path));
  const auto f = lowrank::RankFactorize(game.sum());
  Emit(o.out, io::WriteDecomposition(f));
  (o.out.empty() ? std::cerr : std::cout)
      << "rank(A+B) = " << f.rank()
      << ", nonnegative = " << (f.nonnegative ? "true" : "false") << '\n';
  return kOk;
}

int RunPerturb(const Options& o) {
  const BimatrixGame game = io::ParseGame(io::ReadFile(o.game_path));
  if (!o.k) throw UsageError("perturb needs --k");
  const auto c_prime = lowrank::SvdTruncate(game.sum(), *o.k);
  const auto pert = lowrank::PerturbGame(game, c_prime);
  Emit(o.out, io::WriteGame(pert.perturbed));
  (o.out.empty() ? std::cerr : std::cout)
      << "eps = " << lowrank::ToString(pert.eps)
      << ", rank(A'+B') = " << pert.perturbed.rank() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct, solve and approximate low-rank bimatrix games"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Write a game from a built-in family");
  gen->add_option("family", o.family, "rank1 | aux | identity | block | poly")
      ->required();
  gen->add_option("--d", o.d, "Dimension");
  gen->add_option("--inner", o.inner, "Inner block, e.g. identity:2");
  gen->add_option("--outer", o.outer, "Outer block, e.g. rank1:3");
  gen->add_option("--g", o.g, "Kernel grid values g(1),...,g(d)");
  gen->add_option("--coef", o.coef, "Kernel polynomial coefficients a0,a1,...");
  gen->add_option("--out", o.out, "Output file (default stdout)");

  auto* solve = app.add_subcommand("solve", "Exact equilibria");
  solve->add_option("game", o.game_path)->required();
  solve->add_option("--mode", o.mode, "enum | zerosum | components");
  solve->add_option("--cap", o.cap, "Enumeration cap on m + n");
  solve->add_option("--out", o.out);

  auto* components = app.add_subcommand("components", "Count equilibrium components");
  components->add_option("game", o.game_path)->required();
  components->add_option("--cap", o.cap);
  components->add_option("--out", o.out);

  auto* approx = app.add_subcommand("approx", "Approximate equilibrium");
  approx->add_option("game", o.game_path)->required();
  approx->add_option("--scheme", o.scheme, "abs | rel");
  approx->add_option("--eps", o.eps, "Accuracy as a fraction, e.g. 1/10")->required();
  approx->add_option("--decomp", o.decomp_path, "Nonnegative decomposition file");
  approx->add_option("--threads", o.threads);
  approx->add_option("--out", o.out);

  auto* verify = app.add_subcommand("verify", "Check a profile");
  verify->add_option("game", o.game_path)->required();
  verify->add_option("--profile", o.profile, "x1,...,xm ; y1,...,yn")->required();
  verify->add_option("--eps", o.eps);
  verify->add_option("--out", o.out);

  auto* bounds = app.add_subcommand("bounds", "Counting bounds");
  bounds->add_option("--d", o.d)->required();
  bounds->add_option("--k", o.k);
  bounds->add_option("--out", o.out);

  auto* rankfact = app.add_subcommand("rankfact", "Exact factorization of A+B");
  rankfact->add_option("game", o.game_path)->required();
  rankfact->add_option("--out", o.out);

  auto* perturb = app.add_subcommand("perturb", "Low-rank perturbation of a game");
  perturb->add_option("game", o.game_path)->required();
  perturb->add_option("--k", o.k)->required();
  perturb->add_option("--out", o.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen) return RunGen(o);
    if (*solve) return RunSolve(o, o.mode);
    if (*components) return RunSolve(o, "components");
    if (*approx) return RunApprox(o);
    if (*verify) return RunVerify(o);
    if (*bounds) return RunBounds(o);
    if (*rankfact) return RunRankFact(o);
    if (*perturb) return RunPerturb(o);
  } catch (const lowrank::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const lowrank::GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << '\n';
    return kGuard;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
