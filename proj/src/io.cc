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

#include "lowrank/io.h"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "lowrank/errors.h"

namespace lowrank::io {
namespace {

std::vector<std::string> Tokens(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

class TokenReader {
 public:
  explicit TokenReader(std::string_view text) : tokens_(Tokens(text)) {}

  std::size_t Count(const char* what) {
    const std::string& tok = Next(what);
    std::size_t pos = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tok.size() || tok.empty() || tok[0] == '-') {
      throw ParseError(std::string("expected a count for ") + what + ", got '" +
                       tok + "'");
    }
    return value;
  }

  Rational Value(const char* what) {
    const std::string& tok = Next(what);
    try {
      return ParseRational(tok);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string(what) + ": " + e.what());
    }
  }

  RationalMatrix Matrix(std::size_t rows, std::size_t cols, const char* what) {
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = Value(what);
    }
    return m;
  }

  void ExpectEnd() const {
    if (pos_ != tokens_.size()) {
      throw ParseError("unexpected trailing token '" + tokens_[pos_] + "'");
    }
  }

 private:
  const std::string& Next(const char* what) {
    if (pos_ >= tokens_.size()) {
      throw ParseError(std::string("unexpected end of input reading ") + what);
    }
    return tokens_[pos_++];
  }

  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

void WriteRow(std::ostringstream& out, const RationalVector& row) {
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j) out << ' ';
    out << ToString(row[j]);
  }
  out << '\n';
}

void WriteMatrix(std::ostringstream& out, const RationalMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) WriteRow(out, m.Row(i));
}

RationalVector ParseVector(std::string_view text) {
  RationalVector out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    std::string_view piece =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                           : comma - start);
    const auto first = piece.find_first_not_of(" \t\n");
    const auto last = piece.find_last_not_of(" \t\n");
    if (first == std::string_view::npos) {
      throw ParseError("empty entry in profile vector");
    }
    try {
      out.push_back(ParseRational(piece.substr(first, last - first + 1)));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::string WriteGame(const BimatrixGame& game) {
  std::ostringstream out;
  out << game.rows() << ' ' << game.cols() << '\n';
  WriteMatrix(out, game.a());
  out << '\n';
  WriteMatrix(out, game.b());
  return out.str();
}

BimatrixGame ParseGame(std::string_view text) {
  TokenReader reader(text);
  const std::size_t m = reader.Count("row count");
  const std::size_t n = reader.Count("column count");
  if (m == 0 || n == 0) throw ParseError("game dimensions must be positive");
  RationalMatrix a = reader.Matrix(m, n, "matrix A");
  RationalMatrix b = reader.Matrix(m, n, "matrix B");
  reader.ExpectEnd();
  return BimatrixGame(std::move(a), std::move(b));
}

std::string WriteDecomposition(const RankFactorization& f) {
  std::ostringstream out;
  out << f.rank() << ' ' << f.rows << ' ' << f.cols << '\n';
  for (std::size_t t = 0; t < f.rank(); ++t) {
    WriteRow(out, f.u[t]);
    WriteRow(out, f.v[t]);
  }
  return out.str();
}

RankFactorization ParseDecomposition(std::string_view text) {
  TokenReader reader(text);
  const std::size_t k = reader.Count("term count");
  RankFactorization f;
  f.rows = reader.Count("row count");
  f.cols = reader.Count("column count");
  for (std::size_t t = 0; t < k; ++t) {
    RationalVector u(f.rows), v(f.cols);
    for (auto& e : u) e = reader.Value("factor u");
    for (auto& e : v) e = reader.Value("factor v");
    f.u.push_back(std::move(u));
    f.v.push_back(std::move(v));
  }
  reader.ExpectEnd();
  f.nonnegative = IsNonnegative(f);
  return f;
}

MixedProfile ParseProfile(std::string_view text, const BimatrixGame& game) {
  std::string cleaned;
  for (char ch : text) {
    if (ch != '(' && ch != ')') cleaned.push_back(ch);
  }
  const auto semi = cleaned.find(';');
  if (semi == std::string::npos || cleaned.find(';', semi + 1) != std::string::npos) {
    throw ParseError("profile must be 'x1,...,xm ; y1,...,yn'");
  }
  MixedProfile p{ParseVector(std::string_view(cleaned).substr(0, semi)),
                 ParseVector(std::string_view(cleaned).substr(semi + 1))};
  ValidateProfile(game, p);
  return p;
}

nlohmann::ordered_json VectorToJson(const RationalVector& v) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& e : v) out.push_back(ToString(e));
  return out;
}

nlohmann::ordered_json ReportToJson(const EquilibriumReport& report) {
  nlohmann::ordered_json j;
  j["x"] = VectorToJson(report.profile.x);
  j["y"] = VectorToJson(report.profile.y);
  j["loss"] = ToString(report.loss);
  j["payoff1"] = ToString(report.payoff1);
  j["payoff2"] = ToString(report.payoff2);
  j["s"] = ToString(report.s);
  j["kind"] = ToString(report.kind);
  if (report.kind == ReportKind::kEpsApproximate) {
    j["eps"] = ToString(report.parameter);
  } else if (report.kind == ReportKind::kRelativeApproximate) {
    j["rho"] = ToString(report.parameter);
  }
  j["support1"] = report.support1;
  j["support2"] = report.support2;
  return j;
}

nlohmann::ordered_json GameSummaryJson(const BimatrixGame& game) {
  nlohmann::ordered_json j;
  j["rows"] = game.rows();
  j["cols"] = game.cols();
  j["rank"] = game.rank();
  j["sum_norm"] = ToString(game.sum_norm());
  return j;
}

nlohmann::ordered_json BoundsToJson(const BoundReport& bounds) {
  nlohmann::ordered_json j;
  j["d"] = bounds.d;
  if (bounds.k) j["k"] = *bounds.k;
  if (bounds.tau) j["tau"] = bounds.tau->get_str();
  j["keiding_bound"] = bounds.keiding.get_str();
  if (bounds.rank_component_bound) {
    j["rank_component_bound"] = bounds.rank_component_bound->get_str();
  }
  return j;
}

nlohmann::ordered_json Envelope(std::string_view command) {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = std::string(command);
  return j;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
}

}  // namespace lowrank::io
