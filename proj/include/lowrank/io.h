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

#ifndef LOWRANK_IO_H_
#define LOWRANK_IO_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "lowrank/approx.h"
#include "lowrank/bounds.h"
#include "lowrank/enumeration.h"
#include "lowrank/game.h"
#include "lowrank/matrix.h"

namespace lowrank::io {

inline constexpr int kReportSchemaVersion = 1;

// Game file:
//
//   m n
//   <m rows of A, n entries each>
//   <blank line>
//   <m rows of B>
//
// Entries are integers or "p/q". Parsing is whitespace-insensitive.
std::string WriteGame(const BimatrixGame& game);
BimatrixGame ParseGame(std::string_view text);

// Decomposition file: "k m n", then for each term a line with the m entries
// of u and a line with the n entries of v.
std::string WriteDecomposition(const RankFactorization& f);
RankFactorization ParseDecomposition(std::string_view text);

// "x1,...,xm ; y1,...,yn" with optional surrounding parentheses. Throws
// ParseError on malformed text and std::invalid_argument if the vectors are
// not mixed strategies of `game`.
MixedProfile ParseProfile(std::string_view text, const BimatrixGame& game);

nlohmann::ordered_json VectorToJson(const RationalVector& v);
nlohmann::ordered_json ReportToJson(const EquilibriumReport& report);
nlohmann::ordered_json GameSummaryJson(const BimatrixGame& game);
nlohmann::ordered_json BoundsToJson(const BoundReport& bounds);

// Wraps a body in the common envelope {"schema_version", "command", ...}.
nlohmann::ordered_json Envelope(std::string_view command);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

}  // namespace lowrank::io

#endif  // LOWRANK_IO_H_
