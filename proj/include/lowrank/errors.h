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

#ifndef LOWRANK_ERRORS_H_
#define LOWRANK_ERRORS_H_

#include <stdexcept>

namespace lowrank {

// A size or rank guard refused the input (enumeration cap, rank guard).
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed game, decomposition or profile text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lowrank

#endif  // LOWRANK_ERRORS_H_
