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

#ifndef LOWRANK_RATIONAL_H_
#define LOWRANK_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace lowrank {

// Arbitrary-precision rational, always canonical (lowest terms, positive
// denominator). Every quantity in the library is exact.
using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text
// or a zero denominator.
Rational ParseRational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string ToString(const Rational& value);

// Nearest rational with denominator <= max_denominator, by continued
// fractions (best rational approximation).
Rational RationalApproximation(double value, long max_denominator);

Rational Sum(const RationalVector& v);
Rational Dot(const RationalVector& a, const RationalVector& b);

}  // namespace lowrank

#endif  // LOWRANK_RATIONAL_H_
