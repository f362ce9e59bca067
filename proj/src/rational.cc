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

#include "lowrank/rational.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lowrank {
namespace {

bool IsIntegerLiteral(std::string_view text, bool allow_sign) {
  if (text.empty()) return false;
  std::size_t start = 0;
  if (allow_sign && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!IsIntegerLiteral(num, true) || !IsIntegerLiteral(den, false)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) +
                                "'");
  }
  if (num[0] == '+') num.remove_prefix(1);
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) +
                                "'");
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string ToString(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational RationalApproximation(double value, long max_denominator) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("cannot rationalize a non-finite value");
  }
  if (max_denominator < 1) {
    throw std::invalid_argument("max_denominator must be positive");
  }
  // A double is a dyadic rational, so the continued fraction is computed
  // exactly. Same scheme as Python's Fraction.limit_denominator.
  const Rational exact(value);
  if (exact.get_den() <= max_denominator) return exact;
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Integer n = exact.get_num(), d = exact.get_den();
  while (true) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    const Integer q2 = q0 + a * q1;
    if (q2 > max_denominator) break;
    const Integer p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const Integer r = n - a * d;
    n = d;
    d = r;
  }
  const Integer k = (Integer(max_denominator) - q0) / q1;
  Rational bound1(p0 + k * p1, q0 + k * q1);
  Rational bound2(p1, q1);
  bound1.canonicalize();
  bound2.canonicalize();
  return abs(bound2 - exact) <= abs(bound1 - exact) ? bound2 : bound1;
}

Rational Sum(const RationalVector& v) {
  Rational total = 0;
  for (const auto& e : v) total += e;
  return total;
}

Rational Dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dot product of vectors with different sizes");
  }
  Rational total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += a[i] * b[i];
  return total;
}

}  // namespace lowrank
