// Copyright 2026 The dirricci Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DIRRICCI_CORE_SCALAR_HPP
#define DIRRICCI_CORE_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace dirricci {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" with "/1" suppressed, e.g. "0", "-2/3".
std::string rational_to_string(const Rational& value);

// Strict inverse of rational_to_string; accepts "p" and "p/q" with decimal
// digits and an optional leading '-'. Throws Error(kParseError) otherwise.
Rational parse_rational(std::string_view text);

// Approximate decimal rendering used only for convenience columns.
double rational_to_double(const Rational& value);

// Element a + b*eps of the ordered ring Q[eps]/(eps^2), where eps is a
// positive infinitesimal: the order is lexicographic on (a, b). Used to
// evaluate the alpha -> 1 limit with a single exact transport solve at
// alpha = 1 - eps. Division is defined only when the divisor's constant
// part is nonzero; the transport solver never divides.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int value) : a_(value) {}  // NOLINT: intentionally implicit
  Scalar(Rational constant) : a_(std::move(constant)) {}  // NOLINT
  Scalar(Rational constant, Rational epsilon)
      : a_(std::move(constant)), b_(std::move(epsilon)) {}

  const Rational& constant_part() const { return a_; }
  const Rational& epsilon_part() const { return b_; }

  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  // -1, 0, +1 with respect to the lexicographic order.
  int sign() const;

  Scalar operator-() const { return Scalar(-a_, -b_); }
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);  // truncates eps^2
  Scalar& operator/=(const Scalar& rhs);  // requires rhs.constant_part() != 0

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& lhs, const Scalar& rhs) {
    return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
  }
  friend std::strong_ordering operator<=>(const Scalar& lhs,
                                          const Scalar& rhs);

  // "p/q" when rational, else "p/q + r/s e" ("-" when the eps part is
  // negative), e.g. "1 - 1/4 e".
  std::string str() const;

 private:
  Rational a_;  // constant part
  Rational b_;  // eps coefficient
};

std::ostream& operator<<(std::ostream& os, const Scalar& value);

inline Scalar one_minus_epsilon() { return Scalar(1, -1); }

}  // namespace dirricci

#endif  // DIRRICCI_CORE_SCALAR_HPP
