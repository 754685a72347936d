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

#include "core/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "core/error.hpp"

namespace dirricci {

std::string rational_to_string(const Rational& value) {
  std::ostringstream os;
  os << value;  // boost prints "p/q" and suppresses "/1"
  return os.str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  std::string_view num = rest;
  std::string_view den = "1";
  if (auto slash = rest.find('/'); slash != std::string_view::npos) {
    num = rest.substr(0, slash);
    den = rest.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::kParseError,
                "not a rational \"p/q\": '" + std::string(text) + "'");
  }
  BigInt p{std::string(num)};
  BigInt q{std::string(den)};
  if (q == 0) {
    throw Error(ErrorCode::kParseError,
                "zero denominator in '" + std::string(text) + "'");
  }
  Rational value(p, q);
  return negative ? Rational(-value) : value;
}

double rational_to_double(const Rational& value) {
  return static_cast<double>(value);
}

int Scalar::sign() const {
  if (a_ != 0) return a_ > 0 ? 1 : -1;
  if (b_ != 0) return b_ > 0 ? 1 : -1;
  return 0;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  // (a1 + b1 e)(a2 + b2 e) = a1 a2 + (a1 b2 + b1 a2) e, with e^2 = 0.
  Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ *= rhs.a_;
  b_ = std::move(b);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.a_ == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "scalar division requires a nonzero constant part");
  }
  Rational qa = a_ / rhs.a_;
  Rational qb = (b_ - qa * rhs.b_) / rhs.a_;
  a_ = std::move(qa);
  b_ = std::move(qb);
  return *this;
}

std::strong_ordering operator<=>(const Scalar& lhs, const Scalar& rhs) {
  if (lhs.a_ != rhs.a_) {
    return lhs.a_ < rhs.a_ ? std::strong_ordering::less
                           : std::strong_ordering::greater;
  }
  if (lhs.b_ != rhs.b_) {
    return lhs.b_ < rhs.b_ ? std::strong_ordering::less
                           : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Scalar::str() const {
  if (is_rational()) return rational_to_string(a_);
  std::string out = rational_to_string(a_);
  if (b_ > 0) {
    out += " + " + rational_to_string(b_) + " e";
  } else {
    out += " - " + rational_to_string(Rational(-b_)) + " e";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& value) {
  return os << value.str();
}

}  // namespace dirricci
