// Copyright 2026 The dicolor Authors
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

#ifndef DICOLOR_RATIONAL_HPP_
#define DICOLOR_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <string>

#include "dicolor/error.hpp"

namespace dicolor {

// Exact fraction over int64 used for forward ratios and circulation
// weights. Always normalized (gcd 1, positive denominator). Intermediate
// products are computed in 128 bits; a result that does not fit in int64
// throws InternalError rather than wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT
  Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  Rational& operator+=(const Rational& o) {
    return *this = from_wide(wide(num_) * o.den_ + wide(o.num_) * den_,
                             wide(den_) * o.den_);
  }
  Rational& operator-=(const Rational& o) {
    return *this = from_wide(wide(num_) * o.den_ - wide(o.num_) * den_,
                             wide(den_) * o.den_);
  }
  Rational& operator*=(const Rational& o) {
    return *this = from_wide(wide(num_) * o.num_, wide(den_) * o.den_);
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw InvalidArgument("division by zero");
    return *this = from_wide(wide(num_) * o.den_, wide(den_) * o.num_);
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(0) - a; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    return wide(a.num_) * b.den_ <=> wide(b.num_) * a.den_;
  }

 private:
  __extension__ using Wide = __int128;

  static constexpr Wide wide(std::int64_t x) { return x; }

  static Wide gcd_wide(Wide a, Wide b) {
    if (a < 0) a = -a;
    while (b != 0) {
      const Wide t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from_wide(Wide num, Wide den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const Wide g = gcd_wide(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr Wide kMax = INT64_MAX;
    constexpr Wide kMin = INT64_MIN;
    if (num > kMax || num < kMin || den > kMax) {
      throw InternalError("rational overflow");
    }
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }

  void assign(std::int64_t num, std::int64_t den) {
    if (den == 0) throw InvalidArgument("zero denominator");
    *this = from_wide(num, den);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Accepts "p", "-p" and "p/q". Throws ParseError.
Rational parse_rational(const std::string& text);

}  // namespace dicolor

#endif  // DICOLOR_RATIONAL_HPP_
