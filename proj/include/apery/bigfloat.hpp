// Copyright 2026 The Apery Authors
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

#ifndef APERY_BIGFLOAT_HPP
#define APERY_BIGFLOAT_HPP

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <mpfr.h>

#include "apery/rational.hpp"

namespace apery {

/// A requested accuracy cannot be certified at the available precision.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binary floating-point number with a working precision stated in decimal
/// digits (MPFR underneath, round-to-nearest everywhere).
///
/// The binary precision is exactly ceil(digits * log2(10)) bits. Results of
/// binary operations carry the larger of the two operand precisions.
class BigFloat {
 public:
  explicit BigFloat(int digits);
  BigFloat(long value, int digits);
  BigFloat(const Rational& value, int digits);
  /// Parses a decimal literal such as "-1.25e-3"; throws std::invalid_argument.
  static BigFloat parse(std::string_view text, int digits);
  /// pi from MPFR's built-in routine.
  static BigFloat pi(int digits);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  int digits() const { return digits_; }
  static mpfr_prec_t bits_for(int digits);

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  /// Base-10 exponent e with 10^e <= |x| < 10^(e+1); throws on zero.
  long decimal_exponent() const;

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Fixed notation with `decimals` digits after the point, rounded to nearest.
  std::string to_fixed(int decimals) const;
  /// Scientific notation with `significant` digits.
  std::string to_scientific(int significant = 6) const;

  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);
  BigFloat& operator*=(long rhs);
  BigFloat& operator/=(long rhs);

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  friend BigFloat operator*(BigFloat a, long b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, long b) { return a /= b; }

  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

  friend BigFloat abs(const BigFloat& x);
  friend BigFloat sqrt(const BigFloat& x);
  friend BigFloat log(const BigFloat& x);
  friend BigFloat exp(const BigFloat& x);
  friend BigFloat pow(const BigFloat& x, long exponent);

  mpfr_srcptr raw() const { return value_; }

 private:
  void promote(int digits);

  int digits_;
  mpfr_t value_;
};

std::ostream& operator<<(std::ostream& os, const BigFloat& x);

/// 10^exponent at the given precision.
BigFloat pow10(long exponent, int digits);

}  // namespace apery

#endif  // APERY_BIGFLOAT_HPP
