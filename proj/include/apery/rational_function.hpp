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

#ifndef APERY_RATIONAL_FUNCTION_HPP
#define APERY_RATIONAL_FUNCTION_HPP

#include <map>
#include <stdexcept>
#include <string>

#include "apery/polynomial.hpp"

namespace apery {

/// Raised when a rational function is evaluated or expanded at one of its poles.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Quotient num/den of polynomials over Q in canonical form:
/// gcd(num, den) = 1 and den is monic. Zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const Polynomial& p) : num_(p), den_(1) {}  // NOLINT
  RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(int c) : RationalFunction(Rational(c)) {}  // NOLINT
  /// Reduces to canonical form; throws std::domain_error when den is zero.
  RationalFunction(const Polynomial& num, const Polynomial& den);

  /// scalar * prod (t - root)^multiplicity. Negative multiplicities place the
  /// factor in the denominator. The result is canonical without a gcd.
  static RationalFunction from_roots(const Rational& scalar,
                                     const std::map<Rational, int>& multiplicities);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// deg(num) - deg(den); meaningless for zero.
  int degree_gap() const { return num_.degree() - den_.degree(); }

  /// Throws PoleError when x is a pole.
  Rational evaluate(const Rational& x) const;
  Rational operator()(const Rational& x) const { return evaluate(x); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  RationalFunction pow(unsigned exponent) const;
  RationalFunction derivative() const;
  /// f(t + c).
  RationalFunction shift(const Rational& c) const;

  std::string to_string() const;

 private:
  struct Canonical {};
  RationalFunction(Canonical, Polynomial num, Polynomial den)
      : num_(std::move(num)), den_(std::move(den)) {}

  Polynomial num_;
  Polynomial den_;
};

/// Identity test: true iff f and g have the same canonical form.
bool ratfun_equal(const RationalFunction& f, const RationalFunction& g);

/// Whether a sum of rational functions vanishes identically. All terms are
/// brought over one common denominator and the combined numerator is compared
/// with the zero polynomial.
bool sum_is_zero(std::span<const RationalFunction> terms);

}  // namespace apery

#endif  // APERY_RATIONAL_FUNCTION_HPP
