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

#ifndef APERY_POLYNOMIAL_HPP
#define APERY_POLYNOMIAL_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "apery/rational.hpp"

namespace apery {

/// Dense univariate polynomial over the rationals.
///
/// Coefficient i multiplies t^i. The coefficient vector never ends in a zero,
/// so the zero polynomial is the empty vector and has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(int constant) : Polynomial(Rational(constant)) {}  // NOLINT

  /// c * t^degree.
  static Polynomial monomial(const Rational& c, int degree);
  /// a + b*t.
  static Polynomial linear(const Rational& a, const Rational& b);
  /// The identity polynomial t.
  static Polynomial t() { return linear(0, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of t^i; zero outside the stored range.
  Rational coefficient(int i) const;
  std::span<const Rational> coefficients() const { return coeffs_; }
  /// Throws std::domain_error for the zero polynomial.
  const Rational& leading() const;

  Rational operator()(const Rational& x) const { return evaluate(x); }
  Rational evaluate(const Rational& x) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial pow(unsigned exponent) const;
  Polynomial derivative() const;
  /// p(t + c).
  Polynomial shift(const Rational& c) const;
  /// Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;

  /// Euclidean division; throws std::domain_error when divisor is zero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  /// Quotient of an exact division; throws std::domain_error on a nonzero remainder.
  Polynomial exact_divide(const Polynomial& divisor) const;

  /// Taylor coefficients at `center`: coefficient i of p(center + h), for i < count.
  std::vector<Rational> taylor_coefficients(const Rational& center, int count) const;

  std::string to_string(char var = 't') const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Monic gcd over Q (zero iff both inputs are zero).
///
/// Uses a multi-modular algorithm whose candidate is confirmed by exact trial
/// division, so the result always equals gcd_euclid.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Monic gcd by the Euclidean algorithm over Q, normalizing every remainder.
Polynomial gcd_euclid(Polynomial a, Polynomial b);

/// Product of (t - root) over all roots.
Polynomial from_roots(std::span<const Rational> roots);

}  // namespace apery

#endif  // APERY_POLYNOMIAL_HPP
