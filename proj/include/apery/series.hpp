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

#ifndef APERY_SERIES_HPP
#define APERY_SERIES_HPP

#include <span>
#include <vector>

#include "apery/polynomial.hpp"
#include "apery/rational_function.hpp"

namespace apery {

/// Power series in (t - center) truncated modulo (t - center)^order.
///
/// Coefficient i is the i-th Taylor coefficient, f^(i)(center) / i!.
/// Binary operations require equal centers; the result keeps the smaller order.
class TruncatedSeries {
 public:
  TruncatedSeries(Rational center, std::vector<Rational> coefficients);
  /// The constant c at `center`, to `order` terms.
  static TruncatedSeries constant(const Rational& c, const Rational& center, int order);
  static TruncatedSeries from_polynomial(const Polynomial& p, const Rational& center, int order);

  const Rational& center() const { return center_; }
  int order() const { return static_cast<int>(coeffs_.size()); }
  std::span<const Rational> coefficients() const { return coeffs_; }
  const Rational& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }

  /// Keeps the first `order` coefficients.
  TruncatedSeries truncate(int order) const;
  /// Throws PoleError when the constant term is zero.
  TruncatedSeries reciprocal() const;

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const Rational& c);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a * b.reciprocal();
  }
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  TruncatedSeries pow(unsigned exponent) const;

 private:
  void check_compatible(const TruncatedSeries& rhs) const;

  Rational center_;
  std::vector<Rational> coeffs_;
};

/// Taylor expansion of f at `center` through (t - center)^(order - 1).
/// Throws PoleError if center is a pole of f and std::invalid_argument if order < 1.
TruncatedSeries series_expand(const RationalFunction& f, const Rational& center, int order);

}  // namespace apery

#endif  // APERY_SERIES_HPP
