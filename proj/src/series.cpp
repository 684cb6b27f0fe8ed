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

#include "apery/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace apery {

TruncatedSeries::TruncatedSeries(Rational center, std::vector<Rational> coefficients)
    : center_(std::move(center)), coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: order must be at least 1");
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, const Rational& center, int order) {
  if (order < 1) throw std::invalid_argument("TruncatedSeries: order must be at least 1");
  std::vector<Rational> coeffs(static_cast<std::size_t>(order));
  coeffs[0] = c;
  return {center, std::move(coeffs)};
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, const Rational& center,
                                                 int order) {
  if (order < 1) throw std::invalid_argument("TruncatedSeries: order must be at least 1");
  return {center, p.taylor_coefficients(center, order)};
}

TruncatedSeries TruncatedSeries::truncate(int order) const {
  if (order < 1) throw std::invalid_argument("TruncatedSeries: order must be at least 1");
  const auto keep = std::min(static_cast<std::size_t>(order), coeffs_.size());
  return {center_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(keep))};
}

TruncatedSeries TruncatedSeries::reciprocal() const {
  if (coeffs_[0].is_zero()) {
    throw PoleError("TruncatedSeries: reciprocal of a series with zero constant term");
  }
  const Rational inv0 = coeffs_[0].inverse();
  std::vector<Rational> out(coeffs_.size());
  out[0] = inv0;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    Rational acc;
    for (std::size_t i = 1; i <= k; ++i) acc += coeffs_[i] * out[k - i];
    out[k] = -acc * inv0;
  }
  return {center_, std::move(out)};
}

void TruncatedSeries::check_compatible(const TruncatedSeries& rhs) const {
  if (center_ != rhs.center_) throw std::invalid_argument("TruncatedSeries: centers differ");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  check_compatible(rhs);
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  check_compatible(rhs);
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& rhs) {
  check_compatible(rhs);
  const std::size_t order = std::min(coeffs_.size(), rhs.coeffs_.size());
  std::vector<Rational> out(order);
  for (std::size_t i = 0; i < order; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < order; ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TruncatedSeries TruncatedSeries::pow(unsigned exponent) const {
  TruncatedSeries result = constant(1, center_, order());
  for (unsigned i = 0; i < exponent; ++i) result *= *this;
  return result;
}

TruncatedSeries series_expand(const RationalFunction& f, const Rational& center, int order) {
  if (order < 1) throw std::invalid_argument("series_expand: order must be at least 1");
  const auto num = TruncatedSeries::from_polynomial(f.numerator(), center, order);
  const auto den = TruncatedSeries::from_polynomial(f.denominator(), center, order);
  if (den[0].is_zero()) {
    throw PoleError("series_expand: pole at center t = " + center.to_string());
  }
  return num / den;
}

}  // namespace apery
