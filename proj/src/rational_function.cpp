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

#include "apery/rational_function.hpp"

#include <cstdlib>

namespace apery {

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  const Polynomial g = gcd(num, den);
  if (g.degree() > 0) {
    num_ = num.exact_divide(g);
    den_ = den.exact_divide(g);
  } else {
    num_ = num;
    den_ = den;
  }
  const Rational scale = den_.leading().inverse();
  num_ *= scale;
  den_ *= scale;
}

RationalFunction RationalFunction::from_roots(const Rational& scalar,
                                              const std::map<Rational, int>& multiplicities) {
  if (scalar.is_zero()) return {};
  Polynomial num(scalar);
  Polynomial den(1);
  for (const auto& [root, mult] : multiplicities) {
    if (mult == 0) continue;
    const Polynomial factor = Polynomial::linear(-root, 1).pow(static_cast<unsigned>(std::abs(mult)));
    if (mult > 0) num *= factor;
    else den *= factor;
  }
  return {Canonical{}, std::move(num), std::move(den)};
}

Rational RationalFunction::evaluate(const Rational& x) const {
  const Rational d = den_.evaluate(x);
  if (d.is_zero()) throw PoleError("RationalFunction: evaluation at a pole t = " + x.to_string());
  return num_.evaluate(x) / d;
}

RationalFunction RationalFunction::operator-() const { return {Canonical{}, -num_, den_}; }

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) return *this = RationalFunction(num_ + rhs.num_, den_);
  const Polynomial g = gcd(den_, rhs.den_);
  const Polynomial l1 = den_.exact_divide(g);
  const Polynomial l2 = rhs.den_.exact_divide(g);
  return *this = RationalFunction(num_ * l2 + rhs.num_ * l1, den_ * l2);
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) { return *this += -rhs; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = RationalFunction{};
  // Cross-cancel first; the product of the reduced parts is already coprime.
  const Polynomial g1 = gcd(num_, rhs.den_);
  const Polynomial g2 = gcd(rhs.num_, den_);
  Polynomial num = num_.exact_divide(g1) * rhs.num_.exact_divide(g2);
  Polynomial den = den_.exact_divide(g2) * rhs.den_.exact_divide(g1);
  const Rational scale = den.leading().inverse();
  num *= scale;
  den *= scale;
  num_ = std::move(num);
  den_ = std::move(den);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  if (rhs.is_zero()) throw std::domain_error("RationalFunction: division by zero");
  const Rational scale = rhs.num_.leading().inverse();
  return *this *= RationalFunction(Canonical{}, rhs.den_ * scale, rhs.num_ * scale);
}

RationalFunction RationalFunction::pow(unsigned exponent) const {
  // Powers of coprime polynomials stay coprime.
  return {Canonical{}, num_.pow(exponent), den_.pow(exponent)};
}

RationalFunction RationalFunction::derivative() const {
  return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
}

RationalFunction RationalFunction::shift(const Rational& c) const {
  return {Canonical{}, num_.shift(c), den_.shift(c)};
}

std::string RationalFunction::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

bool ratfun_equal(const RationalFunction& f, const RationalFunction& g) { return f == g; }

bool sum_is_zero(std::span<const RationalFunction> terms) {
  Polynomial common(1);
  for (const auto& term : terms) {
    if (term.is_zero()) continue;
    common *= term.denominator().exact_divide(gcd(common, term.denominator()));
  }
  Polynomial total;
  for (const auto& term : terms) {
    if (term.is_zero()) continue;
    total += term.numerator() * common.exact_divide(term.denominator());
  }
  return total.is_zero();
}

}  // namespace apery
