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

#include "apery/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <vector>

namespace apery {

namespace {

constexpr double kLog2Of10 = 3.32192809488736234787;

void require_digits(int digits) {
  if (digits < 1) throw std::invalid_argument("BigFloat: precision must be at least 1 digit");
}

std::string format(const char* fmt, int width, mpfr_srcptr value) {
  const int len = mpfr_snprintf(nullptr, 0, fmt, width, value);
  std::vector<char> buf(static_cast<std::size_t>(len) + 1);
  mpfr_snprintf(buf.data(), buf.size(), fmt, width, value);
  return {buf.data(), static_cast<std::size_t>(len)};
}

}  // namespace

mpfr_prec_t BigFloat::bits_for(int digits) {
  require_digits(digits);
  return static_cast<mpfr_prec_t>(std::ceil(digits * kLog2Of10));
}

BigFloat::BigFloat(int digits) : digits_(digits) {
  mpfr_init2(value_, bits_for(digits));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, int digits) : BigFloat(digits) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, int digits) : BigFloat(digits) {
  mpfr_set_q(value_, value.raw().get_mpq_t(), MPFR_RNDN);
}

BigFloat BigFloat::parse(std::string_view text, int digits) {
  BigFloat r(digits);
  const std::string s(text);
  char* end = nullptr;
  mpfr_strtofr(r.value_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw std::invalid_argument("BigFloat::parse: malformed number '" + s + "'");
  }
  return r;
}

BigFloat BigFloat::pi(int digits) {
  BigFloat r(digits);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

BigFloat::BigFloat(const BigFloat& other) : digits_(other.digits_) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept : digits_(other.digits_) {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    digits_ = other.digits_;
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  std::swap(digits_, other.digits_);
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

void BigFloat::promote(int digits) {
  if (digits <= digits_) return;
  mpfr_prec_round(value_, bits_for(digits), MPFR_RNDN);
  digits_ = digits;
}

long BigFloat::decimal_exponent() const {
  if (is_zero() || !is_finite()) throw std::domain_error("BigFloat: exponent of zero or non-finite");
  // floor(log10|x|), corrected for values sitting next to a power of ten.
  BigFloat l(std::max(digits_, 20));
  mpfr_abs(l.value_, value_, MPFR_RNDN);
  mpfr_log10(l.value_, l.value_, MPFR_RNDN);
  long e = mpfr_get_si(l.value_, MPFR_RNDD);
  const BigFloat a = abs(*this);
  if (a < pow10(e, digits_)) --e;
  else if (a >= pow10(e + 1, digits_)) ++e;
  return e;
}

std::string BigFloat::to_fixed(int decimals) const {
  std::string s = format("%.*RNf", decimals, value_);
  // "-0.000" is reported without a sign.
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string BigFloat::to_scientific(int significant) const {
  return format("%.*RNe", std::max(significant - 1, 0), value_);
}

BigFloat BigFloat::operator-() const {
  BigFloat r = *this;
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  promote(rhs.digits_);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  promote(rhs.digits_);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  promote(rhs.digits_);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  if (rhs.is_zero()) throw std::domain_error("BigFloat: division by zero");
  promote(rhs.digits_);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(long rhs) {
  if (rhs == 0) throw std::domain_error("BigFloat: division by zero");
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.value_, b.value_) != 0) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

BigFloat abs(const BigFloat& x) {
  BigFloat r = x;
  mpfr_abs(r.value_, r.value_, MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  if (x.sign() < 0) throw std::domain_error("BigFloat: sqrt of a negative number");
  BigFloat r = x;
  mpfr_sqrt(r.value_, r.value_, MPFR_RNDN);
  return r;
}

BigFloat log(const BigFloat& x) {
  if (x.sign() <= 0) throw std::domain_error("BigFloat: log of a non-positive number");
  BigFloat r = x;
  mpfr_log(r.value_, r.value_, MPFR_RNDN);
  return r;
}

BigFloat exp(const BigFloat& x) {
  BigFloat r = x;
  mpfr_exp(r.value_, r.value_, MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& x, long exponent) {
  BigFloat r = x;
  mpfr_pow_si(r.value_, r.value_, exponent, MPFR_RNDN);
  return r;
}

std::ostream& operator<<(std::ostream& os, const BigFloat& x) {
  return os << x.to_scientific(std::min(x.digits(), 20));
}

BigFloat pow10(long exponent, int digits) {
  BigFloat r(10, digits);
  return pow(r, exponent);
}

}  // namespace apery
