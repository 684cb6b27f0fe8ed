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

#include <doctest.h>

#include <string>

#include "apery/analytic.hpp"
#include "apery/sequences.hpp"

using namespace apery;

namespace {

Rational q(long p, long d = 1) { return Rational(Integer(p), Integer(d)); }

// 70 significant digits from mpmath.
const char* const kCatalan = "0.915965594177219015054603514932384110774149374281672134266498119621763";
const char* const kZeta4 = "1.082323233711138191516003696541167902774750951918726907682976215444121";
// mpmath two-dimensional quadrature of the untransformed integral.
constexpr double kIntegral0 = 7.3277247534177521204;
constexpr double kIntegral1 = 0.17648168151893378924;
constexpr double kIntegral2 = 0.0090977165157814851936;

BigFloat linear_form(Family f, long n, int working) {
  const auto p = sequence_pair(f, n);
  const BigFloat c = f == Family::catalan ? reference_catalan(working) : reference_zeta4(working);
  return BigFloat(p.u, working) * c - BigFloat(p.v, working);
}

}  // namespace

TEST_CASE("reference constants") {
  CHECK(reference_catalan(10).to_fixed(10) == "0.9159655942");
  CHECK(reference_catalan(1).to_fixed(1) == "0.9");
  CHECK(reference_zeta4(10).to_fixed(10) == "1.0823232337");
  CHECK(abs(reference_catalan(55) - BigFloat::parse(kCatalan, 70)) < pow10(-55, 70));
  CHECK(abs(reference_zeta4(55) - BigFloat::parse(kZeta4, 70)) < pow10(-55, 70));
  CHECK(abs(reference_zeta4(40) - pow(BigFloat::pi(60), 4) / 90) < pow10(-40, 60));
}

TEST_CASE("reference zeta(4) against a direct sum with tail bound") {
  // sum_{k<=N} k^-4 + 1/(3 N^3) - 1/(2 N^4), error below 1/(3 N^5)
  const int working = 30;
  const long N = 200;
  BigFloat sum(working);
  for (long k = 1; k <= N; ++k) sum += BigFloat(1, working) / k / k / k / k;
  sum += BigFloat(1, working) / (3 * N * N * N) - BigFloat(1, working) / (2 * N * N * N * N);
  CHECK(abs(sum - reference_zeta4(10)) < pow10(-10, working));
}

TEST_CASE("reference constants agree with the recurrence ratio") {
  const auto c = catalan_pair(20);
  CHECK(abs(BigFloat(c.v / c.u, 60) - reference_catalan(45)) < pow10(-40, 60));
  const auto z = zeta4_pair(20);
  CHECK(abs(BigFloat(z.v / z.u, 80) - reference_zeta4(60)) < pow10(-60, 80));
}

TEST_CASE("digits of Catalan's constant") {
  const DigitsResult r = catalan_digits(20);
  CHECK(r.value == "0.91596559417721901505");
  CHECK(r.error_bound < pow10(-20, 40));
  CHECK(catalan_digits(1).value == "0.9");
  const auto ten = catalan_pair(10);
  CHECK(abs(BigFloat(ten.v / ten.u, 60) - BigFloat::parse(kCatalan, 60)) < pow10(-20, 60));
  for (int d : {10, 50, 100, 500}) {
    const DigitsResult x = catalan_digits(d);
    CHECK(x.value == reference_catalan(d).to_fixed(d));
  }
}

TEST_CASE("digits of zeta(4)") {
  const DigitsResult r = zeta4_digits(25);
  CHECK(r.n_used <= 13);
  CHECK(r.value == BigFloat::parse(kZeta4, 60).to_fixed(25));
  for (int d : {10, 50, 100}) CHECK(zeta4_digits(d).value == reference_zeta4(d).to_fixed(d));
  CHECK_THROWS_AS(zeta4_digits(0), std::invalid_argument);
}

TEST_CASE("continued fractions") {
  CHECK(cf_convergent(Family::catalan, 1).value == q(13, 14));
  CHECK(cf_convergent(Family::zeta4, 1).value == q(13, 12));
  CHECK(cf_convergent(Family::catalan, 2).value == q(10699, 11682));
  for (Family f : {Family::catalan, Family::zeta4}) {
    for (long n = 1; n <= 50; ++n) {
      const auto p = sequence_pair(f, n);
      CHECK(cf_convergent(f, n).value == p.v / p.u);
    }
  }
  CHECK_THROWS_AS(cf_convergent(Family::catalan, 0), std::invalid_argument);
}

TEST_CASE("double integral against an independent quadrature") {
  CHECK(std::abs(beukers_integral(0, 8).to_double() - kIntegral0) < 1e-8);
  CHECK(std::abs(beukers_integral(1, 8).to_double() - kIntegral1) < 1e-8);
  CHECK(std::abs(beukers_integral(2, 8).to_double() - kIntegral2) < 1e-8);
  CHECK(std::abs(beukers_integral(0, 14).to_double() - kIntegral0) < 1e-13);
}

TEST_CASE("double integral is a fixed multiple of the linear form") {
  // F_n = 8 (u_n G - v_n) also equals (-1)^n times the integral.
  for (long n = 0; n <= 5; ++n) {
    const BigFloat form = linear_form(Family::catalan, n, 30);
    const BigFloat ratio = beukers_integral(n, 10) / form;
    CHECK(std::abs(ratio.to_double() - (n % 2 == 0 ? 8.0 : -8.0)) < 1e-6);
  }
}

TEST_CASE("double integral errors") {
  CHECK_THROWS_AS(beukers_integral(-1, 8), std::invalid_argument);
  CHECK_THROWS_AS(beukers_integral(1, 16), PrecisionError);
}

TEST_CASE("zeta(4) series") {
  CHECK(std::abs(zeta4_series(0, 8).to_double() - 1.08232323) < 1e-8);
  CHECK(std::abs(zeta4_series(1, 6).to_double() + 0.012121195466) < 1e-6);
  for (long n = 0; n <= 4; ++n) {
    const BigFloat form = linear_form(Family::zeta4, n, 30);
    const BigFloat series = zeta4_series(n, 6);
    CHECK(series.sign() == form.sign());
    if (n <= 3) CHECK(abs(series - form) < pow10(-5, 30));
  }
  CHECK_THROWS_AS(zeta4_series(1, 30), PrecisionError);
  CHECK_THROWS_AS(zeta4_series(-1, 6), std::invalid_argument);
}

TEST_CASE("characteristic roots") {
  const int w = 60;
  const BigFloat phi = (BigFloat(1, w) + sqrt(BigFloat(5, w))) / 2;
  const BigFloat l1 = pow(phi, 5);
  CHECK(abs(l1 * l1 - l1 * 11 - BigFloat(1, w)) < pow10(-50, w));
  const BigFloat l2 = pow(BigFloat(3, w) + sqrt(BigFloat(12, w)), 3);
  CHECK(abs(l2 * l2 - l2 * 270 - BigFloat(27, w)) < pow10(-45, w));
  CHECK(std::abs(log(l1).to_double() - 2.40605912) < 1e-8);
  CHECK(std::abs(log(l2).to_double() - 5.59879212) < 1e-8);
  CHECK(std::abs(log(BigFloat(27, w) / l2).to_double() + 2.30295525) < 1e-8);
}
