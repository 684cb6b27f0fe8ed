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

#include "apery/certificate.hpp"
#include "apery/hypergeom.hpp"
#include "apery/sequences.hpp"

using namespace apery;

namespace {

Rational q(long p, long d = 1) { return Rational(Integer(p), Integer(d)); }

Polynomial poly(std::initializer_list<long> low_to_high) {
  std::vector<Rational> c;
  for (long x : low_to_high) c.emplace_back(x);
  return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("numerator coefficients at n = 1, expanded by hand") {
  const auto c = certificate_numerator_coefficients(1);
  CHECK(c[4] == 520);  // 8 * 1 * 65
  CHECK(c[3] == 2 * (5440 + 7104 + 912 - 1088 + 76 + 68 + 7));
  CHECK(c[2] == 44800 + 65600 + 17568 - 7056 - 1088 + 372 + 146 - 1);
  CHECK(c[1] == 3 * (34880 + 39328 - 2176 - 8416 + 964 + 154 + 58 - 13));
  CHECK(c[0] == 9 * (4720 + 6192 + 816 - 864 + 69 + 13));
}

TEST_CASE("numerator coefficients at n = 0 and n = 2") {
  const auto z = certificate_numerator_coefficients(0);
  CHECK(z[4] == 0);
  CHECK(z[3] == 14);
  CHECK(z[2] == -1);
  CHECK(z[1] == -13);
  CHECK(z[0] == 0);
  const auto c = certificate_numerator_coefficients(2);
  CHECK(c[4] == Integer(16 * 9 * (80 + 64 + 13)));
  CHECK(c[0] == Integer(2 * 3 * 25 * (4720 * 32 + 6192 * 16 + 816 * 8 - 864 * 4 + 69 * 2 + 13)));
}

TEST_CASE("certificate shape") {
  const Certificate c1 = build_certificate(1);
  CHECK(c1.n == 1);
  // At n = 1 a common factor cancels, so compare s times the printed denominator.
  const auto c1n = certificate_numerator_coefficients(1);
  std::vector<Rational> num1(c1n.begin(), c1n.end());
  const Polynomial den1 = poly({2, 2}) * poly({1, 1}) * poly({2, 1}) * q(2);
  CHECK(ratfun_equal(c1.s * RationalFunction(den1), RationalFunction(Polynomial(num1))));
  const Certificate c2 = build_certificate(2);
  const Polynomial den = poly({3, 2}) * poly({3, 1}) * poly({4, 1}) * q(2);
  const auto c = certificate_numerator_coefficients(2);
  std::vector<Rational> num;
  for (const auto& x : c) num.emplace_back(x);
  CHECK(ratfun_equal(c2.s * RationalFunction(den), RationalFunction(Polynomial(num))));
  CHECK(c2.s.denominator() == den.monic());
  CHECK_THROWS_AS(build_certificate(0), std::domain_error);
}

TEST_CASE("S_n(0) = 0") {
  for (long n = 1; n <= 30; ++n) CHECK(build_certificate(n).S.evaluate(q(0)).is_zero());
}

TEST_CASE("telescoping identity holds exactly") {
  for (long n = 1; n <= 25; ++n) CHECK(verify_telescoping(n));
  CHECK_THROWS_AS(verify_telescoping(0), std::domain_error);
}

TEST_CASE("a perturbed certificate does not telescope") {
  const long n = 3;
  const RecurrenceStep step = recurrence_coefficients(Family::catalan, n);
  const Certificate cert = build_certificate(n);
  const RationalFunction bad = cert.S + kernel(n) * RationalFunction(q(1, 1000));
  const std::vector<RationalFunction> terms{
      RationalFunction(step.lead) * kernel(n + 1), RationalFunction(-step.middle) * kernel(n),
      RationalFunction(-step.trail) * kernel(n - 1), bad.shift(1), bad};
  CHECK_FALSE(sum_is_zero(terms));
}

TEST_CASE("exact quadruples obey the recurrence") {
  for (long n = 1; n <= 20; ++n) {
    const RecurrenceStep s = recurrence_coefficients(Family::catalan, n);
    const auto a = coefficient_quadruple(n - 1), b = coefficient_quadruple(n), c = coefficient_quadruple(n + 1);
    CHECK(s.lead * c.Uprime == s.middle * b.Uprime + s.trail * a.Uprime);
    CHECK(s.lead * c.V == s.middle * b.V + s.trail * a.V);
  }
}

TEST_CASE("recurrence transfer to F_n") {
  const TransferCheck one = verify_recurrence_transfer(1, 30);
  CHECK(one.holds);
  CHECK(abs(one.residual) < pow10(-25, 45));
  CHECK(verify_recurrence_transfer(2, 30).holds);
  CHECK(verify_recurrence_transfer(5, 20).holds);
  CHECK_THROWS_AS(verify_recurrence_transfer(0, 30), std::domain_error);
  CHECK_THROWS_AS(verify_recurrence_transfer(1, 5), PrecisionError);
}
