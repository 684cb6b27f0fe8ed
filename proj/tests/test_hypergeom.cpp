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

#include "apery/analytic.hpp"
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

// Values from an independent mpmath run (50 digits).
const char* const kEightG = "7.327724753417752120436828119459072886193";
const char* const kFourteenGMinus13 = "-0.1764816815189337892355507909466224491619";
const char* const kF2 = "0.00909771651578148519359903777855";

}  // namespace

TEST_CASE("kernel at n = 0 is 8/(2t+1)^2") {
  CHECK(ratfun_equal(kernel(0), RationalFunction(poly({8}), poly({1, 4, 4}))));
}

TEST_CASE("kernel matches its factored parts") {
  for (long n = 0; n <= 8; ++n) {
    const KernelParts parts = build_kernel(n);
    const RationalFunction assembled = RationalFunction(Polynomial::linear(Integer(n + 1), 2) * parts.P1 * parts.P2) *
                                       parts.Q.pow(3);
    CHECK(ratfun_equal(assembled, parts.R));
    CHECK(ratfun_equal(parts.R, kernel(n)));
  }
  CHECK_THROWS_AS(kernel(-1), std::invalid_argument);
}

TEST_CASE("kernel vanishes at t = 0 for n >= 1") {
  for (long n = 1; n <= 20; ++n) CHECK(kernel(n).evaluate(q(0)).is_zero());
  CHECK(kernel(0).evaluate(q(0)) == q(8));
}

TEST_CASE("even n cancels one power at the middle pole") {
  const RationalFunction r = kernel(2);
  // denominator (t+1/2)^3 (t+3/2)^2 (t+5/2)^3
  CHECK(r.denominator().degree() == 8);
  CHECK(kernel(3).denominator().degree() == 12);
}

TEST_CASE("residues of Q_n are signed binomials") {
  for (long n = 0; n <= 10; ++n) {
    const auto a = q_residues(n);
    for (long k = 0; k <= n; ++k) {
      const Rational expected(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
      CHECK(a[static_cast<std::size_t>(k)] == (k % 2 == 0 ? expected : -expected));
    }
  }
}

TEST_CASE("partial-fraction table against an independent sympy expansion") {
  const auto t1 = partial_fractions(1);
  CHECK(t1.at(0, 0) == q(-3, 4));
  CHECK(t1.at(0, 1) == q(-3, 4));
  CHECK(t1.at(1, 0) == q(7, 4));
  CHECK(t1.at(1, 1) == q(-7, 4));
  CHECK(t1.at(2, 0) == q(0));
  CHECK(t1.at(2, 1) == q(0));

  const auto t2 = partial_fractions(2);
  CHECK(t2.at(0, 0) == q(105, 32));
  CHECK(t2.at(0, 1) == q(0));
  CHECK(t2.at(0, 2) == q(-105, 32));
  CHECK(t2.at(1, 0) == q(-1151, 64));
  CHECK(t2.at(1, 1) == q(-225, 4));
  CHECK(t2.at(1, 2) == q(-1151, 64));
  CHECK(t2.at(2, 0) == q(2951, 64));
  CHECK(t2.at(2, 1) == q(0));
  CHECK(t2.at(2, 2) == q(-2951, 64));
}

TEST_CASE("table entries vanish away from the poles") {
  for (long k : {-3L, -1L, 3L, 7L}) {
    for (int j = 0; j < 3; ++j) CHECK(partial_fraction_entry(2, j, k).is_zero());
  }
  CHECK(partial_fraction_entry(2, 1, 1) == q(-225, 4));
  CHECK_THROWS_AS(partial_fraction_entry(2, 3, 0), std::invalid_argument);
}

TEST_CASE("pole_coefficients") {
  // 1/(t-1)^2 + 3/(t-1) + 5
  const RationalFunction f(poly({3, -7, 5}), poly({1, -2, 1}));
  const auto c = pole_coefficients(f, q(1), 2);
  CHECK(c[0] == q(1));
  CHECK(c[1] == q(3));
  CHECK(pole_coefficients(f, q(1), 3)[0].is_zero());
  CHECK_THROWS_AS(pole_coefficients(f, q(1), 0), std::invalid_argument);
  const auto g = pole_coefficients(RationalFunction(poly({0, 1})), q(2), 2);
  CHECK(g[0].is_zero());
  CHECK(g[1].is_zero());
}

TEST_CASE("reconstruction is exact") {
  for (long n = 0; n <= 12; ++n) CHECK(ratfun_equal(reconstruct(partial_fractions(n)), kernel(n)));
}

TEST_CASE("coefficient quadruple matches the sequences") {
  const auto q1 = coefficient_quadruple(1);
  CHECK(q1.U == q(0));
  CHECK(q1.Uprime == q(14));
  CHECK(q1.Udoubleprime == q(0));
  CHECK(q1.V == q(13));
  for (long n = 0; n <= 15; ++n) {
    const auto c = coefficient_quadruple(n);
    const auto p = catalan_pair(n);
    CHECK(c.Uprime == Rational(8) * p.u);
    CHECK(c.V == Rational(8) * p.v);
    CHECK(c.U.is_zero());
    CHECK(c.Udoubleprime.is_zero());
  }
}

TEST_CASE("arithmetic inclusions") {
  for (long n = 0; n <= 8; ++n) {
    const auto r = arith_lemma_report(n);
    CHECK(r.polynomial_values);
    CHECK(r.polynomial_derivatives);
    CHECK(r.q_derivatives);
    CHECK(r.table);
  }
  CHECK(check_arith_lemmas(9));
}

TEST_CASE("f_numeric against independent values") {
  CHECK(abs(f_numeric(0, 35) - BigFloat::parse(kEightG, 50)) < pow10(-35, 50));
  CHECK(abs(f_numeric(1, 35) - BigFloat::parse(kFourteenGMinus13, 50)) < pow10(-35, 50));
  CHECK(abs(f_numeric(2, 28) - BigFloat::parse(kF2, 50)) < pow10(-28, 50));
}

TEST_CASE("f_numeric equals U' G - V") {
  const BigFloat g = reference_catalan(60);
  for (long n : {3L, 6L, 12L}) {
    const auto c = coefficient_quadruple(n);
    const BigFloat form = BigFloat(c.Uprime, 60) * g - BigFloat(c.V, 60);
    CHECK(abs(f_numeric(n, 30) - form) < pow10(-30, 60));
  }
}

TEST_CASE("f_numeric argument errors") {
  CHECK_THROWS_AS(f_numeric(-1, 10), std::invalid_argument);
  CHECK_THROWS_AS(f_numeric(1, 0), std::invalid_argument);
}
