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

#include "apery/certificate.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "apery/hypergeom.hpp"
#include "apery/sequences.hpp"

namespace apery {

namespace {

// Integer polynomial in n, highest power first, raised to `power`.
struct Factor {
  std::vector<long> high_to_low;
  unsigned power = 1;
};

// Numerator coefficient of t^i in s_n(t), kept in the factored form in which
// it is usually printed.
const std::array<std::vector<Factor>, 5> kNumeratorTable = {{
    // t^0: n (2n-1) (2n+1)^2 (4720n^5 + 6192n^4 + 816n^3 - 864n^2 + 69n + 13)
    {{{1, 0}}, {{2, -1}}, {{2, 1}, 2}, {{4720, 6192, 816, -864, 69, 13}}},
    // t^1: (2n+1) (34880n^7 + 39328n^6 - 2176n^5 - 8416n^4 + 964n^3 + 154n^2 + 58n - 13)
    {{{2, 1}}, {{34880, 39328, -2176, -8416, 964, 154, 58, -13}}},
    // t^2: 44800n^7 + 65600n^6 + 17568n^5 - 7056n^4 - 1088n^3 + 372n^2 + 146n - 1
    {{{44800, 65600, 17568, -7056, -1088, 372, 146, -1}}},
    // t^3: 2 (5440n^6 + 7104n^5 + 912n^4 - 1088n^3 + 76n^2 + 68n + 7)
    {{{2}}, {{5440, 7104, 912, -1088, 76, 68, 7}}},
    // t^4: 8n (2n-1)^2 (20n^2 + 32n + 13)
    {{{8, 0}}, {{2, -1}, 2}, {{20, 32, 13}}},
}};

Integer evaluate_factors(const std::vector<Factor>& factors, long n) {
  const Integer x(n);
  Integer product = 1;
  for (const auto& f : factors) {
    Integer value = 0;
    for (long c : f.high_to_low) {
      value *= x;
      value += c;
    }
    Integer raised;
    mpz_pow_ui(raised.get_mpz_t(), value.get_mpz_t(), f.power);
    product *= raised;
  }
  return product;
}

void require_positive(long n, const char* what) {
  if (n < 1) throw std::domain_error(std::string(what) + ": defined for n >= 1 only");
}

}  // namespace

std::array<Integer, 5> certificate_numerator_coefficients(long n) {
  std::array<Integer, 5> out;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = evaluate_factors(kNumeratorTable[i], n);
  return out;
}

Certificate build_certificate(long n) {
  require_positive(n, "build_certificate");
  const auto c = certificate_numerator_coefficients(n);
  std::vector<Rational> num;
  num.reserve(c.size());
  for (const auto& x : c) num.emplace_back(x);
  // 2 (2t+n+1)(t+2n-1)(t+2n)
  const Polynomial den = Polynomial::linear(Integer(2 * (n + 1)), 4) *
                         Polynomial::linear(Integer(2 * n - 1), 1) *
                         Polynomial::linear(Integer(2 * n), 1);
  RationalFunction s(Polynomial(std::move(num)), den);
  RationalFunction S = s * kernel(n);
  return {n, std::move(s), std::move(S)};
}

bool verify_telescoping(long n) {
  require_positive(n, "verify_telescoping");
  const RecurrenceStep step = recurrence_coefficients(Family::catalan, n);
  const Certificate cert = build_certificate(n);
  const std::vector<RationalFunction> terms{
      RationalFunction(step.lead) * kernel(n + 1),
      RationalFunction(-step.middle) * kernel(n),
      RationalFunction(-step.trail) * kernel(n - 1),
      cert.S.shift(1),
      cert.S,
  };
  return sum_is_zero(terms);
}

TransferCheck verify_recurrence_transfer(long n, int digits) {
  require_positive(n, "verify_recurrence_transfer");
  if (digits < 6) throw PrecisionError("verify_recurrence_transfer: needs at least 6 digits");
  const RecurrenceStep step = recurrence_coefficients(Family::catalan, n);

  auto attempt = [&](int d) {
    const int working = d + 15;
    const BigFloat a = BigFloat(step.lead, working) * f_numeric(n + 1, d);
    const BigFloat b = BigFloat(step.middle, working) * f_numeric(n, d);
    const BigFloat c = BigFloat(step.trail, working) * f_numeric(n - 1, d);
    BigFloat scale(1, working);
    for (const BigFloat* x : {&a, &b, &c}) scale = std::max(scale, abs(*x));
    BigFloat tolerance = scale * pow10(-(d - 5), working);
    BigFloat residual = a - b - c;
    const bool holds = abs(residual) < tolerance;
    return TransferCheck{n, std::move(residual), std::move(tolerance), holds};
  };

  TransferCheck check = attempt(digits);
  if (check.holds) return check;
  // A residual that vanishes at higher precision was a precision failure, not
  // a failure of the recurrence.
  if (attempt(digits + 20).holds) {
    throw PrecisionError("verify_recurrence_transfer: residual not certified at the stated digits");
  }
  return check;
}

}  // namespace apery
