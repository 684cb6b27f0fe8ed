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

// Numerical evaluation around the two recurrences.

#ifndef APERY_ANALYTIC_HPP
#define APERY_ANALYTIC_HPP

#include <string>

#include "apery/bigfloat.hpp"
#include "apery/rational.hpp"
#include "apery/sequences.hpp"

namespace apery {

/// G = sum_l (-1)^l/(2l+1)^2, by Cohen-Rodriguez Villegas-Zagier acceleration.
/// The result carries digits + 15 digits of working precision.
BigFloat reference_catalan(int digits);

/// pi^4/90 with pi from Machin's arctangent formula.
BigFloat reference_zeta4(int digits);

struct DigitsResult {
  Family constant;
  int digits;
  /// Rounded to `digits` places after the point.
  std::string value;
  long n_used;
  /// 10 |v_n/u_n - v_{n+1}/u_{n+1}|
  BigFloat error_bound;
};

/// Digits of the limit from the exact convergent v_n/u_n, starting at
/// n = ceil(digits/rho) + 5 and moving up until the consecutive-convergent
/// bound is below half a unit in the last place.
DigitsResult catalan_digits(int digits);
DigitsResult zeta4_digits(int digits);
DigitsResult constant_digits(Family family, int digits);

struct CFConvergent {
  Family family;
  long n;
  Rational value;
};

/// Depth-n continued fraction, evaluated from the bottom up.
///   catalan: 13/2 / (q(0) + a_2/(q(1) + ...)),  a_{m+1} = (2m-1)^4 (2m)^4 p(m-1) p(m+1)
///   zeta4:   13 / (r(0) + a_2/(r(1) + ...)),    a_{m+1} = m^7 (3m-1)(3m)(3m+1)
/// Throws std::invalid_argument for n < 1.
CFConvergent cf_convergent(Family family, long n);

/// The double integral
///   I_n = int_0^1 int_0^1 x^(n-1/2) (1-x)^n y^n (1-y)^(n-1/2) / (1-xy)^(n+1) dx dy,
/// with (-1)^n I_n / 4 = u_n G - v_n. Gauss-Legendre in double precision, so
/// digits must lie in [1, 15]. Throws PrecisionError if 2^12 nodes per axis
/// are not enough.
BigFloat beukers_integral(long n, int digits);

/// (-1)^(n+1)/6 sum_{t>=1} g'(t), where
///   g(t) = (2t+n) ((t-1)...(t-n))^2 ((t+n+1)...(t+2n))^2 / (t(t+1)...(t+n))^4,
/// which equals u_n zeta(4) - v_n for the zeta4 family. Throws PrecisionError
/// when more than 10^6 terms would be needed.
BigFloat zeta4_series(long n, int digits);

}  // namespace apery

#endif  // APERY_ANALYTIC_HPP
