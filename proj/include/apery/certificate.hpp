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

// Creative-telescoping certificate for the Catalan kernel R_n(t).
//
// With S_n(t) = s_n(t) R_n(t), the kernel satisfies for every n >= 1
//
//   (2n+1)^2 (2n+2)^2 p(n) R_{n+1}(t) - q(n) R_n(t) - (2n-1)^2 (2n)^2 p(n+1) R_{n-1}(t)
//       = -S_n(t+1) - S_n(t),
//
// and summing against (-1)^t carries the recurrence over to F_n.

#ifndef APERY_CERTIFICATE_HPP
#define APERY_CERTIFICATE_HPP

#include <array>

#include "apery/bigfloat.hpp"
#include "apery/rational_function.hpp"

namespace apery {

/// Coefficients of t^0..t^4 in the numerator of s_n(t), evaluated at n.
/// s_n(t) = (sum_i c_i t^i) / (2 (2t+n+1)(t+2n-1)(t+2n)).
std::array<Integer, 5> certificate_numerator_coefficients(long n);

struct Certificate {
  long n;
  RationalFunction s;
  /// s * R_n
  RationalFunction S;
};

/// Throws std::domain_error for n < 1.
Certificate build_certificate(long n);

/// True iff the telescoping identity holds exactly in Q(t): all five terms are
/// cleared to a common denominator and the numerator is compared with zero.
/// Throws std::domain_error for n < 1.
bool verify_telescoping(long n);

struct TransferCheck {
  long n;
  /// (2n+1)^2(2n+2)^2 p(n) F_{n+1} - q(n) F_n - (2n-1)^2(2n)^2 p(n+1) F_{n-1}
  BigFloat residual;
  /// 10^-(digits-5) times the largest of the three terms (at least 1).
  BigFloat tolerance;
  bool holds;
};

/// Numerical check that F_n obeys the Catalan recurrence, using f_numeric.
/// Throws std::domain_error for n < 1 and PrecisionError when digits < 6 or
/// the residual only drops below tolerance after raising the precision.
TransferCheck verify_recurrence_transfer(long n, int digits);

}  // namespace apery

#endif  // APERY_CERTIFICATE_HPP
