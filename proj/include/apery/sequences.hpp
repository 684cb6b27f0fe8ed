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

// Exact generation of the two Apery-like recurrence families.
//
// catalan:  (2n+1)^2 (2n+2)^2 p(n) u_{n+1} = q(n) u_n + (2n-1)^2 (2n)^2 p(n+1) u_{n-1}
//           p(n) = 20n^2 - 8n + 1,
//           q(n) = 3520n^6 + 5632n^5 + 2064n^4 - 384n^3 - 156n^2 + 16n + 7,
//           u_0 = 1, u_1 = 7/4, v_0 = 0, v_1 = 13/8, and v_n/u_n -> G (Catalan).
//
// zeta4:    (n+1)^5 u_{n+1} = r(n) u_n + 3n^3 (3n-1)(3n+1) u_{n-1}
//           r(n) = 270n^5 + 675n^4 + 702n^3 + 378n^2 + 105n + 12,
//           u_0 = 1, u_1 = 12, v_0 = 0, v_1 = 13, and v_n/u_n -> zeta(4).

#ifndef APERY_SEQUENCES_HPP
#define APERY_SEQUENCES_HPP

#include <string_view>
#include <vector>

#include "apery/bigfloat.hpp"
#include "apery/rational.hpp"

namespace apery {

enum class Family { catalan, zeta4 };

std::string_view to_string(Family family);
/// Throws std::invalid_argument for names other than "catalan" and "zeta4".
Family parse_family(std::string_view name);

/// Denominator-clearing statement being tested.
///   proved: catalan 2^(4n+3) D_n u_n, 2^(4n+3) D_(2n-1)^3 v_n;  zeta4 6 D_n u_n, 6 D_n^5 v_n
///   strong: catalan 2^(4n) u_n,       2^(4n) D_(2n-1)^2 v_n;    zeta4 u_n,      D_n^4 v_n
enum class InclusionMode { proved, strong };

std::string_view to_string(InclusionMode mode);
InclusionMode parse_inclusion_mode(std::string_view name);

struct SequencePair {
  Family family;
  long n;
  Rational u;
  Rational v;
};

/// Coefficients of lead * x_{n+1} = middle * x_n + trail * x_{n-1}.
struct RecurrenceStep {
  Rational lead;
  Rational middle;
  Rational trail;
};

Rational catalan_p(long n);
Rational catalan_q(long n);
Rational zeta4_r(long n);

RecurrenceStep recurrence_coefficients(Family family, long n);

/// Exact (u_n, v_n); memoized per family. Throws std::invalid_argument for n < 0.
SequencePair catalan_pair(long n);
SequencePair zeta4_pair(long n);
SequencePair sequence_pair(Family family, long n);
/// Pairs 0..n_max inclusive.
std::vector<SequencePair> sequence_range(Family family, long n_max);

struct ClearingFactors {
  Integer u;
  Integer v;
};

/// Factors multiplied into u_n and v_n for the given mode. D_(2n-1) is D_0 at n = 0.
ClearingFactors clearing_factors(Family family, long n, InclusionMode mode);

struct InclusionReport {
  Family family;
  long n;
  InclusionMode mode;
  bool pass_u;
  bool pass_v;
  /// The cleared values; integers exactly when the matching flag is set.
  Rational witness_u;
  Rational witness_v;

  bool pass() const { return pass_u && pass_v; }
};

InclusionReport check_inclusions(Family family, long n, InclusionMode mode);

struct AsymptoticReport {
  Family family;
  long n;
  /// (1/n) ln u_n
  BigFloat rate_u;
  /// (1/n) ln |u_n C - v_n|, C the limit of v_n/u_n
  BigFloat rate_form;
};

/// Per-step logarithmic growth of u_n and decay of the linear form u_n C - v_n.
///
/// The linear form is summed as u_n * sum_{m >= n} (v_{m+1}/u_{m+1} - v_m/u_m)
/// from exact convergent differences, so its relative accuracy does not depend
/// on the size of u_n. Requires n >= 2; throws PrecisionError when precision < 6
/// digits or the tail does not settle within 2 * precision + 50 terms.
AsymptoticReport asymptotic_report(Family family, long n, int precision);

}  // namespace apery

#endif  // APERY_SEQUENCES_HPP
