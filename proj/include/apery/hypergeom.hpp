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

// The very-well-poised kernel behind the Catalan recurrence.
//
//   R_n(t) = n! (2t+n+1) t(t-1)...(t-n+1) (t+n+1)...(t+2n) / ((t+1/2)(t+3/2)...(t+n+1/2))^3
//
// and its alternating sum F_n = sum_{t>=0} (-1)^t R_n(t). Writing R_n in
// partial fractions over the poles t = -k-1/2 expresses F_n as a linear form
// U'_n G - V_n in Catalan's constant G.

#ifndef APERY_HYPERGEOM_HPP
#define APERY_HYPERGEOM_HPP

#include <array>
#include <vector>

#include "apery/bigfloat.hpp"
#include "apery/polynomial.hpp"
#include "apery/rational_function.hpp"

namespace apery {

struct KernelParts {
  long n;
  /// t(t-1)...(t-n+1) / n!
  Polynomial P1;
  /// (t+n+1)...(t+2n) / n!
  Polynomial P2;
  /// n! / ((t+1/2)...(t+n+1/2))
  RationalFunction Q;
  /// (2t+n+1) P1 P2 Q^3
  RationalFunction R;
};

/// Throws std::invalid_argument for n < 0.
KernelParts build_kernel(long n);
/// Just R_n, assembled from its linear factors.
RationalFunction kernel(long n);

/// Residues a_k of Q_n at t = -k-1/2, k = 0..n; a_k = (-1)^k C(n, k).
std::vector<Rational> q_residues(long n);

/// Laurent coefficients of f at a pole of order at most `order`:
/// element j multiplies 1/(t - pole)^(order - j), for j = 0..order-1.
/// All zero when f is regular at `pole`.
std::vector<Rational> pole_coefficients(const RationalFunction& f, const Rational& pole, int order);

/// A_{jk}(n) for j in {0,1,2}, k in {0..n}: the coefficient of
/// 1/(t+k+1/2)^(3-j) in R_n(t).
struct PartialFractionTable {
  long n;
  std::array<std::vector<Rational>, 3> A;

  const Rational& at(int j, long k) const {
    return A.at(static_cast<std::size_t>(j)).at(static_cast<std::size_t>(k));
  }
};

PartialFractionTable partial_fractions(long n);
/// A_{jk}(n) for any integer k, computed the same way as the table.
Rational partial_fraction_entry(long n, int j, long k);
/// sum_{j,k} A_{jk} / (t+k+1/2)^(3-j) as a canonical rational function.
RationalFunction reconstruct(const PartialFractionTable& table);

/// Coefficients of F_n = U beta(3) + U' beta(2) + U'' beta(1) - V.
struct CoefficientQuadruple {
  long n;
  Rational U;
  Rational Uprime;
  Rational Udoubleprime;
  Rational V;
};

CoefficientQuadruple coefficient_quadruple(long n);

/// Outcome of the arithmetic inclusions behind the denominator bounds.
struct ArithLemmaReport {
  long n;
  /// 2^(2n) P(-k-1/2) in Z for P = P1, P2 and k in [-2n, 2n].
  bool polynomial_values = true;
  /// 2^(2n) D_n^j P^(j)(-k-1/2)/j! in Z for j = 1, 2, same window.
  bool polynomial_derivatives = true;
  /// D_n^j (Q_n(t)(t+k+1/2))^(j)/j! at t = -k-1/2 is an integer and equals
  /// (-1)^(j-1) D_n^j sum_{l != k} a_l/(l-k)^j, for k in [0, n], j = 1, 2.
  bool q_derivatives = true;
  /// 2^(4n) D_n^j A_{jk} in Z.
  bool table = true;

  bool all() const { return polynomial_values && polynomial_derivatives && q_derivatives && table; }
};

ArithLemmaReport arith_lemma_report(long n);
bool check_arith_lemmas(long n);

/// F_n = sum_{t>=0} (-1)^t R_n(t), to an absolute accuracy of 10^-(digits+5).
///
/// The head of the sum is added exactly up to a cut-off T chosen past t = 4n,
/// after |R_n(t)| has decreased three times in a row, and far enough out for
/// the tail expansion. The tail sum_{t>=T} (-1)^t R_n(t) is taken from the
/// alternating Euler-Boole expansion (1/2) sum_k E_k(0) R_n^(k)(T)/k! with exact
/// Taylor coefficients, stopped at the first term below the tolerance.
BigFloat f_numeric(long n, int digits);

}  // namespace apery

#endif  // APERY_HYPERGEOM_HPP
