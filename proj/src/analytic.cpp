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

#include "apery/analytic.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "apery/rational_function.hpp"

namespace apery {

namespace {

constexpr int kGuardDigits = 15;

void require_digits(int digits, const char* what) {
  if (digits < 1) throw std::invalid_argument(std::string(what) + ": digits must be at least 1");
}

// arctan(1/x) = sum_k (-1)^k / ((2k+1) x^(2k+1))
BigFloat arctan_inverse(long x, int working) {
  const BigFloat eps = pow10(-(working + 2), working);
  BigFloat power = BigFloat(1, working) / x;
  BigFloat sum(working);
  const long x2 = x * x;
  for (long k = 0;; ++k) {
    BigFloat term = power / (2 * k + 1);
    if (term < eps) break;
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    power /= x2;
  }
  return sum;
}

// Gauss-Legendre nodes and weights on [0, 1].
struct Rule {
  std::vector<double> x;
  std::vector<double> w;
};

Rule gauss_legendre(int count) {
  Rule rule{std::vector<double>(static_cast<std::size_t>(count)), std::vector<double>(static_cast<std::size_t>(count))};
  for (int i = 0; i < (count + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (count + 0.5));
    double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1;
      double p1 = z;
      for (int k = 2; k <= count; ++k) {
        const double p2 = ((2.0 * k - 1) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (count == 1) p0 = 1;
      dp = count * (z * p1 - p0) / (z * z - 1);
      const double step = p1 / dp;
      z -= step;
      if (std::abs(step) < 1e-16) break;
    }
    const double weight = 1.0 / ((1 - z * z) * dp * dp);  // 2/(...) on [-1,1], halved
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(count - 1 - i);
    rule.x[lo] = (1 - z) / 2;
    rule.x[hi] = (1 + z) / 2;
    rule.w[lo] = weight;
    rule.w[hi] = weight;
  }
  return rule;
}

// The integrand after x = (1-rho^2)^2, y = 1-w^2.
double beukers_integrand(long n, double rho, double w) {
  const double r2 = rho * rho;
  const double one_minus = 1 - r2;
  const double two_minus = 2 - r2;
  const double w2 = w * w;
  const double den = r2 * two_minus + one_minus * one_minus * w2;
  const double nn = static_cast<double>(n);
  const double num = std::pow(one_minus * one_minus * rho * rho * two_minus * (1 - w2) * w2, nn);
  return 8 * rho * num / std::pow(den, nn + 1);
}

// Both triangles of the unit square, collapsed at the origin.
double beukers_quadrature(long n, const Rule& rule) {
  double total = 0;
  const std::size_t m = rule.x.size();
  for (std::size_t i = 0; i < m; ++i) {
    const double a = rule.x[i];
    double inner = 0;
    for (std::size_t j = 0; j < m; ++j) {
      const double tau = rule.x[j];
      inner += rule.w[j] * (beukers_integrand(n, a, a * tau) + beukers_integrand(n, a * tau, a));
    }
    total += rule.w[i] * a * inner;
  }
  return total;
}

RationalFunction series_inner(long n) {
  std::map<Rational, int> roots;
  roots[Rational(Integer(-n), Integer(2))] += 1;
  for (long i = 1; i <= n; ++i) roots[Rational(i)] += 2;
  for (long i = n + 1; i <= 2 * n; ++i) roots[Rational(-i)] += 2;
  for (long i = 0; i <= n; ++i) roots[Rational(-i)] -= 4;
  return RationalFunction::from_roots(Rational(2), roots);
}

}  // namespace

BigFloat reference_catalan(int digits) {
  require_digits(digits, "reference_catalan");
  const int working = digits + kGuardDigits;
  const long n = static_cast<long>(std::ceil(1.31 * working)) + 2;
  BigFloat d = pow(BigFloat(3, working) + sqrt(BigFloat(8, working)), n);
  d = (d + BigFloat(1, working) / d) / 2;
  BigFloat b(-1, working);
  BigFloat c = -d;
  BigFloat s(working);
  for (long k = 0; k < n; ++k) {
    c = b - c;
    const long odd = 2 * k + 1;
    s += c / odd / odd;
    b = b * (2 * (k + n)) * (k - n) / odd / (k + 1);
  }
  return s / d;
}

BigFloat reference_zeta4(int digits) {
  require_digits(digits, "reference_zeta4");
  const int working = digits + kGuardDigits;
  const BigFloat pi = arctan_inverse(5, working) * 16 - arctan_inverse(239, working) * 4;
  return pow(pi, 4) / 90;
}

DigitsResult constant_digits(Family family, int digits) {
  require_digits(digits, "constant_digits");
  const int working = digits + kGuardDigits;
  const double rho = family == Family::catalan ? 2.089 : 3.43;
  long n = static_cast<long>(std::ceil(digits / rho)) + 5;
  const BigFloat target = pow10(-digits, working) / 2;
  for (;; ++n) {
    const SequencePair here = sequence_pair(family, n);
    const SequencePair next = sequence_pair(family, n + 1);
    const Rational ratio = here.v / here.u;
    BigFloat bound = abs(BigFloat(ratio - next.v / next.u, working)) * 10;
    if (bound < target) {
      return {family, digits, BigFloat(ratio, working).to_fixed(digits), n, std::move(bound)};
    }
  }
}

DigitsResult catalan_digits(int digits) { return constant_digits(Family::catalan, digits); }

DigitsResult zeta4_digits(int digits) { return constant_digits(Family::zeta4, digits); }

CFConvergent cf_convergent(Family family, long n) {
  if (n < 1) throw std::invalid_argument("cf_convergent: depth must be at least 1");
  auto partial_denominator = [&](long m) {  // b_{m+1}
    return family == Family::catalan ? catalan_q(m) : zeta4_r(m);
  };
  auto partial_numerator = [&](long m) {  // a_{m+1}, m >= 1
    const Integer x(m);
    if (family == Family::catalan) {
      Integer f = (2 * x - 1) * (2 * x);
      f = f * f;
      f = f * f;
      return Rational(f) * catalan_p(m - 1) * catalan_p(m + 1);
    }
    Integer seventh;
    mpz_pow_ui(seventh.get_mpz_t(), x.get_mpz_t(), 7);
    return Rational(Integer(seventh * (3 * x - 1) * (3 * x) * (3 * x + 1)));
  };
  Rational x = partial_denominator(n - 1);
  for (long m = n - 1; m >= 1; --m) x = partial_denominator(m - 1) + partial_numerator(m) / x;
  const Rational first = family == Family::catalan ? Rational(Integer(13), Integer(2)) : Rational(13);
  return {family, n, first / x};
}

BigFloat beukers_integral(long n, int digits) {
  if (n < 0) throw std::invalid_argument("beukers_integral: n must be nonnegative");
  require_digits(digits, "beukers_integral");
  if (digits > 15) throw PrecisionError("beukers_integral: double-precision quadrature supports at most 15 digits");
  const double tol = std::pow(10.0, -(digits + 2));
  constexpr int kMaxNodes = 1 << 12;
  double previous = beukers_quadrature(n, gauss_legendre(8));
  for (int nodes = 16; nodes <= kMaxNodes; nodes *= 2) {
    const double current = beukers_quadrature(n, gauss_legendre(nodes));
    // Below a few ulps the comparison measures rounding, not convergence.
    const double floor = 16 * std::numeric_limits<double>::epsilon() * std::abs(current);
    if (std::abs(current - previous) < std::max(tol, floor)) {
      return BigFloat(Rational(mpq_class(current)), digits + kGuardDigits);
    }
    previous = current;
  }
  throw PrecisionError("beukers_integral: quadrature did not converge within 4096 nodes per axis");
}

BigFloat zeta4_series(long n, int digits) {
  if (n < 0) throw std::invalid_argument("zeta4_series: n must be nonnegative");
  require_digits(digits, "zeta4_series");
  constexpr long kMaxTerms = 1'000'000;
  const int working = digits + kGuardDigits;
  // Tail error after dividing by 6, against the target.
  const double target = std::pow(10.0, -(digits + 1)) * 6;
  // g(t) ~ 2/t^3, so the tail bracket |g(T-1) - g(T)|/2 is about 3/T^4.
  if (3.0 / std::pow(static_cast<double>(kMaxTerms), 4) >= target) {
    throw PrecisionError("zeta4_series: requested digits need more than 10^6 terms");
  }
  const RationalFunction g = series_inner(n);
  const RationalFunction dg = g.derivative();

  BigFloat sum(working);
  const long t_start = 4 * n + 10;
  Rational g_prev = g.evaluate(Rational(t_start - 1));
  for (long t = 1; t < t_start; ++t) sum += BigFloat(dg.evaluate(Rational(t)), working);
  for (long t = t_start;; ++t) {
    if (t > kMaxTerms) throw PrecisionError("zeta4_series: term cap reached");
    Rational g_here = g.evaluate(Rational(t));
    // sum_{s>=t} g'(s) lies between -g(t) and -g(t-1)
    if ((g_prev - g_here).abs().to_double() / 2 < target) {
      sum -= BigFloat(g_prev + g_here, working) / 2;
      break;
    }
    sum += BigFloat(dg.evaluate(Rational(t)), working);
    g_prev = std::move(g_here);
  }
  sum /= 6;
  return n % 2 == 1 ? sum : -sum;
}

}  // namespace apery
