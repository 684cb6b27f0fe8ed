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

#include "apery/hypergeom.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "apery/lcm.hpp"
#include "apery/series.hpp"

namespace apery {

namespace {

void require_nonnegative(long n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": n must be nonnegative");
}

Rational half_pole(long k) { return Rational(Integer(-2 * k - 1), Integer(2)); }

Polynomial shifted_falling(long first_root, long count) {
  // prod_{i < count} (t - (first_root - i))
  std::vector<Rational> roots;
  roots.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) roots.emplace_back(first_root - i);
  return from_roots(roots);
}

// E_k(0)/2 for k = 0..count-1: the weights in
//   sum_{t>=0} (-1)^t f(T+t) = sum_k (E_k(0)/2) f^(k)(T)/k!,
// read off from 1/(1 + e^z) = sum_k E_k(0)/(2 k!) z^k.
std::vector<Rational> boole_weights(std::size_t count) {
  static std::mutex mutex;
  static std::vector<Rational> cache;
  std::lock_guard lock(mutex);
  if (cache.size() < count) {
    std::vector<Rational> one_plus_exp(count);
    Integer fact = 1;
    for (std::size_t k = 0; k < count; ++k) {
      if (k > 0) fact *= static_cast<unsigned long>(k);
      one_plus_exp[k] = Rational(Integer(1), fact);
    }
    one_plus_exp[0] = 2;
    const TruncatedSeries inv = TruncatedSeries(Rational(0), std::move(one_plus_exp)).reciprocal();
    cache.assign(count, Rational{});
    fact = 1;
    for (std::size_t k = 0; k < count; ++k) {
      if (k > 0) fact *= static_cast<unsigned long>(k);
      cache[k] = inv[static_cast<int>(k)] * Rational(fact);
    }
  }
  return {cache.begin(), cache.begin() + static_cast<long>(count)};
}

bool integral(const Rational& x) { return x.is_integer(); }

}  // namespace

RationalFunction kernel(long n) {
  require_nonnegative(n, "kernel");
  std::map<Rational, int> roots;
  // 2t + n + 1 = 2 (t + (n+1)/2)
  roots[Rational(Integer(-(n + 1)), Integer(2))] += 1;
  for (long i = 0; i < n; ++i) roots[Rational(i)] += 1;
  for (long i = n + 1; i <= 2 * n; ++i) roots[Rational(-i)] += 1;
  for (long k = 0; k <= n; ++k) roots[half_pole(k)] -= 3;
  return RationalFunction::from_roots(Rational(Integer(2 * factorial(static_cast<unsigned long>(n)))), roots);
}

KernelParts build_kernel(long n) {
  require_nonnegative(n, "build_kernel");
  const Rational inv_fact(Integer(1), factorial(static_cast<unsigned long>(n)));
  Polynomial p1 = shifted_falling(n - 1, n) * inv_fact;  // roots 0..n-1
  Polynomial p2 = shifted_falling(-(n + 1), n) * inv_fact;  // roots -(n+1)..-2n
  std::map<Rational, int> q_roots;
  for (long k = 0; k <= n; ++k) q_roots[half_pole(k)] = -1;
  RationalFunction q = RationalFunction::from_roots(Rational(factorial(static_cast<unsigned long>(n))), q_roots);
  return {n, std::move(p1), std::move(p2), std::move(q), kernel(n)};
}

std::vector<Rational> q_residues(long n) {
  require_nonnegative(n, "q_residues");
  const KernelParts parts = build_kernel(n);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) out.push_back(pole_coefficients(parts.Q, half_pole(k), 1)[0]);
  return out;
}

std::vector<Rational> pole_coefficients(const RationalFunction& f, const Rational& pole, int order) {
  if (order < 1) throw std::invalid_argument("pole_coefficients: order must be at least 1");
  const Polynomial clear = Polynomial::linear(-pole, 1).pow(static_cast<unsigned>(order));
  const TruncatedSeries s = series_expand(f * RationalFunction(clear), pole, order);
  return {s.coefficients().begin(), s.coefficients().end()};
}

PartialFractionTable partial_fractions(long n) {
  require_nonnegative(n, "partial_fractions");
  const RationalFunction r = kernel(n);
  PartialFractionTable table{n, {}};
  for (auto& row : table.A) row.resize(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) {
    const auto c = pole_coefficients(r, half_pole(k), 3);
    for (int j = 0; j < 3; ++j) table.A[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(j)];
  }
  return table;
}

Rational partial_fraction_entry(long n, int j, long k) {
  if (j < 0 || j > 2) throw std::invalid_argument("partial_fraction_entry: j must be 0, 1 or 2");
  return pole_coefficients(kernel(n), half_pole(k), 3)[static_cast<std::size_t>(j)];
}

RationalFunction reconstruct(const PartialFractionTable& table) {
  const long n = table.n;
  // Everything over prod_k (t+k+1/2)^3 at once.
  std::vector<Polynomial> cubes;
  Polynomial common(1);
  for (long k = 0; k <= n; ++k) {
    cubes.push_back(Polynomial::linear(-half_pole(k), 1).pow(3));
    common *= cubes.back();
  }
  Polynomial numerator;
  for (long k = 0; k <= n; ++k) {
    const Polynomial others = common.exact_divide(cubes[static_cast<std::size_t>(k)]);
    const Polynomial lin = Polynomial::linear(-half_pole(k), 1);
    Polynomial local;
    for (int j = 0; j < 3; ++j) local += lin.pow(static_cast<unsigned>(j)) * table.at(j, k);
    numerator += local * others;
  }
  return {numerator, common};
}

CoefficientQuadruple coefficient_quadruple(long n) {
  const PartialFractionTable table = partial_fractions(n);
  std::array<Rational, 3> alternating{};
  Rational v;
  for (int j = 0; j < 3; ++j) {
    const long power = 3 - j;
    const Rational weight(pow2(static_cast<unsigned long>(power)));
    Rational inner;  // sum_{l<k} (-1)^l / (2l+1)^power
    for (long k = 0; k <= n; ++k) {
      const Rational signed_a = (k % 2 == 0) ? table.at(j, k) : -table.at(j, k);
      alternating[static_cast<std::size_t>(j)] += signed_a;
      v += weight * signed_a * inner;
      const Rational term = Rational(Integer(2 * k + 1)).pow(-power);
      inner += (k % 2 == 0) ? term : -term;
    }
    alternating[static_cast<std::size_t>(j)] *= weight;
  }
  return {n, alternating[0], alternating[1], alternating[2], v};
}

ArithLemmaReport arith_lemma_report(long n) {
  require_nonnegative(n, "arith_lemma_report");
  const KernelParts parts = build_kernel(n);
  ArithLemmaReport report{n};
  const Rational two_2n(pow2(static_cast<unsigned long>(2 * n)));
  const Rational two_4n(pow2(static_cast<unsigned long>(4 * n)));
  const Rational d_n(lcm_upto(n));

  for (long k = -2 * n; k <= 2 * n; ++k) {
    for (const Polynomial* p : {&parts.P1, &parts.P2}) {
      const auto taylor = p->taylor_coefficients(half_pole(k), 3);
      if (!integral(two_2n * taylor[0])) report.polynomial_values = false;
      for (int j = 1; j <= 2; ++j) {
        if (!integral(two_2n * d_n.pow(j) * taylor[static_cast<std::size_t>(j)])) {
          report.polynomial_derivatives = false;
        }
      }
    }
  }

  const std::vector<Rational> a = q_residues(n);
  for (long k = 0; k <= n; ++k) {
    const Polynomial lin = Polynomial::linear(-half_pole(k), 1);
    const TruncatedSeries s = series_expand(parts.Q * RationalFunction(lin), half_pole(k), 3);
    for (int j = 1; j <= 2; ++j) {
      const Rational scaled = d_n.pow(j) * s[j];
      Rational closed;
      for (long l = 0; l <= n; ++l) {
        if (l != k) closed += a[static_cast<std::size_t>(l)] * Rational(Integer(l - k)).pow(-j);
      }
      if (j % 2 == 0) closed = -closed;
      if (!integral(scaled) || scaled != d_n.pow(j) * closed) report.q_derivatives = false;
    }
  }

  const PartialFractionTable table = partial_fractions(n);
  for (int j = 0; j < 3; ++j) {
    for (long k = 0; k <= n; ++k) {
      if (!integral(two_4n * d_n.pow(j) * table.at(j, k))) report.table = false;
    }
  }
  return report;
}

bool check_arith_lemmas(long n) { return arith_lemma_report(n).all(); }

BigFloat f_numeric(long n, int digits) {
  require_nonnegative(n, "f_numeric");
  if (digits < 1) throw std::invalid_argument("f_numeric: digits must be at least 1");
  const RationalFunction r = kernel(n);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits + 5));
  const Rational half_eps(Integer(1), 2 * scale);

  // The tail expansion's smallest term is about exp(-pi T); start past that.
  const long t_min = static_cast<long>(std::ceil((digits + 10) * std::numbers::ln10 / std::numbers::pi)) + 1;

  Rational head;
  long t = 0;
  int decreases = 0;
  Rational previous_abs;
  bool have_previous = false;
  auto add_term = [&] {
    const Rational value = r.evaluate(Rational(t));
    head += (t % 2 == 0) ? value : -value;
    const Rational mag = value.abs();
    decreases = (have_previous && mag < previous_abs) ? decreases + 1 : 0;
    previous_abs = mag;
    have_previous = true;
    ++t;
  };
  while (!(t > 4 * n && decreases >= 3 && t >= t_min)) add_term();

  for (int attempt = 0; attempt < 6; ++attempt) {
    const long T = t;
    const auto order = static_cast<int>(std::ceil(std::numbers::pi * static_cast<double>(T))) + 1;
    const TruncatedSeries taylor = series_expand(r, Rational(T), order);
    const std::vector<Rational> weights = boole_weights(static_cast<std::size_t>(order));
    Rational tail;
    bool converged = false;
    for (int k = 0; k < order; ++k) {
      const Rational& w = weights[static_cast<std::size_t>(k)];
      if (w.is_zero()) continue;
      const Rational term = w * taylor[k];
      tail += term;
      if (k > 0 && term.abs() < half_eps) {
        converged = true;
        break;
      }
    }
    if (converged) {
      const Rational total = head + ((T % 2 == 0) ? tail : -tail);
      return BigFloat(total, digits);
    }
    const long target = 2 * T;
    while (t < target) add_term();
  }
  throw PrecisionError("f_numeric: tail expansion did not reach the requested accuracy");
}

}  // namespace apery
