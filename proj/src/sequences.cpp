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

#include "apery/sequences.hpp"

#include <initializer_list>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>

#include "apery/lcm.hpp"

namespace apery {

namespace {

// Horner evaluation of an integer-coefficient polynomial, highest degree first.
Integer horner(std::initializer_list<long> coeffs_high_to_low, long n) {
  const Integer x(n);
  Integer acc = 0;
  for (long c : coeffs_high_to_low) {
    acc *= x;
    acc += c;
  }
  return acc;
}

Integer square(const Integer& x) { return x * x; }

class SequenceCache {
 public:
  SequenceCache(Family family, Rational u0, Rational u1, Rational v0, Rational v1)
      : family_(family), u_{std::move(u0), std::move(u1)}, v_{std::move(v0), std::move(v1)} {}

  SequencePair get(long n) {
    if (n < 0) throw std::invalid_argument("sequence index must be nonnegative");
    const auto idx = static_cast<std::size_t>(n);
    {
      std::shared_lock lock(mutex_);
      if (idx < u_.size()) return {family_, n, u_[idx], v_[idx]};
    }
    std::unique_lock lock(mutex_);
    while (u_.size() <= idx) {
      const long m = static_cast<long>(u_.size()) - 1;  // produce index m + 1
      const RecurrenceStep step = recurrence_coefficients(family_, m);
      if (step.lead.is_zero()) throw std::logic_error("recurrence leading coefficient vanished");
      u_.push_back((step.middle * u_[u_.size() - 1] + step.trail * u_[u_.size() - 2]) / step.lead);
      v_.push_back((step.middle * v_[v_.size() - 1] + step.trail * v_[v_.size() - 2]) / step.lead);
    }
    return {family_, n, u_[idx], v_[idx]};
  }

 private:
  Family family_;
  std::shared_mutex mutex_;
  std::vector<Rational> u_;
  std::vector<Rational> v_;
};

SequenceCache& cache_for(Family family) {
  static SequenceCache catalan(Family::catalan, Rational(1), Rational(Integer(7), Integer(4)),
                               Rational(0), Rational(Integer(13), Integer(8)));
  static SequenceCache zeta4(Family::zeta4, Rational(1), Rational(12), Rational(0), Rational(13));
  return family == Family::catalan ? catalan : zeta4;
}

}  // namespace

std::string_view to_string(Family family) {
  return family == Family::catalan ? "catalan" : "zeta4";
}

Family parse_family(std::string_view name) {
  if (name == "catalan") return Family::catalan;
  if (name == "zeta4") return Family::zeta4;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::string_view to_string(InclusionMode mode) {
  return mode == InclusionMode::proved ? "proved" : "strong";
}

InclusionMode parse_inclusion_mode(std::string_view name) {
  if (name == "proved") return InclusionMode::proved;
  if (name == "strong") return InclusionMode::strong;
  throw std::invalid_argument("unknown inclusion mode '" + std::string(name) + "'");
}

Rational catalan_p(long n) { return horner({20, -8, 1}, n); }

Rational catalan_q(long n) { return horner({3520, 5632, 2064, -384, -156, 16, 7}, n); }

Rational zeta4_r(long n) { return horner({270, 675, 702, 378, 105, 12}, n); }

RecurrenceStep recurrence_coefficients(Family family, long n) {
  const Integer m(n);
  if (family == Family::catalan) {
    const Integer lead = square(2 * m + 1) * square(2 * m + 2) * catalan_p(n).numerator();
    const Integer trail = square(2 * m - 1) * square(2 * m) * catalan_p(n + 1).numerator();
    return {Rational(lead), catalan_q(n), Rational(trail)};
  }
  Integer lead;
  mpz_pow_ui(lead.get_mpz_t(), Integer(m + 1).get_mpz_t(), 5);
  const Integer trail = 3 * m * m * m * (3 * m - 1) * (3 * m + 1);
  return {Rational(lead), zeta4_r(n), Rational(trail)};
}

SequencePair catalan_pair(long n) { return cache_for(Family::catalan).get(n); }

SequencePair zeta4_pair(long n) { return cache_for(Family::zeta4).get(n); }

SequencePair sequence_pair(Family family, long n) { return cache_for(family).get(n); }

std::vector<SequencePair> sequence_range(Family family, long n_max) {
  std::vector<SequencePair> out;
  if (n_max < 0) return out;
  cache_for(family).get(n_max);
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (long n = 0; n <= n_max; ++n) out.push_back(cache_for(family).get(n));
  return out;
}

ClearingFactors clearing_factors(Family family, long n, InclusionMode mode) {
  if (n < 0) throw std::invalid_argument("clearing_factors: n must be nonnegative");
  const Integer d_n = lcm_upto(n);
  const Integer d_odd = lcm_upto(n == 0 ? 0 : 2 * n - 1);
  Integer pow_dn;
  Integer pow_dodd;
  if (family == Family::catalan) {
    if (mode == InclusionMode::proved) {
      const Integer two = pow2(static_cast<unsigned long>(4 * n + 3));
      mpz_pow_ui(pow_dodd.get_mpz_t(), d_odd.get_mpz_t(), 3);
      return {two * d_n, two * pow_dodd};
    }
    const Integer two = pow2(static_cast<unsigned long>(4 * n));
    mpz_pow_ui(pow_dodd.get_mpz_t(), d_odd.get_mpz_t(), 2);
    return {two, two * pow_dodd};
  }
  if (mode == InclusionMode::proved) {
    mpz_pow_ui(pow_dn.get_mpz_t(), d_n.get_mpz_t(), 5);
    return {6 * d_n, 6 * pow_dn};
  }
  mpz_pow_ui(pow_dn.get_mpz_t(), d_n.get_mpz_t(), 4);
  return {Integer(1), pow_dn};
}

InclusionReport check_inclusions(Family family, long n, InclusionMode mode) {
  const SequencePair pair = sequence_pair(family, n);
  const ClearingFactors f = clearing_factors(family, n, mode);
  Rational wu = pair.u * Rational(f.u);
  Rational wv = pair.v * Rational(f.v);
  const bool pu = wu.is_integer();
  const bool pv = wv.is_integer();
  return {family, n, mode, pu, pv, std::move(wu), std::move(wv)};
}

AsymptoticReport asymptotic_report(Family family, long n, int precision) {
  if (n < 2) throw std::invalid_argument("asymptotic_report: n must be at least 2");
  if (precision < 6) {
    throw PrecisionError("asymptotic_report: at least 6 digits are needed to resolve the rates");
  }
  const int working = precision + 15;
  const SequencePair at_n = sequence_pair(family, n);

  // C - v_n/u_n as the sum of consecutive convergent gaps. The gaps alternate
  // in sign and shrink geometrically, so no digits are lost to cancellation.
  const BigFloat threshold = pow10(-(precision + 5), working);
  BigFloat tail(working);
  Rational previous = at_n.v / at_n.u;
  const long cap = 2L * precision + 50;
  for (long m = n;; ++m) {
    if (m - n > cap) throw PrecisionError("asymptotic_report: linear-form tail did not settle");
    const SequencePair next = sequence_pair(family, m + 1);
    Rational ratio = next.v / next.u;
    const BigFloat gap(ratio - previous, working);
    previous = std::move(ratio);
    tail += gap;
    if (m > n && abs(gap) < abs(tail) * threshold) break;
  }

  const BigFloat u(at_n.u, working);
  const BigFloat form = abs(u * tail);
  return {family, n, log(u) / n, log(form) / n};
}

}  // namespace apery
