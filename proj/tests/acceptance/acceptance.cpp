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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "apery/analytic.hpp"
#include "apery/certificate.hpp"
#include "apery/hypergeom.hpp"
#include "apery/sequences.hpp"

using namespace apery;

namespace {

// Pinned tolerances and ranges.
constexpr long kConvergenceIndex = 10;
constexpr long kConvergenceExponent = 20;
constexpr long kProvedMax = 200;
constexpr long kStrongMax = 500;
constexpr long kCertificateMax = 50;
constexpr long kCrossPathMax = 20;
constexpr long kReconstructMax = 20;
constexpr long kLemmaMax = 10;
constexpr long kNumericMax = 10;
constexpr int kNumericDigits = 40;
constexpr long kNumericExponent = 35;
constexpr long kIntegralMax = 3;
constexpr int kIntegralDigits = 8;
constexpr long kIntegralExponent = 7;
constexpr long kCfMax = 50;
constexpr long kCatalanRateIndex = 500;
constexpr long kZeta4RateIndex = 300;
constexpr int kRateDigits = 700;
constexpr double kRateWindow = 0.05;
constexpr double kCatalanRate = 2.40605912;
constexpr double kZeta4RateU = 5.59879212;
constexpr double kZeta4RateForm = -2.30295525;
constexpr long kSeriesMax = 3;
constexpr int kSeriesDigits = 6;
constexpr long kSeriesExponent = 5;

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome initial_data() {
  const auto c0 = catalan_pair(0), c1 = catalan_pair(1);
  const auto z0 = zeta4_pair(0), z1 = zeta4_pair(1);
  const bool ok = c0.u == Rational(1) && c0.v == Rational(0) && c1.u == Rational(Integer(7), Integer(4)) &&
                  c1.v == Rational(Integer(13), Integer(8)) && z0.u == Rational(1) && z0.v == Rational(0) &&
                  z1.u == Rational(12) && z1.v == Rational(13);
  return {ok, "catalan (" + c1.u.to_string() + ", " + c1.v.to_string() + "), zeta4 (" + z1.u.to_string() + ", " +
                  z1.v.to_string() + ")"};
}

Outcome convergence_claim() {
  const int working = 60;
  const auto p = catalan_pair(kConvergenceIndex);
  const BigFloat gap = abs(BigFloat(p.v / p.u, working) - reference_catalan(working - 15));
  return {gap < pow10(-kConvergenceExponent, working), "|v_10/u_10 - G| = " + gap.to_scientific(3)};
}

Outcome inclusions() {
  long failures = 0;
  for (Family f : {Family::catalan, Family::zeta4}) {
    for (long n = 0; n <= kProvedMax; ++n) failures += !check_inclusions(f, n, InclusionMode::proved).pass();
    for (long n = 0; n <= kStrongMax; ++n) failures += !check_inclusions(f, n, InclusionMode::strong).pass();
  }
  return {failures == 0, std::to_string(failures) + " failing (family, n, mode) cases"};
}

Outcome certificate() {
  long failures = 0;
  for (long n = 1; n <= kCertificateMax; ++n) {
    failures += !verify_telescoping(n);
    failures += !build_certificate(n).S.evaluate(Rational(0)).is_zero();
  }
  return {failures == 0, std::to_string(failures) + " failures over n = 1..50"};
}

Outcome cross_path() {
  long failures = 0;
  for (long n = 0; n <= kCrossPathMax; ++n) {
    const auto q = coefficient_quadruple(n);
    const auto p = catalan_pair(n);
    failures += !(q.Uprime == p.u * Rational(8) && q.V == p.v * Rational(8) && q.U.is_zero() &&
                  q.Udoubleprime.is_zero());
  }
  return {failures == 0, std::to_string(failures) + " mismatches over n = 0..20"};
}

Outcome reconstruction() {
  long rebuild = 0, lemmas = 0;
  for (long n = 0; n <= kReconstructMax; ++n) rebuild += !ratfun_equal(reconstruct(partial_fractions(n)), kernel(n));
  for (long n = 0; n <= kLemmaMax; ++n) lemmas += !check_arith_lemmas(n);
  return {rebuild == 0 && lemmas == 0,
          std::to_string(rebuild) + " reconstruction and " + std::to_string(lemmas) + " lemma failures"};
}

Outcome numeric_decomposition() {
  const int working = kNumericDigits + 20;
  const BigFloat g = reference_catalan(working);
  BigFloat worst(working);
  for (long n = 0; n <= kNumericMax; ++n) {
    const auto q = coefficient_quadruple(n);
    const BigFloat form = BigFloat(q.Uprime, working) * g - BigFloat(q.V, working);
    worst = std::max(worst, abs(f_numeric(n, kNumericDigits) - form));
  }
  return {worst < pow10(-kNumericExponent, working), "max residual " + worst.to_scientific(3)};
}

Outcome integral_identity() {
  const int working = 30;
  const BigFloat g = reference_catalan(working);
  BigFloat worst(working);
  std::ostringstream ratios;
  for (long n = 0; n <= kIntegralMax; ++n) {
    const auto p = catalan_pair(n);
    const BigFloat form = BigFloat(p.u, working) * g - BigFloat(p.v, working);
    const BigFloat integral = beukers_integral(n, kIntegralDigits);
    const BigFloat predicted = integral / (n % 2 == 0 ? 4 : -4);
    worst = std::max(worst, abs(predicted - form));
    ratios << (n ? ", " : "") << (integral / form).to_fixed(4);
  }
  return {worst < pow10(-kIntegralExponent, working),
          "max residual " + worst.to_scientific(3) + ", integral/(u_n G - v_n) = " + ratios.str()};
}

Outcome continued_fractions() {
  long failures = 0;
  for (Family f : {Family::catalan, Family::zeta4}) {
    for (long n = 1; n <= kCfMax; ++n) {
      const auto p = sequence_pair(f, n);
      failures += !(cf_convergent(f, n).value == p.v / p.u);
    }
  }
  const Rational c1 = cf_convergent(Family::catalan, 1).value;
  const Rational z1 = cf_convergent(Family::zeta4, 1).value;
  const bool first = c1 == Rational(Integer(13), Integer(14)) && z1 == Rational(Integer(13), Integer(12));
  return {failures == 0 && first,
          std::to_string(failures) + " mismatches, first convergents " + c1.to_string() + " and " + z1.to_string()};
}

Outcome asymptotics() {
  const auto c = asymptotic_report(Family::catalan, kCatalanRateIndex, kRateDigits);
  const auto z = asymptotic_report(Family::zeta4, kZeta4RateIndex, kRateDigits);
  const double dev[4] = {
      std::abs(c.rate_u.to_double() - kCatalanRate),
      std::abs(c.rate_form.to_double() + kCatalanRate),
      std::abs(z.rate_u.to_double() - kZeta4RateU),
      std::abs(z.rate_form.to_double() - kZeta4RateForm),
  };
  bool ok = true;
  for (double d : dev) ok = ok && d < kRateWindow;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "catalan(500) %.5f / %.5f, zeta4(300) %.5f / %.5f; deviations %.4f %.4f %.4f %.4f",
                c.rate_u.to_double(), c.rate_form.to_double(), z.rate_u.to_double(), z.rate_form.to_double(), dev[0],
                dev[1], dev[2], dev[3]);
  return {ok, buf};
}

Outcome zeta4_series_check() {
  const int working = 30;
  const BigFloat z = reference_zeta4(working);
  BigFloat worst(working);
  for (long n = 0; n <= kSeriesMax; ++n) {
    const auto p = zeta4_pair(n);
    const BigFloat form = BigFloat(p.u, working) * z - BigFloat(p.v, working);
    worst = std::max(worst, abs(zeta4_series(n, kSeriesDigits) - form));
  }
  return {worst < pow10(-kSeriesExponent, working), "max residual " + worst.to_scientific(3)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"initial data and early terms", initial_data},
      {"convergence |v_10/u_10 - G| < 1e-20", convergence_claim},
      {"proved (n <= 200) and strong (n <= 500) inclusions", inclusions},
      {"telescoping certificate and S_n(0) = 0, n <= 50", certificate},
      {"8u_n = U'_n, 8v_n = V_n, U_n = U''_n = 0, n <= 20", cross_path},
      {"partial-fraction reconstruction and arithmetic lemmas", reconstruction},
      {"f_numeric(n, 40) vs U'_n G - V_n within 1e-35, n <= 10", numeric_decomposition},
      {"integral identity residual < 1e-7, n <= 3", integral_identity},
      {"continued fractions equal v_n/u_n, n <= 50", continued_fractions},
      {"asymptotic log rates within 0.05", asymptotics},
      {"zeta(4) series residual < 1e-5, n <= 3", zeta4_series_check},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome{false, ""};
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !outcome.pass;
    std::printf("%s [%2zu] %s: %s (%.2f s)\n", outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                outcome.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
