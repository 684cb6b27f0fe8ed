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

#include "apery/cli.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "apery/analytic.hpp"
#include "apery/certificate.hpp"
#include "apery/hypergeom.hpp"
#include "apery/sequences.hpp"

namespace apery::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  bool quiet = false;
  std::string family = "catalan";
  std::string constant = "catalan";
  std::string mode = "proved";
  std::string format = "json";
  long n = 0;
  long n_max = 0;
  int digits = 10;
};

class Session {
 public:
  Session(const Options& opts, std::ostream& out, std::ostream& err) : opts_(opts), out_(out), err_(err) {}

  void log(const std::string& message) const {
    if (!opts_.quiet) err_ << "apery: " << message << '\n';
  }

  void emit(const Json& record) const { out_ << record.dump() << std::endl; }

  void emit_csv(const std::vector<std::string>& cells) const {
    for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
    out_ << std::endl;
  }

  bool csv() const { return opts_.format == "csv"; }
  const Options& opts() const { return opts_; }

 private:
  const Options& opts_;
  std::ostream& out_;
  std::ostream& err_;
};

std::string sci(const BigFloat& x, int significant = 6) { return x.to_scientific(significant); }

Status cmd_pair(const Session& s, Family family, long first, long last) {
  if (s.csv()) s.emit_csv({"n", "u", "v"});
  for (long n = first; n <= last; ++n) {
    const SequencePair p = sequence_pair(family, n);
    if (s.csv()) {
      s.emit_csv({std::to_string(n), p.u.to_string(), p.v.to_string()});
    } else {
      s.emit(Json{{"n", n}, {"u", p.u.to_string()}, {"v", p.v.to_string()}});
    }
  }
  return Status::ok;
}

Status cmd_check(const Session& s) {
  const Family family = parse_family(s.opts().family);
  const InclusionMode mode = parse_inclusion_mode(s.opts().mode);
  s.log("checking " + s.opts().mode + " inclusions for " + s.opts().family);
  if (s.csv()) s.emit_csv({"family", "n", "mode", "pass_u", "pass_v", "witness_u", "witness_v"});
  bool all = true;
  for (long n = 0; n <= s.opts().n_max; ++n) {
    const InclusionReport r = check_inclusions(family, n, mode);
    all = all && r.pass();
    if (s.csv()) {
      s.emit_csv({std::string(to_string(family)), std::to_string(n), std::string(to_string(mode)),
                  r.pass_u ? "true" : "false", r.pass_v ? "true" : "false", r.witness_u.to_string(),
                  r.witness_v.to_string()});
    } else {
      s.emit(Json{{"family", to_string(family)}, {"n", n}, {"mode", to_string(mode)}, {"pass_u", r.pass_u},
                  {"pass_v", r.pass_v}, {"witness_u", r.witness_u.to_string()},
                  {"witness_v", r.witness_v.to_string()}});
    }
  }
  return all ? Status::ok : Status::verification_failed;
}

Status cmd_decompose(const Session& s) {
  const long n = s.opts().n;
  const PartialFractionTable table = partial_fractions(n);
  const CoefficientQuadruple q = coefficient_quadruple(n);
  const SequencePair p = catalan_pair(n);
  Json rows = Json::array();
  for (int j = 0; j < 3; ++j) {
    Json row = Json::array();
    for (long k = 0; k <= n; ++k) row.push_back(table.at(j, k).to_string());
    rows.push_back(std::move(row));
  }
  const bool consistent = q.U.is_zero() && q.Udoubleprime.is_zero() && q.Uprime == p.u * Rational(8) &&
                          q.V == p.v * Rational(8);
  const bool reconstructs = ratfun_equal(reconstruct(table), kernel(n));
  s.emit(Json{{"n", n},
              {"A", rows},
              {"U", q.U.to_string()},
              {"Uprime", q.Uprime.to_string()},
              {"Udoubleprime", q.Udoubleprime.to_string()},
              {"V", q.V.to_string()},
              {"reconstructs", reconstructs},
              {"matches_sequences", consistent}});
  return consistent && reconstructs ? Status::ok : Status::verification_failed;
}

Status cmd_certify(const Session& s) {
  if (s.opts().family != "catalan") {
    throw std::invalid_argument("certify: only the catalan family carries a certificate");
  }
  bool all = true;
  for (long n = 1; n <= s.opts().n_max; ++n) {
    s.log("certifying n = " + std::to_string(n));
    const bool telescopes = verify_telescoping(n);
    const bool vanishes = build_certificate(n).S.evaluate(Rational(0)).is_zero();
    all = all && telescopes && vanishes;
    s.emit(Json{{"n", n}, {"telescoping", telescopes}, {"S_at_zero_vanishes", vanishes}});
  }
  return all ? Status::ok : Status::verification_failed;
}

Status cmd_cf(const Session& s) {
  const Family family = parse_family(s.opts().family);
  const CFConvergent c = cf_convergent(family, s.opts().n);
  const SequencePair p = sequence_pair(family, s.opts().n);
  const bool equal = c.value == p.v / p.u;
  s.emit(Json{{"family", to_string(family)}, {"n", c.n}, {"value", c.value.to_string()}, {"equals_ratio", equal}});
  return equal ? Status::ok : Status::verification_failed;
}

Status cmd_digits(const Session& s) {
  const DigitsResult r = constant_digits(parse_family(s.opts().constant), s.opts().digits);
  s.emit(Json{{"constant", to_string(r.constant)},
              {"digits", r.digits},
              {"value", r.value},
              {"n_used", r.n_used},
              {"error_bound", sci(r.error_bound)}});
  return Status::ok;
}

Json residual_record(long n, int digits, const char* name, const BigFloat& computed, const BigFloat& expected,
                     bool& pass) {
  const BigFloat residual = abs(computed - expected);
  const BigFloat tolerance = pow10(-(digits - 1), digits + 15);
  pass = residual < tolerance;
  return Json{{"n", n},
              {"digits", digits},
              {name, computed.to_fixed(digits + 2)},
              {"linear_form", expected.to_fixed(digits + 2)},
              {"residual", sci(residual, 3)},
              {"tolerance", sci(tolerance, 1)},
              {"pass", pass}};
}

Status cmd_integral(const Session& s) {
  const long n = s.opts().n;
  const int d = s.opts().digits;
  const BigFloat integral = beukers_integral(n, d);
  const BigFloat predicted = integral / (n % 2 == 0 ? 4 : -4);
  const SequencePair p = catalan_pair(n);
  const int working = d + 15;
  const BigFloat form = BigFloat(p.u, working) * reference_catalan(d + 5) - BigFloat(p.v, working);
  bool pass = false;
  Json record = residual_record(n, d, "signed_quarter_integral", predicted, form, pass);
  record["integral"] = integral.to_fixed(d + 2);
  if (!form.is_zero()) record["integral_over_linear_form"] = (integral / form).to_fixed(6);
  s.emit(record);
  return pass ? Status::ok : Status::verification_failed;
}

Status cmd_series(const Session& s) {
  if (s.opts().constant != "zeta4") throw std::invalid_argument("series: only --constant zeta4 is available");
  const long n = s.opts().n;
  const int d = s.opts().digits;
  const BigFloat value = zeta4_series(n, d);
  const SequencePair p = zeta4_pair(n);
  const int working = d + 15;
  const BigFloat form = BigFloat(p.u, working) * reference_zeta4(d + 5) - BigFloat(p.v, working);
  bool pass = false;
  s.emit(residual_record(n, d, "series", value, form, pass));
  return pass ? Status::ok : Status::verification_failed;
}

Status cmd_asymptotics(const Session& s) {
  const Family family = parse_family(s.opts().family);
  const AsymptoticReport r = asymptotic_report(family, s.opts().n, s.opts().digits);
  s.emit(Json{{"family", to_string(family)},
              {"n", r.n},
              {"rate_u", r.rate_u.to_fixed(10)},
              {"rate_form", r.rate_form.to_fixed(10)}});
  return Status::ok;
}

}  // namespace

Status run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Exact and numerical checks for Apery-like recurrences"};
  app.name("apery");
  app.require_subcommand(1);
  app.add_flag("-q,--quiet", opts.quiet, "Suppress log messages");

  const std::vector<std::string> families{"catalan", "zeta4"};
  auto family_opt = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--family", opts.family, "catalan or zeta4")->check(CLI::IsMember(families));
    if (required) o->required();
  };
  auto format_opt = [&](CLI::App* sub) {
    sub->add_option("--format", opts.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };
  auto n_opt = [&](CLI::App* sub) { sub->add_option("--n", opts.n, "Index")->required()->check(CLI::NonNegativeNumber); };
  auto n_max_opt = [&](CLI::App* sub) {
    sub->add_option("--n-max", opts.n_max, "Largest index")->required()->check(CLI::NonNegativeNumber);
  };
  auto digits_opt = [&](CLI::App* sub) {
    sub->add_option("--digits", opts.digits, "Decimal digits")->required()->check(CLI::PositiveNumber);
  };

  auto* pair = app.add_subcommand("pair", "Exact (u_n, v_n)");
  family_opt(pair, true);
  n_opt(pair);
  format_opt(pair);
  auto* range = app.add_subcommand("range", "Stream (u_n, v_n) for n = 0..n-max");
  family_opt(range, true);
  n_max_opt(range);
  format_opt(range);
  auto* check = app.add_subcommand("check", "Denominator inclusions for n = 0..n-max");
  family_opt(check, true);
  n_max_opt(check);
  check->add_option("--mode", opts.mode, "proved or strong")->required()->check(CLI::IsMember({"proved", "strong"}));
  format_opt(check);
  auto* decompose = app.add_subcommand("decompose", "Partial-fraction table and coefficients of F_n");
  n_opt(decompose);
  auto* certify = app.add_subcommand("certify", "Exact telescoping check for n = 1..n-max");
  family_opt(certify, true);
  n_max_opt(certify);
  auto* cf = app.add_subcommand("cf", "Continued-fraction convergent");
  family_opt(cf, true);
  n_opt(cf);
  auto* digits = app.add_subcommand("digits", "Certified digits of the constant");
  digits->add_option("--constant", opts.constant, "catalan or zeta4")->required()->check(CLI::IsMember(families));
  digits_opt(digits);
  auto* integral = app.add_subcommand("integral", "Double-integral identity residual");
  n_opt(integral);
  digits_opt(integral);
  auto* series = app.add_subcommand("series", "zeta(4) series residual");
  series->add_option("--constant", opts.constant, "zeta4")->required()->check(CLI::IsMember({"zeta4"}));
  n_opt(series);
  digits_opt(series);
  auto* asymptotics = app.add_subcommand("asymptotics", "Per-step log rates of u_n and the linear form");
  family_opt(asymptotics, true);
  n_opt(asymptotics);
  digits_opt(asymptotics);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Status::ok : Status::usage_error;
  }

  const Session session(opts, out, err);
  try {
    if (*pair) return cmd_pair(session, parse_family(opts.family), opts.n, opts.n);
    if (*range) return cmd_pair(session, parse_family(opts.family), 0, opts.n_max);
    if (*check) return cmd_check(session);
    if (*decompose) return cmd_decompose(session);
    if (*certify) return cmd_certify(session);
    if (*cf) return cmd_cf(session);
    if (*digits) return cmd_digits(session);
    if (*integral) return cmd_integral(session);
    if (*series) return cmd_series(session);
    if (*asymptotics) return cmd_asymptotics(session);
  } catch (const PrecisionError& e) {
    err << "apery: precision error: " << e.what() << '\n';
    return Status::precision_error;
  } catch (const std::invalid_argument& e) {
    err << "apery: " << e.what() << '\n';
    return Status::usage_error;
  } catch (const std::domain_error& e) {
    err << "apery: " << e.what() << '\n';
    return Status::usage_error;
  }
  return Status::usage_error;
}

}  // namespace apery::cli
