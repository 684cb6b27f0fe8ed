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

#include "apery/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace apery {

namespace {

// Integer image of a rational polynomial: p = coeffs / denominator.
struct Lifted {
  std::vector<Integer> coeffs;
  Integer denominator{1};
};

Lifted lift(std::span<const Rational> p) {
  Lifted out;
  for (const auto& c : p) {
    mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(),
            c.raw().get_den_mpz_t());
  }
  out.coeffs.reserve(p.size());
  for (const auto& c : p) {
    Integer v = out.denominator / c.denominator();
    v *= c.numerator();
    out.coeffs.push_back(std::move(v));
  }
  return out;
}

// Divides out the content so the coefficients are coprime integers with a
// positive leading coefficient.
std::vector<Integer> primitive_part(std::span<const Rational> p) {
  auto coeffs = lift(p).coeffs;
  Integer content = 0;
  for (const auto& c : coeffs) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (coeffs.back() < 0) content = -content;
  for (auto& c : coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  return coeffs;
}

// ---- arithmetic modulo a word-sized prime ---------------------------------

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 base, u64 e, u64 p) {
  u64 r = 1;
  base %= p;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, base, p);
    base = mulmod(base, base, p);
    e >>= 1U;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

u64 reduce(const Integer& v, u64 p) {
  return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p));
}

using PolyMod = std::vector<u64>;

void trim(PolyMod& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// f <- f mod g, g nonzero.
void rem_in_place(PolyMod& f, const PolyMod& g, u64 p) {
  const u64 inv_lead = invmod(g.back(), p);
  const std::size_t dg = g.size() - 1;
  while (f.size() >= g.size()) {
    const u64 factor = mulmod(f.back(), inv_lead, p);
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      const u64 sub = mulmod(factor, g[i], p);
      u64& dst = f[shift + i];
      dst = dst >= sub ? dst - sub : dst + p - sub;
    }
    trim(f);
  }
}

PolyMod gcd_mod(PolyMod a, PolyMod b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    rem_in_place(a, b, p);
    std::swap(a, b);
  }
  if (!a.empty()) {
    const u64 inv = invmod(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv, p);
  }
  return a;
}

// Primes just below 2^62, generated on demand and shared across threads.
u64 modular_prime(std::size_t index) {
  static std::mutex mutex;
  static std::vector<u64> primes;
  std::lock_guard lock(mutex);
  u64 candidate = primes.empty() ? (u64{1} << 62U) - 1 : primes.back() - 2;
  while (primes.size() <= index) {
    const Integer z(std::to_string(candidate));
    if (mpz_probab_prime_p(z.get_mpz_t(), 30) != 0) primes.push_back(candidate);
    candidate -= 2;
  }
  return primes[index];
}

Integer to_integer(u64 v) { return Integer(std::to_string(v)); }

Polynomial from_integers(const std::vector<Integer>& coeffs) {
  std::vector<Rational> r;
  r.reserve(coeffs.size());
  for (const auto& c : coeffs) r.emplace_back(c);
  return Polynomial(std::move(r));
}

bool divides(const Polynomial& d, const Polynomial& f) { return f.divmod(d).second.is_zero(); }

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  if (degree < 0) throw std::invalid_argument("Polynomial::monomial: negative degree");
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::linear(const Rational& a, const Rational& b) {
  return Polynomial(std::vector<Rational>{a, b});
}

Rational Polynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return Rational{};
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Polynomial::leading() const {
  if (is_zero()) throw std::domain_error("Polynomial: zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  // Convolve integer images and divide once at the end; this avoids a gcd
  // per coefficient product.
  const Lifted a = lift(coeffs_);
  const Lifted b = lift(rhs.coeffs_);
  std::vector<Integer> prod(a.coeffs.size() + b.coeffs.size() - 1);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      mpz_addmul(prod[i + j].get_mpz_t(), a.coeffs[i].get_mpz_t(), b.coeffs[j].get_mpz_t());
    }
  }
  const Integer den = a.denominator * b.denominator;
  coeffs_.clear();
  coeffs_.reserve(prod.size());
  for (auto& c : prod) coeffs_.emplace_back(c, den);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  }
  return Polynomial(std::move(d));
}

std::vector<Rational> Polynomial::taylor_coefficients(const Rational& center, int count) const {
  std::vector<Rational> out(static_cast<std::size_t>(std::max(count, 0)));
  std::vector<Rational> work = coeffs_;
  // Each synthetic division by (t - center) peels off the next coefficient.
  for (int k = 0; k < count && !work.empty(); ++k) {
    for (std::size_t i = work.size() - 1; i > 0; --i) work[i - 1] += work[i] * center;
    out[static_cast<std::size_t>(k)] = work.front();
    work.erase(work.begin());
  }
  return out;
}

Polynomial Polynomial::shift(const Rational& c) const {
  if (c.is_zero() || is_zero()) return *this;
  return Polynomial(taylor_coefficients(c, static_cast<int>(coeffs_.size())));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Polynomial r = *this;
  const Rational inv = leading().inverse();
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
  if (degree() < divisor.degree()) return {Polynomial{}, *this};
  std::vector<Rational> rem = coeffs_;
  std::vector<Rational> quot(coeffs_.size() - divisor.coeffs_.size() + 1);
  const Rational inv_lead = divisor.leading().inverse();
  const std::size_t dd = divisor.coeffs_.size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational& top = rem[k + dd];
    if (top.is_zero()) continue;
    const Rational factor = top * inv_lead;
    for (std::size_t i = 0; i <= dd; ++i) rem[k + i] -= factor * divisor.coeffs_[i];
    quot[k] = factor;
  }
  rem.resize(dd);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::exact_divide(const Polynomial& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw std::domain_error("Polynomial::exact_divide: nonzero remainder");
  return q;
}

std::string Polynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << '-';
    first = false;
    const Rational a = c.abs();
    if (i == 0 || !a.is_one()) os << a;
    if (i > 0) {
      os << var;
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial gcd_euclid(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return Polynomial(1);
  // A short Euclidean remainder sequence is cheaper than any modular image.
  if (std::min(a.degree(), b.degree()) <= 4) return gcd_euclid(a, b);

  const std::vector<Integer> A = primitive_part(a.coefficients());
  const std::vector<Integer> B = primitive_part(b.coefficients());
  Integer lc_bound;
  mpz_gcd(lc_bound.get_mpz_t(), A.back().get_mpz_t(), B.back().get_mpz_t());

  // H holds lc_bound * (monic gcd) modulo M, combined by CRT over good primes.
  std::vector<Integer> H;
  Integer M = 1;
  int current_degree = -1;
  Polynomial last_candidate;

  for (std::size_t idx = 0;; ++idx) {
    const u64 p = modular_prime(idx);
    if (reduce(A.back(), p) == 0 || reduce(B.back(), p) == 0) continue;
    PolyMod Ap(A.size()), Bp(B.size());
    for (std::size_t i = 0; i < A.size(); ++i) Ap[i] = reduce(A[i], p);
    for (std::size_t i = 0; i < B.size(); ++i) Bp[i] = reduce(B[i], p);
    PolyMod G = gcd_mod(std::move(Ap), std::move(Bp), p);
    const int d = static_cast<int>(G.size()) - 1;
    if (d == 0) return Polynomial(1);
    const u64 scale = reduce(lc_bound, p);
    for (auto& c : G) c = mulmod(c, scale, p);

    if (current_degree < 0 || d < current_degree) {
      // First image, or every earlier prime was unlucky.
      current_degree = d;
      H.assign(G.size(), Integer{});
      for (std::size_t i = 0; i < G.size(); ++i) H[i] = to_integer(G[i]);
      M = to_integer(p);
      last_candidate = Polynomial{};
      continue;
    }
    if (d > current_degree) continue;

    const u64 m_inv = invmod(reduce(M, p), p);
    for (std::size_t i = 0; i < G.size(); ++i) {
      const u64 h = reduce(H[i], p);
      const u64 diff = G[i] >= h ? G[i] - h : G[i] + p - h;
      const u64 t = mulmod(diff, m_inv, p);
      H[i] += M * to_integer(t);
    }
    M *= to_integer(p);

    const Integer half = M / 2;
    std::vector<Integer> sym = H;
    for (auto& c : sym) {
      if (c > half) c -= M;
    }
    Polynomial candidate = from_integers(sym).monic();
    if (candidate == last_candidate && divides(candidate, a) && divides(candidate, b)) {
      return candidate;
    }
    last_candidate = std::move(candidate);
  }
}

Polynomial from_roots(std::span<const Rational> roots) {
  Polynomial r(1);
  for (const auto& root : roots) r *= Polynomial::linear(-root, 1);
  return r;
}

}  // namespace apery
