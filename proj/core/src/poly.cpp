// Copyright 2026 The graphzeta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "graphzeta/poly.hpp"

#include <algorithm>

#include "graphzeta/error.hpp"

namespace graphzeta {

namespace {

using IntCoeffs = std::vector<mpz_class>;

int int_degree(const IntCoeffs& p) { return static_cast<int>(p.size()) - 1; }

void int_trim(IntCoeffs& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Clears denominators and removes the integer content; the result is a
// primitive integer polynomial proportional to p.
IntCoeffs primitive_part(const Poly& p) {
  mpz_class lcm_den = 1;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.value().get_den_mpz_t());
  }
  IntCoeffs out;
  out.reserve(p.coefficients().size());
  mpz_class content = 0;
  for (const auto& c : p.coefficients()) {
    mpz_class v = c.numerator() * (lcm_den / c.denominator());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (content > 1) {
    for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  }
  return out;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed over Z.
IntCoeffs pseudo_remainder(IntCoeffs a, const IntCoeffs& b) {
  const int db = int_degree(b);
  const mpz_class& lb = b.back();
  int steps = int_degree(a) - db + 1;
  while (int_degree(a) >= db) {
    const int shift = int_degree(a) - db;
    const mpz_class lead = a.back();
    for (auto& c : a) c *= lb;
    for (int i = 0; i <= db; ++i) a[i + shift] -= lead * b[i];
    int_trim(a);
    --steps;
  }
  if (steps > 0) {
    mpz_class f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(steps));
    for (auto& c : a) c *= f;
  }
  return a;
}

Poly from_integers(const IntCoeffs& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& v : p) c.emplace_back(v);
  return Poly(std::move(c));
}

}  // namespace

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational();
}

Rational Poly::leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

Rational Poly::evaluate(const Rational& u) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= u;
    acc += *it;
  }
  return acc;
}

std::complex<long double> Poly::evaluate(std::complex<long double> u) const {
  std::complex<long double> acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * u + it->to_long_double();
  }
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    d[i - 1] = coeffs_[i] * Rational(static_cast<std::int64_t>(i));
  }
  return Poly(std::move(d));
}

Poly Poly::pow(unsigned exponent) const {
  Poly result = Poly::constant(1);
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / leading());
}

Poly Poly::scaled(const Rational& c) const {
  if (c.is_zero()) return Poly();
  std::vector<Rational> v = coeffs_;
  for (auto& x : v) x *= c;
  return Poly(std::move(v));
}

Poly Poly::operator-() const { return scaled(Rational(-1)); }

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Poly();
  std::vector<mpq_class> acc(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      acc[i + j] += lhs.coeffs_[i].value() * rhs.coeffs_[j].value();
    }
  }
  std::vector<Rational> out;
  out.reserve(acc.size());
  for (auto& v : acc) out.emplace_back(v.get_num(), v.get_den());
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = c.abs();
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool show_coeff = i == 0 || !mag.is_one();
    if (show_coeff) out += mag.to_string();
    if (i > 0) {
      if (show_coeff) out += "*";
      out += "u";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

DivRem divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  const Rational inv_lead = Rational(1) / b.leading();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational factor = rem[static_cast<std::size_t>(k + db)] * inv_lead;
    if (factor.is_zero()) continue;
    quot[static_cast<std::size_t>(k)] = factor;
    for (int i = 0; i <= db; ++i) {
      rem[static_cast<std::size_t>(k + i)] -= factor * b.coefficients()[static_cast<std::size_t>(i)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw InvalidArgument("gcd of two zero polynomials");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();

  IntCoeffs f = primitive_part(a);
  IntCoeffs g = primitive_part(b);
  if (int_degree(f) < int_degree(g)) std::swap(f, g);
  if (int_degree(g) == 0) return Poly::constant(1);

  // Subresultant PRS (Collins/Brown): divide each pseudo-remainder by
  // g * h^delta so coefficients grow only polynomially.
  mpz_class gg = 1;
  mpz_class h = 1;
  while (true) {
    const int delta = int_degree(f) - int_degree(g);
    IntCoeffs r = pseudo_remainder(f, g);
    if (r.empty()) break;
    if (int_degree(r) == 0) return Poly::constant(1);
    mpz_class hpow;
    mpz_pow_ui(hpow.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    const mpz_class divisor = gg * hpow;
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    f = std::move(g);
    g = std::move(r);
    gg = f.back();
    // h <- g^delta / h^(delta - 1)
    if (delta > 0) {
      mpz_class num;
      mpz_pow_ui(num.get_mpz_t(), gg.get_mpz_t(), static_cast<unsigned long>(delta));
      mpz_class den;
      mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
  return from_integers(g).monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw InvalidArgument("square-free decomposition of zero");
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() == 0) return out;
  // Yun's algorithm.
  const Poly f = p.monic();
  const Poly df = f.derivative();
  Poly a = gcd(f, df);
  Poly b = divrem(f, a).quotient;
  Poly c = divrem(df, a).quotient;
  Poly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    a = gcd(b, d);
    b = divrem(b, a).quotient;
    c = divrem(d, a).quotient;
    if (a.degree() > 0) out.emplace_back(a.monic(), i);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

}  // namespace graphzeta
