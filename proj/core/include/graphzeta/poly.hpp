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

#ifndef GRAPHZETA_POLY_HPP_
#define GRAPHZETA_POLY_HPP_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "graphzeta/rational.hpp"

namespace graphzeta {

// Dense univariate polynomial in u over the rationals. coefficient(i) is the
// coefficient of u^i; the highest stored coefficient is never zero, so the
// zero polynomial has no stored coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coefficients);
  Poly(std::initializer_list<Rational> coefficients);
  // The constant polynomial c.
  static Poly constant(const Rational& c);
  // c * u^k.
  static Poly monomial(const Rational& c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  // Zero past the stored range.
  Rational coefficient(std::size_t i) const;
  Rational leading() const;
  Rational constant_term() const { return coefficient(0); }

  Rational evaluate(const Rational& u) const;
  std::complex<long double> evaluate(std::complex<long double> u) const;

  Poly derivative() const;
  Poly pow(unsigned exponent) const;
  // Divides by the leading coefficient; zero stays zero.
  Poly monic() const;
  Poly scaled(const Rational& c) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend bool operator==(const Poly&, const Poly&) = default;

  // Human-readable form such as "1 - 3*u^2".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivRem {
  Poly quotient;
  Poly remainder;
};

// Euclidean division a = q*b + r with deg r < deg b. Throws InvalidArgument
// when b is zero.
DivRem divrem(const Poly& a, const Poly& b);

// Monic greatest common divisor via the subresultant remainder sequence.
// Throws InvalidArgument when both inputs are zero.
Poly gcd(const Poly& a, const Poly& b);

// Square-free decomposition: pairs (factor, multiplicity) with pairwise
// coprime monic factors whose product, with multiplicities, is p up to a
// constant. Throws InvalidArgument for the zero polynomial.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

}  // namespace graphzeta

#endif  // GRAPHZETA_POLY_HPP_
