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

#ifndef GRAPHZETA_RATFUNC_HPP_
#define GRAPHZETA_RATFUNC_HPP_

#include <string>

#include "graphzeta/poly.hpp"

namespace graphzeta {

// Reduced rational function num/den in u.
//
// Canonical form: gcd(num, den) = 1 and, when den(0) != 0, both parts are
// scaled so that den(0) = 1. Without a finite value at 0 the denominator is
// made monic instead. Because the form is canonical, operator== is plain
// structural equality.
class RatFunc {
 public:
  // The constant function 1.
  RatFunc();
  // Reduces num/den. Throws InvalidArgument when den is zero.
  static RatFunc reduce(const Poly& num, const Poly& den);
  static RatFunc from_poly(const Poly& p) { return reduce(p, Poly::constant(1)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  // Value at u = 0. Throws InvalidArgument if 0 is a pole.
  Rational value_at_zero() const;

  RatFunc pow(unsigned exponent) const;
  // Throws InvalidArgument when the function is identically zero.
  RatFunc inverse() const;

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  std::string to_string() const;

 private:
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_;
  Poly den_;
};

// Exact c-th power, c >= 1. Throws InvalidArgument for c = 0.
RatFunc ratfunc_pow(const RatFunc& f, unsigned c);

}  // namespace graphzeta

#endif  // GRAPHZETA_RATFUNC_HPP_
