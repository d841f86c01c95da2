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

#include "graphzeta/ratfunc.hpp"

#include "graphzeta/error.hpp"

namespace graphzeta {

RatFunc::RatFunc() : num_(Poly::constant(1)), den_(Poly::constant(1)) {}

RatFunc RatFunc::reduce(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw InvalidArgument("rational function with zero denominator");
  if (num.is_zero()) return RatFunc(Poly(), Poly::constant(1));
  const Poly g = gcd(num, den);
  Poly n = divrem(num, g).quotient;
  Poly d = divrem(den, g).quotient;
  const Rational anchor = d.constant_term().is_zero() ? d.leading() : d.constant_term();
  const Rational scale = Rational(1) / anchor;
  return RatFunc(n.scaled(scale), d.scaled(scale));
}

Rational RatFunc::value_at_zero() const {
  if (den_.constant_term().is_zero()) throw InvalidArgument("rational function has a pole at 0");
  return num_.constant_term() / den_.constant_term();
}

RatFunc RatFunc::pow(unsigned exponent) const {
  // Coprime parts stay coprime under powers; only the anchor needs rescaling,
  // and den(0)^c = 1 already, so the result is canonical.
  if (!den_.constant_term().is_zero()) return RatFunc(num_.pow(exponent), den_.pow(exponent));
  return reduce(num_.pow(exponent), den_.pow(exponent));
}

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw InvalidArgument("inverse of the zero rational function");
  return reduce(den_, num_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc::reduce(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

std::string RatFunc::to_string() const {
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RatFunc ratfunc_pow(const RatFunc& f, unsigned c) {
  if (c == 0) throw InvalidArgument("ratfunc_pow exponent must be at least 1");
  return f.pow(c);
}

}  // namespace graphzeta
