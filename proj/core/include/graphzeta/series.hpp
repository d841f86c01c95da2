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

#ifndef GRAPHZETA_SERIES_HPP_
#define GRAPHZETA_SERIES_HPP_

#include <cstddef>
#include <vector>

#include "graphzeta/ratfunc.hpp"

namespace graphzeta {

// Power series truncated after u^order; coefficients().size() == order + 1.
class PowerSeries {
 public:
  PowerSeries(std::vector<Rational> coefficients, std::size_t order);
  static PowerSeries zero(std::size_t order);
  static PowerSeries one(std::size_t order);

  std::size_t order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }

  // Truncated product; the order is the smaller of the two.
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
  std::size_t order_;
};

// Taylor coefficients of f at 0 through u^order. Throws InvalidArgument when
// f has a pole at 0.
PowerSeries series_expand(const RatFunc& f, std::size_t order);

// Coefficients c_m of u * Z'(u) / Z(u), m = 0..order (c_0 is always 0).
// Equivalently c_m = m * [u^m] log Z. Throws InvalidArgument unless Z(0) = 1.
PowerSeries log_derivative_series(const RatFunc& z, std::size_t order);

}  // namespace graphzeta

#endif  // GRAPHZETA_SERIES_HPP_
