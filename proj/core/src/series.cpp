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

#include "graphzeta/series.hpp"

#include <algorithm>

#include "graphzeta/error.hpp"

namespace graphzeta {

namespace {

// Coefficients L_m of u p'(u) / p(u) for p(0) = 1, from p L = u p'.
std::vector<mpq_class> log_derivative_of_poly(const Poly& p, std::size_t order) {
  std::vector<mpq_class> pc(order + 1);
  for (std::size_t i = 0; i <= order && i < p.coefficients().size(); ++i) {
    pc[i] = p.coefficients()[i].value();
  }
  std::vector<mpq_class> out(order + 1);
  for (std::size_t m = 1; m <= order; ++m) {
    mpq_class acc = pc[m] * static_cast<unsigned long>(m);
    for (std::size_t k = 1; k < m; ++k) {
      if (sgn(pc[k]) != 0) acc -= pc[k] * out[m - k];
    }
    out[m] = acc;
  }
  return out;
}

}  // namespace

PowerSeries::PowerSeries(std::vector<Rational> coefficients, std::size_t order)
    : coeffs_(std::move(coefficients)), order_(order) {
  coeffs_.resize(order + 1);
}

PowerSeries PowerSeries::zero(std::size_t order) { return PowerSeries({}, order); }

PowerSeries PowerSeries::one(std::size_t order) { return PowerSeries({Rational(1)}, order); }

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t order = std::min(a.order_, b.order_);
  std::vector<mpq_class> acc(order + 1);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      acc[i + j] += a.coeffs_[i].value() * b.coeffs_[j].value();
    }
  }
  std::vector<Rational> out;
  out.reserve(acc.size());
  for (auto& v : acc) out.emplace_back(v.get_num(), v.get_den());
  return PowerSeries(std::move(out), order);
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t order = std::min(a.order_, b.order_);
  std::vector<Rational> out(order + 1);
  for (std::size_t i = 0; i <= order; ++i) out[i] = a.coeffs_[i] + b.coeffs_[i];
  return PowerSeries(std::move(out), order);
}

PowerSeries series_expand(const RatFunc& f, std::size_t order) {
  const Poly& den = f.den();
  if (den.constant_term().is_zero()) throw InvalidArgument("series_expand: pole at u = 0");
  const mpq_class d0 = den.constant_term().value();
  std::vector<mpq_class> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    mpq_class acc = f.num().coefficient(n).value();
    const std::size_t kmax = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(den.degree(), 0)));
    for (std::size_t k = 1; k <= kmax; ++k) {
      const mpq_class& dk = den.coefficients()[k].value();
      if (sgn(dk) != 0) acc -= dk * c[n - k];
    }
    c[n] = acc / d0;
  }
  std::vector<Rational> out;
  out.reserve(c.size());
  for (auto& v : c) out.emplace_back(v.get_num(), v.get_den());
  return PowerSeries(std::move(out), order);
}

PowerSeries log_derivative_series(const RatFunc& z, std::size_t order) {
  if (z.den().constant_term().is_zero() || !z.value_at_zero().is_one()) {
    throw InvalidArgument("log_derivative_series requires Z(0) = 1");
  }
  // In canonical form den(0) = 1, hence num(0) = 1 as well.
  const auto ln = log_derivative_of_poly(z.num(), order);
  const auto ld = log_derivative_of_poly(z.den(), order);
  std::vector<Rational> out(order + 1);
  for (std::size_t m = 1; m <= order; ++m) {
    const mpq_class v = ln[m] - ld[m];
    out[m] = Rational(v.get_num(), v.get_den());
  }
  return PowerSeries(std::move(out), order);
}

}  // namespace graphzeta
