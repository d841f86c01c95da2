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

#include "graphzeta/zeta.hpp"

#include <map>

#include "graphzeta/error.hpp"
#include "graphzeta/transfer.hpp"

namespace graphzeta {

RatFunc SelbergZeta::expand() const { return ratfunc_pow(base, static_cast<unsigned>(exponent)); }

ZetaResult bass_ihara_zeta(const CuspidalGraph& c) {
  const EffectiveMatrix eff = build_effective(c);
  Poly det = poly_det(eff.matrix);
  if (det.is_zero()) throw ComputationError("effective determinant vanishes identically");
  Poly prefactor = Poly::constant(1);
  for (auto q : eff.cusp_qs) prefactor *= Poly{Rational(1), Rational(0), Rational(-q)};
  ZetaResult r;
  r.bass_ihara = RatFunc::reduce(prefactor, det);
  r.selberg = {r.bass_ihara, c.central_order};
  r.cusp_count = eff.cusp_count;
  r.raw_determinant = std::move(det);
  return r;
}

ZetaResult bass_ihara_zeta(const EdgeIndexedGraph& g) {
  const TransferMatrix t = build_transfer(g);
  Poly det = poly_det(t.matrix);
  if (det.is_zero()) throw ComputationError("transfer determinant vanishes identically");
  ZetaResult r;
  r.bass_ihara = RatFunc::reduce(Poly::constant(1), det);
  r.selberg = {r.bass_ihara, 1};
  r.cusp_count = 0;
  r.raw_determinant = std::move(det);
  return r;
}

SelbergZeta selberg_zeta(const CuspidalGraph& c) {
  if (c.central_order < 1) throw InvalidArgument("central order must be at least 1");
  return bass_ihara_zeta(c).selberg;
}

std::int64_t euler_characteristic(const EdgeIndexedGraph& g) {
  return static_cast<std::int64_t>(g.vertex_count()) - static_cast<std::int64_t>(g.edge_count() / 2);
}

Poly ihara_vertex_determinant(const EdgeIndexedGraph& g) {
  require_valid(g);
  const auto order = g.canonical_vertex_order();
  std::map<VertexId, std::size_t> index;
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = i;
  const std::size_t n = order.size();
  std::vector<std::int64_t> adjacency(n * n, 0);
  std::vector<std::int64_t> degree(n, 0);
  for (const auto& e : g.edges()) {
    ++adjacency[index[e.source] * n + index[e.target]];
    ++degree[index[e.source]];
  }
  PolyMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational a(-adjacency[i * n + j]);
      if (i == j) {
        m.at(i, j) = Poly{Rational(1), a, Rational(degree[i] - 1)};
      } else if (!a.is_zero()) {
        m.at(i, j) = Poly::monomial(a, 1);
      }
    }
  }
  return poly_det(m);
}

RatFunc ihara_three_term(const EdgeIndexedGraph& g) {
  if (!g.all_weights_one()) throw InvalidArgument("three-term formula requires unit weights");
  const std::int64_t chi = euler_characteristic(g);
  const Poly one_minus_u2{Rational(1), Rational(0), Rational(-1)};
  Poly num = Poly::constant(1);
  Poly den = ihara_vertex_determinant(g);
  if (chi > 0) num = one_minus_u2.pow(static_cast<unsigned>(chi));
  if (chi < 0) den *= one_minus_u2.pow(static_cast<unsigned>(-chi));
  return RatFunc::reduce(num, den);
}

CountingSeries counting_series(const ZetaResult& zeta, std::size_t order) {
  if (order < 1) throw InvalidArgument("counting series order must be at least 1");
  const PowerSeries logd = log_derivative_series(zeta.bass_ihara, order);
  CountingSeries s;
  s.order = order;
  const Rational c(zeta.selberg.exponent);
  for (std::size_t m = 1; m <= order; ++m) {
    s.N.push_back(logd[m]);
    s.R.push_back(logd[m] * c);
  }
  return s;
}

CountingSeries counting_series(const CuspidalGraph& c, std::size_t order) {
  return counting_series(bass_ihara_zeta(c), order);
}

}  // namespace graphzeta
