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

#include "graphzeta/transfer.hpp"

#include <unordered_map>

#include "graphzeta/error.hpp"

namespace graphzeta {

namespace {

Poly minus_u_times(const Rational& w) { return Poly::monomial(-w, 1); }

}  // namespace

Rational transfer_weight(const EdgeIndexedGraph& g, EdgeId from, EdgeId to) {
  const auto& e = g.edge(from);
  const auto& next = g.edge(to);
  if (e.target != next.source) return Rational();
  if (e.inverse == to) return next.weight - Rational(1);
  return next.weight;
}

TransferMatrix build_transfer(const EdgeIndexedGraph& g) {
  require_valid(g);
  TransferMatrix t;
  t.edge_index = g.canonical_edge_order();
  const std::size_t n = t.edge_index.size();
  t.matrix = PolyMatrix::identity(n);
  std::unordered_map<VertexId, std::vector<std::size_t>> rows_leaving;
  for (std::size_t j = 0; j < n; ++j) rows_leaving[g.edge(t.edge_index[j]).source].push_back(j);
  for (std::size_t i = 0; i < n; ++i) {
    const EdgeId e = t.edge_index[i];
    for (std::size_t j : rows_leaving[g.edge(e).target]) {
      const Rational w = transfer_weight(g, e, t.edge_index[j]);
      if (w.is_zero()) continue;
      t.matrix.at(i, j) += minus_u_times(w);
    }
  }
  return t;
}

std::size_t EffectiveMatrix::core_row(EdgeId e) const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].kind == RowKind::kCore && rows[i].core_edge == e) return i;
  }
  throw InvalidArgument("edge " + std::to_string(e) + " is not a core row");
}

std::size_t EffectiveMatrix::cusp_out_row(std::size_t cusp) const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].kind == RowKind::kCuspOut && rows[i].cusp == cusp) return i;
  }
  throw InvalidArgument("no cusp " + std::to_string(cusp));
}

std::size_t EffectiveMatrix::cusp_in_row(std::size_t cusp) const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].kind == RowKind::kCuspIn && rows[i].cusp == cusp) return i;
  }
  throw InvalidArgument("no cusp " + std::to_string(cusp));
}

EffectiveMatrix build_effective(const CuspidalGraph& c) {
  require_valid(c);
  const EdgeIndexedGraph& g = c.core;
  EffectiveMatrix eff;
  for (EdgeId e : g.canonical_edge_order()) eff.rows.push_back({EffectiveMatrix::RowKind::kCore, e, 0});
  const std::size_t core_rows = eff.rows.size();
  for (std::size_t k = 0; k < c.cusps.size(); ++k) {
    eff.rows.push_back({EffectiveMatrix::RowKind::kCuspOut, 0, k});
    eff.rows.push_back({EffectiveMatrix::RowKind::kCuspIn, 0, k});
    eff.cusp_qs.push_back(c.cusps[k].ray_q);
  }
  eff.cusp_count = c.cusps.size();
  const std::size_t n = eff.rows.size();
  eff.matrix = PolyMatrix::identity(n);
  auto out_row = [&](std::size_t k) { return core_rows + 2 * k; };
  auto in_row = [&](std::size_t k) { return core_rows + 2 * k + 1; };

  std::unordered_map<VertexId, std::vector<std::size_t>> core_rows_leaving;
  for (std::size_t j = 0; j < core_rows; ++j) {
    core_rows_leaving[g.edge(eff.rows[j].core_edge).source].push_back(j);
  }
  std::unordered_map<VertexId, std::vector<std::size_t>> cusps_at;
  for (std::size_t k = 0; k < c.cusps.size(); ++k) cusps_at[c.cusps[k].vertex].push_back(k);

  // Core rows: successors among core edges and the cusp attachments at t(e).
  for (std::size_t i = 0; i < core_rows; ++i) {
    const EdgeId e = eff.rows[i].core_edge;
    const VertexId& head = g.edge(e).target;
    for (std::size_t j : core_rows_leaving[head]) {
      const Rational w = transfer_weight(g, e, eff.rows[j].core_edge);
      if (!w.is_zero()) eff.matrix.at(i, j) += minus_u_times(w);
    }
    for (std::size_t k : cusps_at[head]) {
      eff.matrix.at(i, out_row(k)) += minus_u_times(Rational(c.cusps[k].alpha));
    }
  }

  for (std::size_t k = 0; k < c.cusps.size(); ++k) {
    const Cusp& cusp = c.cusps[k];
    const Rational q(cusp.ray_q);
    // Outward attachment: ray excursions summed to (q-1)u / (1 - q u^2),
    // denominator cleared.
    eff.matrix.at(out_row(k), out_row(k)) = Poly{Rational(1), Rational(0), -q};
    eff.matrix.at(out_row(k), in_row(k)) = minus_u_times(q - Rational(1));

    // Inward attachment: lands on the attach vertex.
    const std::size_t i = in_row(k);
    for (std::size_t j : core_rows_leaving[cusp.vertex]) {
      eff.matrix.at(i, j) += minus_u_times(g.edge(eff.rows[j].core_edge).weight);
    }
    for (std::size_t other : cusps_at[cusp.vertex]) {
      const Rational w = other == k ? Rational(cusp.alpha - 1) : Rational(c.cusps[other].alpha);
      if (!w.is_zero()) eff.matrix.at(i, out_row(other)) += minus_u_times(w);
    }
  }
  return eff;
}

}  // namespace graphzeta
