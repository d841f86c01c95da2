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

#ifndef GRAPHZETA_TRANSFER_HPP_
#define GRAPHZETA_TRANSFER_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "graphzeta/graph.hpp"
#include "graphzeta/poly_matrix.hpp"

namespace graphzeta {

// w(e, e') of the non-backtracking transfer operator: zero unless
// t(e) = s(e'); w(e') - 1 when e' is the inverse of e; w(e') otherwise.
Rational transfer_weight(const EdgeIndexedGraph& g, EdgeId from, EdgeId to);

// I - uT over the oriented edges of a finite graph, with
// M[e][e'] = delta(e, e') - u * w(e, e').
struct TransferMatrix {
  // Row/column i corresponds to oriented edge edge_index[i] (canonical order).
  std::vector<EdgeId> edge_index;
  PolyMatrix matrix;
};

TransferMatrix build_transfer(const EdgeIndexedGraph& g);

// I - uT restricted to the core edges and the attachment pair (o_c, i_c) of
// each cusp, with every ray beyond the attachment eliminated in closed form.
// The o_c row is [1 - q_c u^2 at o_c, -(q_c - 1) u at i_c], i.e. the
// eliminated row scaled by (1 - q_c u^2); hence
//   det(I - uT) = det(matrix) / prod_c (1 - q_c u^2).
struct EffectiveMatrix {
  enum class RowKind { kCore, kCuspOut, kCuspIn };
  struct Row {
    RowKind kind;
    EdgeId core_edge;   // valid for kCore
    std::size_t cusp;   // valid for kCuspOut / kCuspIn
  };

  std::vector<Row> rows;
  PolyMatrix matrix;
  std::size_t cusp_count = 0;
  std::vector<std::int64_t> cusp_qs;

  std::size_t core_row(EdgeId e) const;
  std::size_t cusp_out_row(std::size_t cusp) const;
  std::size_t cusp_in_row(std::size_t cusp) const;
};

// Throws ValidationError for a structurally invalid graph.
EffectiveMatrix build_effective(const CuspidalGraph& c);

}  // namespace graphzeta

#endif  // GRAPHZETA_TRANSFER_HPP_
