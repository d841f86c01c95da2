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

#ifndef GRAPHZETA_FAMILIES_HPP_
#define GRAPHZETA_FAMILIES_HPP_

#include <cstdint>
#include <vector>

#include "graphzeta/graph.hpp"

namespace graphzeta::families {

// Quotient of the Bruhat-Tits tree by PGL(2, F_q[t]): one core vertex with a
// single cusp (alpha = q + 1), central order q - 1. Requires q >= 2.
CuspidalGraph pgl2(std::int64_t q);

// One core vertex with vertex group C_k and one cusp of index k, central
// order 1. Requires q >= 2, k >= 1.
CuspidalGraph chain(std::int64_t q, std::int64_t k);

// n cusps of indices parts[0..n) joined at one hub vertex, central order 1.
// Requires every part >= 1 and sum(parts) <= q + 1.
CuspidalGraph star(std::int64_t q, const std::vector<std::int64_t>& parts);

// Core cycle c, a1..aN, bN..b1 with one cusp of index q - 1 at c. The
// orientation of each weight pair matches the non-backtracking transfer
// equations of this family. Requires q >= 2 and N >= 1; at q = 2 the cusp
// attachment has backtrack weight 0 (see loop_family_is_degenerate).
CuspidalGraph loop_family(std::int64_t q, std::int64_t n);

inline bool loop_family_is_degenerate(std::int64_t q) { return q == 2; }

// Vertex ids used by loop_family.
VertexId loop_center();
VertexId loop_upper(std::int64_t k);
VertexId loop_lower(std::int64_t k);

}  // namespace graphzeta::families

#endif  // GRAPHZETA_FAMILIES_HPP_
