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

#ifndef GRAPHZETA_ZETA_HPP_
#define GRAPHZETA_ZETA_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "graphzeta/graph.hpp"
#include "graphzeta/ratfunc.hpp"
#include "graphzeta/series.hpp"

namespace graphzeta {

// Z_X = Z_A^c kept as (base, exponent); expand() multiplies it out.
struct SelbergZeta {
  RatFunc base;
  std::int64_t exponent = 1;

  RatFunc expand() const;
  friend bool operator==(const SelbergZeta&, const SelbergZeta&) = default;
};

struct ZetaResult {
  RatFunc bass_ihara;            // Z_A, reduced, Z_A(0) = 1
  SelbergZeta selberg;           // base == bass_ihara, exponent == central order
  std::size_t cusp_count = 0;
  Poly raw_determinant;          // det of the effective matrix before reduction
};

// Bass-Ihara zeta function Z_A = prod_c (1 - q_c u^2) / det(effective matrix).
// Throws ValidationError on invalid input and ComputationError if the
// determinant vanishes identically.
ZetaResult bass_ihara_zeta(const CuspidalGraph& c);

// Finite graph, no cusps: Z_A = 1 / det(I - uT). Central order 1.
ZetaResult bass_ihara_zeta(const EdgeIndexedGraph& g);

SelbergZeta selberg_zeta(const CuspidalGraph& c);

// |V| - |E|/2 with |E| the number of oriented edges.
std::int64_t euler_characteristic(const EdgeIndexedGraph& g);

// det(I - uA + u^2 Q), A the vertex adjacency matrix and Q = diag(deg - 1).
Poly ihara_vertex_determinant(const EdgeIndexedGraph& g);

// Ihara's three-term formula (1 - u^2)^chi / det(I - uA + u^2 Q). Throws
// InvalidArgument unless every weight is 1.
RatFunc ihara_three_term(const EdgeIndexedGraph& g);

// N_m = [u^m] u Z_A'/Z_A and R_m = c * N_m for m = 1..order; index 0 of each
// vector holds m = 1.
struct CountingSeries {
  std::vector<Rational> N;
  std::vector<Rational> R;
  std::size_t order = 0;
};

// Throws InvalidArgument for order < 1.
CountingSeries counting_series(const ZetaResult& zeta, std::size_t order);
CountingSeries counting_series(const CuspidalGraph& c, std::size_t order);

}  // namespace graphzeta

#endif  // GRAPHZETA_ZETA_HPP_
