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

#ifndef GRAPHZETA_ORACLE_HPP_
#define GRAPHZETA_ORACLE_HPP_

#include <cstddef>
#include <vector>

#include "graphzeta/graph.hpp"
#include "graphzeta/series.hpp"

// Brute-force references for the zeta engine. Nothing here touches the
// transfer-matrix or determinant code paths; the transfer rule is re-derived
// from the graph directly.
namespace graphzeta::oracle {

// Exact Tr(T^m) of the transfer operator of a finite graph, m >= 1.
Rational trace_power(const EdgeIndexedGraph& g, std::size_t m);
// Tr(T^m) for m = 1..max_m (index m - 1).
std::vector<Rational> trace_powers(const EdgeIndexedGraph& g, std::size_t max_m);

// Truncation depth at which every closed path of length <= m of a
// cuspidal graph is already present: floor(m / 2) + 1.
inline std::size_t truncation_depth_for(std::size_t m) { return m / 2 + 1; }

// Tr(T^m) of the infinite graph, from the truncation at depth
// truncation_depth_for(m).
Rational trace_power_cuspidal(const CuspidalGraph& c, std::size_t m);
std::vector<Rational> trace_powers_cuspidal(const CuspidalGraph& c, std::size_t max_m);

// All cycles (rotation classes of closed non-zero-weight paths) sharing the
// same (length, weight, primitive length). multiplicity counts the distinct
// cycles in the group; representative is one of them in canonical
// (lexicographically minimal) rotation.
struct CycleClass {
  std::size_t length = 0;
  Rational weight;
  std::size_t primitive_length = 0;
  std::size_t multiplicity = 0;
  std::vector<EdgeId> representative;

  bool primitive() const { return primitive_length == length; }
};

struct CycleEnumeration {
  std::size_t max_length = 0;  // complete for every length <= max_length
  std::vector<CycleClass> classes;
  std::size_t visited_paths = 0;
};

struct EnumerationBudget {
  std::size_t max_length = 14;
  std::size_t max_visited = 1'000'000;
};

// Exhaustive depth-first enumeration of every cycle of length <= max_length.
// Throws BudgetExceeded when max_length or the visit count exceeds budget.
CycleEnumeration enumerate_primitive_cycles(const EdgeIndexedGraph& g, std::size_t max_length,
                                            EnumerationBudget budget = {});

// sum over cycles C of length m of l(C_0) w(C); equals Tr(T^m).
Rational weighted_cycle_count(const CycleEnumeration& cycles, std::size_t m);

// prod over primitive cycles of (1 - w(C) u^l(C))^-1 through u^order. Throws
// InvalidArgument when the enumeration is incomplete for that order.
PowerSeries euler_product_series(const CycleEnumeration& cycles, std::size_t order);

}  // namespace graphzeta::oracle

#endif  // GRAPHZETA_ORACLE_HPP_
