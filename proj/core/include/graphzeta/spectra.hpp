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

#ifndef GRAPHZETA_SPECTRA_HPP_
#define GRAPHZETA_SPECTRA_HPP_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "graphzeta/graph.hpp"
#include "graphzeta/ratfunc.hpp"
#include "graphzeta/roots.hpp"

namespace graphzeta {

using Pole = Root;

struct PoleReport {
  std::vector<Pole> poles;            // roots of the reduced denominator
  std::vector<double> moduli_clusters;  // ascending
  double R = 0;                       // +inf when there are no poles
  std::optional<double> gap;          // second cluster minus R

  std::optional<double> second_modulus() const;
  std::size_t total_multiplicity() const;
};

// Moduli within cluster_tol (relative) of a neighbour are merged, transitively.
PoleReport pole_report(const RatFunc& z, double tol = 1e-12, double cluster_tol = 1e-9);

struct RamanujanVerdict {
  bool ramanujan = true;
  std::vector<Pole> trivial;    // |u| = 1/q or |u| = 1
  std::vector<Pole> offending;  // nontrivial and off the circle |u| = 1/sqrt(q)
};

RamanujanVerdict ramanujan_check(const RatFunc& z, std::int64_t q, double tol = 1e-9);
RamanujanVerdict ramanujan_check(const PoleReport& report, std::int64_t q, double tol = 1e-9);

struct SweepRow {
  std::int64_t N = 0;
  double R = 0;
  std::optional<double> second_modulus;
  bool ramanujan = false;
};

// One row per entry of Ns, in the order given. Members are evaluated in
// parallel when `parallel` is set.
std::vector<SweepRow> pole_gap_sweep(std::int64_t q, const std::vector<std::int64_t>& Ns, bool parallel = true);

struct GrowthEstimate {
  std::size_t m_lo = 0;
  std::size_t m_hi = 0;
  std::vector<double> r;  // r[i] = |N_m - q^m|^(1/m) for m = m_lo + i; 0 when N_m = q^m
  double limit = 0;
};

// Exact N_m from the zeta series, then a least-squares fit of
// log|N_m - q^m| against m whose slope gives the limit.
GrowthEstimate growth_rate(const CuspidalGraph& c, std::int64_t q, std::size_t m_lo, std::size_t m_hi);

// max over m in [m_lo, m_hi] of |N_m|^(1/m), a finite-range lim sup proxy.
double counting_growth(const CuspidalGraph& c, std::size_t m_lo, std::size_t m_hi);

inline constexpr std::size_t kMaxGrowthOrder = 200;

}  // namespace graphzeta

#endif  // GRAPHZETA_SPECTRA_HPP_
