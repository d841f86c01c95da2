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

#include "graphzeta/spectra.hpp"

#include <cmath>
#include <future>
#include <limits>
#include <numbers>

#include "graphzeta/error.hpp"
#include "graphzeta/families.hpp"
#include "graphzeta/zeta.hpp"

namespace graphzeta {

namespace {

long double log_abs(const Rational& x) {
  // log |p/q| without overflowing a long double for huge integers.
  long exp_num = 0;
  long exp_den = 0;
  const double mant_num = mpz_get_d_2exp(&exp_num, x.numerator().get_mpz_t());
  const double mant_den = mpz_get_d_2exp(&exp_den, x.denominator().get_mpz_t());
  return std::log(std::abs(static_cast<long double>(mant_num))) - std::log(static_cast<long double>(mant_den)) +
         static_cast<long double>(exp_num - exp_den) * std::numbers::ln2_v<long double>;
}

void check_growth_range(std::size_t m_lo, std::size_t m_hi) {
  if (m_lo < 1 || m_hi < m_lo) throw InvalidArgument("growth range must satisfy 1 <= m_lo <= m_hi");
  if (m_hi > kMaxGrowthOrder) {
    throw InvalidArgument("growth range exceeds the series budget of " + std::to_string(kMaxGrowthOrder));
  }
}

}  // namespace

std::optional<double> PoleReport::second_modulus() const {
  if (moduli_clusters.size() < 2) return std::nullopt;
  return moduli_clusters[1];
}

std::size_t PoleReport::total_multiplicity() const {
  std::size_t total = 0;
  for (const auto& p : poles) total += static_cast<std::size_t>(p.multiplicity);
  return total;
}

PoleReport pole_report(const RatFunc& z, double tol, double cluster_tol) {
  if (!(cluster_tol > 0)) throw InvalidArgument("cluster tolerance must be positive");
  PoleReport report;
  report.R = std::numeric_limits<double>::infinity();
  if (z.den().degree() < 1) return report;
  report.poles = complex_roots(z.den(), tol);
  // Poles arrive sorted by modulus, so a single pass builds the clusters.
  double last = -1;
  for (const auto& p : report.poles) {
    const double m = std::abs(p.value);
    if (report.moduli_clusters.empty() || m - last > cluster_tol * std::max(1.0, last)) {
      report.moduli_clusters.push_back(m);
    }
    last = m;
  }
  report.R = report.moduli_clusters.front();
  if (report.moduli_clusters.size() > 1) report.gap = report.moduli_clusters[1] - report.R;
  return report;
}

RamanujanVerdict ramanujan_check(const PoleReport& report, std::int64_t q, double tol) {
  if (q < 2) throw InvalidArgument("ramanujan_check needs q >= 2");
  if (!(tol > 0)) throw InvalidArgument("tolerance must be positive");
  const double inv_q = 1.0 / static_cast<double>(q);
  const double circle = 1.0 / std::sqrt(static_cast<double>(q));
  RamanujanVerdict verdict;
  for (const auto& p : report.poles) {
    const double m = std::abs(p.value);
    if (std::abs(m - inv_q) < tol || std::abs(m - 1.0) < tol) {
      verdict.trivial.push_back(p);
    } else if (std::abs(m - circle) >= tol) {
      verdict.offending.push_back(p);
    }
  }
  verdict.ramanujan = verdict.offending.empty();
  return verdict;
}

RamanujanVerdict ramanujan_check(const RatFunc& z, std::int64_t q, double tol) {
  return ramanujan_check(pole_report(z), q, tol);
}

std::vector<SweepRow> pole_gap_sweep(std::int64_t q, const std::vector<std::int64_t>& Ns, bool parallel) {
  if (Ns.empty()) throw InvalidArgument("sweep range is empty");
  auto row = [q](std::int64_t n) {
    const ZetaResult zeta = bass_ihara_zeta(families::loop_family(q, n));
    const PoleReport report = pole_report(zeta.bass_ihara);
    return SweepRow{n, report.R, report.second_modulus(), ramanujan_check(report, q).ramanujan};
  };
  std::vector<SweepRow> rows;
  rows.reserve(Ns.size());
  if (!parallel) {
    for (auto n : Ns) rows.push_back(row(n));
    return rows;
  }
  std::vector<std::future<SweepRow>> pending;
  pending.reserve(Ns.size());
  for (auto n : Ns) pending.push_back(std::async(std::launch::async, row, n));
  for (auto& f : pending) rows.push_back(f.get());
  return rows;
}

GrowthEstimate growth_rate(const CuspidalGraph& c, std::int64_t q, std::size_t m_lo, std::size_t m_hi) {
  check_growth_range(m_lo, m_hi);
  if (q < 1) throw InvalidArgument("growth_rate needs q >= 1");
  const CountingSeries series = counting_series(c, m_hi);
  GrowthEstimate est;
  est.m_lo = m_lo;
  est.m_hi = m_hi;
  // Least-squares line through (m, log|N_m - q^m|) over the nonzero terms.
  long double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t count = 0;
  const Rational base(q);
  for (std::size_t m = m_lo; m <= m_hi; ++m) {
    const Rational diff = series.N[m - 1] - base.pow(static_cast<unsigned>(m));
    if (diff.is_zero()) {
      est.r.push_back(0);
      continue;
    }
    const long double y = log_abs(diff);
    const long double x = static_cast<long double>(m);
    est.r.push_back(static_cast<double>(std::exp(y / x)));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count == 0) {
    est.limit = 0;
  } else if (count == 1) {
    for (double r : est.r) {
      if (r != 0) est.limit = r;
    }
  } else {
    const long double n = static_cast<long double>(count);
    const long double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    est.limit = static_cast<double>(std::exp(slope));
  }
  return est;
}

double counting_growth(const CuspidalGraph& c, std::size_t m_lo, std::size_t m_hi) {
  check_growth_range(m_lo, m_hi);
  const CountingSeries series = counting_series(c, m_hi);
  double best = 0;
  for (std::size_t m = m_lo; m <= m_hi; ++m) {
    const Rational& n = series.N[m - 1];
    if (n.is_zero()) continue;
    best = std::max(best, static_cast<double>(std::exp(log_abs(n) / static_cast<long double>(m))));
  }
  return best;
}

}  // namespace graphzeta
