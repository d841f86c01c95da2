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

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "graphzeta/error.hpp"
#include "graphzeta/families.hpp"
#include "graphzeta/roots.hpp"
#include "graphzeta/spectra.hpp"
#include "graphzeta/zeta.hpp"
#include "support/oracles.hpp"

namespace graphzeta {
namespace {

using gz_test::poly;

TEST(Roots, SimpleCases) {
  const auto r = complex_roots(poly({1, 0, -4}));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(r[0].value.real(), 0.5, 1e-12);
  EXPECT_NEAR(r[1].value.real(), -0.5, 1e-12);
  EXPECT_EQ(r[0].value.imag(), 0.0);

  const auto d = complex_roots(poly({1, -2}).pow(2));
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].multiplicity, 2);
  EXPECT_NEAR(d[0].value.real(), 0.5, 1e-12);

  const auto k = complex_roots(gz_test::one_minus_u2(4 * 3 - 4 + 1));
  ASSERT_EQ(k.size(), 2u);
  for (const auto& root : k) EXPECT_NEAR(std::abs(root.value), 1.0 / 3, 1e-12);
}

TEST(Roots, Errors) {
  EXPECT_THROW(complex_roots(Poly()), InvalidArgument);
  EXPECT_THROW(complex_roots(poly({1, 1}), 0), InvalidArgument);
  EXPECT_TRUE(complex_roots(poly({5})).empty());
}

TEST(Roots, ProductMatchesCoefficientRatio) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> coeffs{Rational(1 + trial % 5)};
    const int degree = 2 + trial % 12;
    for (int i = 1; i < degree; ++i) coeffs.emplace_back(c(rng));
    coeffs.emplace_back(3 + trial % 4);
    const Poly p(coeffs);
    std::complex<double> product = 1;
    int count = 0;
    for (const auto& r : complex_roots(p)) {
      for (int k = 0; k < r.multiplicity; ++k) product *= r.value;
      count += r.multiplicity;
    }
    ASSERT_EQ(count, p.degree());
    const double expected = (degree % 2 == 0 ? 1.0 : -1.0) * p.constant_term().to_double() / p.leading().to_double();
    EXPECT_NEAR(product.real(), expected, 1e-9 * std::abs(expected));
    EXPECT_NEAR(product.imag(), 0.0, 1e-9 * std::abs(expected));
  }
}

TEST(Roots, RepeatedAndClusteredFactors) {
  const Poly p = poly({1, -3}).pow(3) * poly({1, 3}) * poly({1, 0, 1}).pow(2);
  const auto r = complex_roots(p);
  int total = 0;
  for (const auto& root : r) total += root.multiplicity;
  EXPECT_EQ(total, p.degree());
  EXPECT_EQ(r.front().multiplicity, 3);
  EXPECT_NEAR(r.front().value.real(), 1.0 / 3, 1e-12);
}

TEST(PoleReport, Examples) {
  const PoleReport pgl = pole_report(bass_ihara_zeta(families::pgl2(3)).bass_ihara);
  ASSERT_EQ(pgl.poles.size(), 2u);
  EXPECT_NEAR(pgl.R, 1.0 / 3, 1e-12);
  EXPECT_EQ(pgl.moduli_clusters.size(), 1u);
  EXPECT_FALSE(pgl.gap.has_value());

  const PoleReport star = pole_report(bass_ihara_zeta(families::star(3, {2, 2})).bass_ihara);
  ASSERT_EQ(star.moduli_clusters.size(), 2u);
  EXPECT_NEAR(star.moduli_clusters[0], 1.0 / 3, 1e-12);
  EXPECT_NEAR(star.moduli_clusters[1], 1.0, 1e-12);
  EXPECT_NEAR(*star.gap, 2.0 / 3, 1e-12);
  EXPECT_EQ(star.total_multiplicity(), 4u);

  const PoleReport one = pole_report(RatFunc());
  EXPECT_TRUE(one.poles.empty());
  EXPECT_TRUE(std::isinf(one.R));
}

TEST(PoleReport, MultiplicitiesCoverDenominator) {
  for (std::int64_t n = 1; n <= 5; ++n) {
    const RatFunc z = bass_ihara_zeta(families::loop_family(3, n)).bass_ihara;
    EXPECT_EQ(static_cast<int>(pole_report(z).total_multiplicity()), z.den().degree());
  }
}

TEST(Ramanujan, Verdicts) {
  EXPECT_TRUE(ramanujan_check(bass_ihara_zeta(families::pgl2(3)).bass_ihara, 3).ramanujan);
  EXPECT_TRUE(ramanujan_check(bass_ihara_zeta(families::star(3, {2, 2})).bass_ihara, 3).ramanujan);
  const RamanujanVerdict loop = ramanujan_check(bass_ihara_zeta(families::loop_family(3, 4)).bass_ihara, 3);
  EXPECT_FALSE(loop.ramanujan);
  bool witness = false;
  for (const auto& p : loop.offending) {
    const double m = std::abs(p.value);
    witness = witness || (m > 1.0 / 3 && m < 1.0 / std::sqrt(3.0));
  }
  EXPECT_TRUE(witness);
  EXPECT_THROW(ramanujan_check(RatFunc(), 1), InvalidArgument);
}

TEST(Ramanujan, StableUnderToleranceDoubling) {
  std::vector<CuspidalGraph> graphs;
  for (std::int64_t q : {2, 3, 5}) {
    graphs.push_back(families::pgl2(q));
    graphs.push_back(families::chain(q, 2));
    graphs.push_back(families::star(q, {q, 1}));
  }
  for (std::int64_t n = 1; n <= 4; ++n) graphs.push_back(families::loop_family(3, n));
  for (const auto& c : graphs) {
    const PoleReport r = pole_report(bass_ihara_zeta(c).bass_ihara);
    EXPECT_EQ(ramanujan_check(r, c.q, 1e-9).ramanujan, ramanujan_check(r, c.q, 2e-9).ramanujan);
  }
}

TEST(Sweep, LoopFamily) {
  std::vector<std::int64_t> ns{1, 2, 3, 4, 5, 6, 7, 8};
  const auto rows = pole_gap_sweep(3, ns);
  const auto serial = pole_gap_sweep(3, ns, false);
  ASSERT_EQ(rows.size(), 8u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].N, ns[i]);
    EXPECT_NEAR(rows[i].R, 1.0 / 3, 1e-9);
    EXPECT_EQ(rows[i].second_modulus, serial[i].second_modulus);
    if (i > 0) EXPECT_LT(*rows[i].second_modulus, *rows[i - 1].second_modulus);
  }
  EXPECT_LT(*rows[7].second_modulus - 1.0 / 3, (*rows[0].second_modulus - 1.0 / 3) / 2);
  EXPECT_THROW(pole_gap_sweep(3, {}), InvalidArgument);
}

TEST(Sweep, SecondPoleIsNegativeReal) {
  for (std::int64_t n = 1; n <= 6; ++n) {
    const PoleReport r = pole_report(bass_ihara_zeta(families::loop_family(3, n)).bass_ihara);
    const double second = *r.second_modulus();
    bool found = false;
    for (const auto& p : r.poles) {
      if (std::abs(std::abs(p.value) - second) < 1e-12) found = found || (p.value.real() < 0 && p.value.imag() == 0);
    }
    EXPECT_TRUE(found) << "N=" << n;
  }
}

TEST(Growth, Examples) {
  const GrowthEstimate pgl = growth_rate(families::pgl2(2), 2, 10, 40);
  EXPECT_NEAR(pgl.limit, 2.0, 0.05);
  for (std::size_t i = 1; i < pgl.r.size(); i += 2) EXPECT_NEAR(pgl.r[i], 2.0, 1e-12);  // odd m: N_m = 0

  CuspidalGraph tree;
  tree.q = 3;
  tree.core.add_vertex("x");
  tree.core.add_vertex("y");
  tree.core.add_edge("x", "y", Rational(1), Rational(1));
  const GrowthEstimate flat = growth_rate(tree, 3, 1, 20);
  for (double r : flat.r) EXPECT_NEAR(r, 3.0, 1e-12);
  EXPECT_NEAR(flat.limit, 3.0, 1e-9);

  const PoleReport r = pole_report(bass_ihara_zeta(families::loop_family(3, 3)).bass_ihara);
  const GrowthEstimate loop = growth_rate(families::loop_family(3, 3), 3, 20, 60);
  EXPECT_NEAR(loop.limit, 1.0 / *r.second_modulus(), 0.05 / *r.second_modulus());

  EXPECT_THROW(growth_rate(tree, 3, 0, 5), InvalidArgument);
  EXPECT_THROW(growth_rate(tree, 3, 5, 201), InvalidArgument);
}

TEST(Growth, RadiusMatchesCountingGrowth) {
  std::vector<CuspidalGraph> graphs{families::pgl2(2), families::pgl2(5), families::chain(3, 2),
                                    families::star(3, {2, 2}), families::star(5, {1, 2, 3})};
  for (std::int64_t n = 1; n <= 3; ++n) graphs.push_back(families::loop_family(3, n));
  for (const auto& c : graphs) {
    const double radius = pole_report(bass_ihara_zeta(c).bass_ihara).R;
    const double growth = counting_growth(c, 150, 200);
    EXPECT_NEAR(radius, 1.0 / growth, 0.02 * radius);
  }
}

}  // namespace
}  // namespace graphzeta
