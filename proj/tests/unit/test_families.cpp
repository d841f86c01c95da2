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

#include <map>

#include "graphzeta/error.hpp"
#include "graphzeta/families.hpp"
#include "graphzeta/transfer.hpp"

namespace graphzeta {
namespace {

using families::loop_center;
using families::loop_lower;
using families::loop_upper;

TEST(Families, Pgl2) {
  const CuspidalGraph c = families::pgl2(3);
  EXPECT_EQ(c.core.vertex_count(), 1u);
  ASSERT_EQ(c.cusps.size(), 1u);
  EXPECT_EQ(c.cusps[0].alpha, 4);
  EXPECT_EQ(c.cusps[0].ray_q, 3);
  EXPECT_EQ(c.central_order, 2);
  CuspidalGraph chain = families::chain(3, 4);
  chain.central_order = c.central_order;
  EXPECT_EQ(chain, c);
  EXPECT_THROW(families::pgl2(1), InvalidArgument);
}

TEST(Families, ParameterErrors) {
  EXPECT_THROW(families::chain(3, 0), InvalidArgument);
  EXPECT_THROW(families::chain(1, 1), InvalidArgument);
  EXPECT_THROW(families::star(3, {3, 2}), InvalidArgument);
  EXPECT_THROW(families::star(3, {}), InvalidArgument);
  EXPECT_THROW(families::star(3, {0, 1}), InvalidArgument);
  EXPECT_THROW(families::loop_family(3, 0), InvalidArgument);
  EXPECT_THROW(families::loop_family(1, 2), InvalidArgument);
  EXPECT_NO_THROW(families::loop_family(2, 2));
  EXPECT_TRUE(families::loop_family_is_degenerate(2));
  EXPECT_FALSE(families::loop_family_is_degenerate(3));
}

TEST(Families, BuildersAreRegularWhenSaturated) {
  for (std::int64_t q : {2, 3, 5}) {
    EXPECT_TRUE(validate(families::pgl2(q), q).regular);
    EXPECT_TRUE(validate(families::star(q, {q, 1}), q).regular);
    EXPECT_FALSE(validate(families::star(q, {1}), q).regular);
    for (std::int64_t n = 1; n <= 3; ++n) {
      const auto report = validate(families::loop_family(q, n), q);
      EXPECT_TRUE(report.ok());
      EXPECT_TRUE(report.regular) << "q=" << q << " N=" << n;
    }
  }
}

TEST(Families, LoopShape) {
  const CuspidalGraph c = families::loop_family(3, 2);
  EXPECT_EQ(c.core.vertex_count(), 5u);
  EXPECT_EQ(c.core.edge_count(), 10u);
  ASSERT_EQ(c.cusps.size(), 1u);
  EXPECT_EQ(c.cusps[0].vertex, loop_center());
  EXPECT_EQ(c.cusps[0].alpha, 2);
  EXPECT_EQ(c.central_order, 1);
}

// Edge labels of the loop family drawing: e_1 = a_1 -> c, e_2 its inverse,
// e_{2k+1} = a_{k+1} -> a_k, e_{2N+1} = b_N -> a_N,
// e_{2k+1} = b_{2N-k} -> b_{2N-k+1} for N < k < 2N, e_{4N+1} = c -> b_1 and
// f_1, f_2, ... the ray edges outward/inward alternately.
class LoopLabels {
 public:
  LoopLabels(std::int64_t n, const EdgeIndexedGraph& g) : n_(n), g_(g) {}

  EdgeId e(std::int64_t i) const {
    const bool odd = i % 2 == 1;
    const std::int64_t k = odd ? (i - 1) / 2 : (i - 2) / 2;
    VertexId from, to;
    if (k == 0) {
      from = loop_upper(1);
      to = loop_center();
    } else if (k < n_) {
      from = loop_upper(k + 1);
      to = loop_upper(k);
    } else if (k == n_) {
      from = loop_lower(n_);
      to = loop_upper(n_);
    } else if (k < 2 * n_) {
      from = b(2 * n_ - k);
      to = b(2 * n_ - k + 1);
    } else {
      from = loop_center();
      to = loop_lower(1);
    }
    return odd ? find(from, to) : find(to, from);
  }

  EdgeId f(std::int64_t k) const {
    const std::int64_t step = (k + 1) / 2;
    const VertexId near = step == 1 ? loop_center() : ray(step - 1);
    return k % 2 == 1 ? find(near, ray(step)) : find(ray(step), near);
  }

 private:
  VertexId b(std::int64_t j) const { return j == 0 ? loop_center() : loop_lower(j); }
  static VertexId ray(std::int64_t j) { return "~cusp0:" + std::to_string(j); }
  EdgeId find(const VertexId& s, const VertexId& t) const {
    for (const auto& e : g_.edges()) {
      if (e.source == s && e.target == t) return e.id;
    }
    ADD_FAILURE() << "no edge " << s << " -> " << t;
    return 0;
  }

  std::int64_t n_;
  const EdgeIndexedGraph& g_;
};

using Row = std::map<EdgeId, Rational>;

Row transfer_row(const EdgeIndexedGraph& g, EdgeId from) {
  Row row;
  for (const auto& e : g.edges()) {
    const Rational w = transfer_weight(g, from, e.id);
    if (!w.is_zero()) row[e.id] = w;
  }
  return row;
}

// The displayed T-equations of the loop family, entry by entry.
void check_loop_transfer(std::int64_t q, std::int64_t n) {
  const EdgeIndexedGraph g = truncate(families::loop_family(q, n), 4);
  const LoopLabels L(n, g);
  const Rational Q(q);
  const Rational one(1);
  auto expect_row = [&](EdgeId from, Row expected, const std::string& label) {
    for (auto it = expected.begin(); it != expected.end();) {
      it = it->second.is_zero() ? expected.erase(it) : std::next(it);
    }
    EXPECT_EQ(transfer_row(g, from), expected) << label << " q=" << q << " N=" << n;
  };
  expect_row(L.e(1), {{L.e(4 * n + 1), one}, {L.f(1), Q - one}}, "Te_1");
  expect_row(L.e(4 * n + 2), {{L.e(2), one}, {L.f(1), Q - one}}, "Te_{4N+2}");
  for (std::int64_t k = 1; k <= n; ++k) {
    expect_row(L.e(2 * k + 1), {{L.e(2 * k - 1), Q}}, "Te_odd k=" + std::to_string(k));
  }
  for (std::int64_t k = n + 1; k <= 2 * n; ++k) {
    expect_row(L.e(2 * k + 1), {{L.e(2 * k - 1), one}, {L.e(2 * k + 2), Q - one}},
               "Te_odd k=" + std::to_string(k));
  }
  for (std::int64_t k = 0; k <= n - 1; ++k) {
    expect_row(L.e(2 * k + 2), {{L.e(2 * k + 1), Q - one}, {L.e(2 * k + 4), one}},
               "Te_even k=" + std::to_string(k));
  }
  for (std::int64_t k = n; k <= 2 * n - 1; ++k) {
    expect_row(L.e(2 * k + 2), {{L.e(2 * k + 4), Q}}, "Te_even k=" + std::to_string(k));
  }
  expect_row(L.f(2), {{L.e(2), one}, {L.e(4 * n + 1), one}, {L.f(1), Q - Rational(2)}}, "Tf_2");
  expect_row(L.f(1), {{L.f(2), Q - one}, {L.f(3), one}}, "Tf_1");
  expect_row(L.f(3), {{L.f(4), Q - one}, {L.f(5), one}}, "Tf_3");
  expect_row(L.f(4), {{L.f(2), Q}}, "Tf_4");
  expect_row(L.f(6), {{L.f(4), Q}}, "Tf_6");
}

TEST(Families, LoopTransferMatchesDisplayedEquations) {
  check_loop_transfer(3, 1);
  check_loop_transfer(3, 2);
  check_loop_transfer(5, 2);
  check_loop_transfer(4, 3);
}

}  // namespace
}  // namespace graphzeta
