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

#include "graphzeta/families.hpp"

#include <numeric>

#include "graphzeta/error.hpp"

namespace graphzeta::families {

namespace {

constexpr const char* kHub = "v0";

CuspidalGraph single_vertex(std::int64_t q, std::int64_t central_order) {
  CuspidalGraph c;
  c.core.add_vertex(kHub);
  c.q = q;
  c.central_order = central_order;
  return c;
}

}  // namespace

CuspidalGraph pgl2(std::int64_t q) {
  if (q < 2) throw InvalidArgument("pgl2 requires q >= 2");
  CuspidalGraph c = single_vertex(q, q - 1);
  c.cusps.push_back({kHub, q + 1, q});
  return c;
}

CuspidalGraph chain(std::int64_t q, std::int64_t k) {
  if (q < 2) throw InvalidArgument("chain requires q >= 2");
  if (k < 1) throw InvalidArgument("chain requires k >= 1");
  CuspidalGraph c = single_vertex(q, 1);
  c.cusps.push_back({kHub, k, q});
  return c;
}

CuspidalGraph star(std::int64_t q, const std::vector<std::int64_t>& parts) {
  if (q < 2) throw InvalidArgument("star requires q >= 2");
  if (parts.empty()) throw InvalidArgument("star requires at least one part");
  for (auto a : parts) {
    if (a < 1) throw InvalidArgument("star parts must be at least 1");
  }
  const std::int64_t k = std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
  if (k > q + 1) {
    throw InvalidArgument("star parts sum to " + std::to_string(k) + ", more than q + 1 = " +
                          std::to_string(q + 1));
  }
  CuspidalGraph c = single_vertex(q, 1);
  for (auto a : parts) c.cusps.push_back({kHub, a, q});
  return c;
}

VertexId loop_center() { return "c"; }
VertexId loop_upper(std::int64_t k) { return "a" + std::to_string(k); }
VertexId loop_lower(std::int64_t k) { return "b" + std::to_string(k); }

CuspidalGraph loop_family(std::int64_t q, std::int64_t n) {
  if (q < 2) throw InvalidArgument("loop_family requires q >= 2");
  if (n < 1) throw InvalidArgument("loop_family requires N >= 1");
  CuspidalGraph c;
  c.q = q;
  c.central_order = 1;

  // Cycle order v_0 = c, v_1..v_N = a_1..a_N, v_{N+1}..v_{2N} = b_N..b_1.
  std::vector<VertexId> cycle{loop_center()};
  for (std::int64_t k = 1; k <= n; ++k) cycle.push_back(loop_upper(k));
  for (std::int64_t k = n; k >= 1; --k) cycle.push_back(loop_lower(k));
  for (const auto& v : cycle) c.core.add_vertex(v);

  const auto len = static_cast<std::int64_t>(cycle.size());
  for (std::int64_t i = 0; i < len; ++i) {
    const VertexId& from = cycle[static_cast<std::size_t>(i)];
    const VertexId& to = cycle[static_cast<std::size_t>((i + 1) % len)];
    if (i < n) {
      c.core.add_edge(from, to, Rational(1), Rational(q));
    } else if (i == n) {
      c.core.add_edge(from, to, Rational(1), Rational(1));  // a_N -- b_N
    } else {
      c.core.add_edge(from, to, Rational(q), Rational(1));
    }
  }
  c.cusps.push_back({loop_center(), q - 1, q});
  return c;
}

}  // namespace graphzeta::families
