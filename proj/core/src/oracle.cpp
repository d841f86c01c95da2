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

#include "graphzeta/oracle.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <tuple>

#include "graphzeta/error.hpp"

namespace graphzeta::oracle {

namespace {

struct Step {
  EdgeId to;
  mpq_class weight;
};

// Successor lists of the non-backtracking operator, zero weights dropped.
std::vector<std::vector<Step>> successor_lists(const EdgeIndexedGraph& g) {
  require_valid(g);
  const auto& edges = g.edges();
  std::vector<std::vector<Step>> next(edges.size());
  for (const auto& e : edges) {
    for (const auto& f : edges) {
      if (f.source != e.target) continue;
      mpq_class w = f.weight.value();
      if (f.id == e.inverse) w -= 1;
      if (sgn(w) != 0) next[e.id].push_back({f.id, std::move(w)});
    }
  }
  return next;
}

std::vector<Rational> traces(const EdgeIndexedGraph& g, std::size_t max_m) {
  if (max_m < 1) throw InvalidArgument("trace power order must be at least 1");
  const auto next = successor_lists(g);
  const std::size_t n = next.size();
  // power[i][j] = (T^m)_{ij}, advanced by right-multiplying with sparse T.
  std::vector<mpq_class> power(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& s : next[i]) power[i * n + s.to] = s.weight;
  }
  std::vector<Rational> out;
  out.reserve(max_m);
  for (std::size_t m = 1;; ++m) {
    mpq_class trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += power[i * n + i];
    out.emplace_back(trace.get_num(), trace.get_den());
    if (m == max_m) break;
    std::vector<mpq_class> updated(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const mpq_class& p = power[i * n + k];
        if (sgn(p) == 0) continue;
        for (const auto& s : next[k]) updated[i * n + s.to] += p * s.weight;
      }
    }
    power = std::move(updated);
  }
  return out;
}

std::vector<EdgeId> canonical_rotation(const std::vector<EdgeId>& path) {
  std::vector<EdgeId> best = path;
  std::vector<EdgeId> rotated = path;
  for (std::size_t r = 1; r < path.size(); ++r) {
    std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
    if (rotated < best) best = rotated;
  }
  return best;
}

std::size_t primitive_period(const std::vector<EdgeId>& cycle) {
  const std::size_t len = cycle.size();
  for (std::size_t d = 1; d < len; ++d) {
    if (len % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < len && periodic; ++i) periodic = cycle[i] == cycle[i - d];
    if (periodic) return d;
  }
  return len;
}

}  // namespace

Rational trace_power(const EdgeIndexedGraph& g, std::size_t m) { return traces(g, m).back(); }

std::vector<Rational> trace_powers(const EdgeIndexedGraph& g, std::size_t max_m) { return traces(g, max_m); }

Rational trace_power_cuspidal(const CuspidalGraph& c, std::size_t m) {
  if (m < 1) throw InvalidArgument("trace power order must be at least 1");
  return trace_power(truncate(c, truncation_depth_for(m)), m);
}

std::vector<Rational> trace_powers_cuspidal(const CuspidalGraph& c, std::size_t max_m) {
  if (max_m < 1) throw InvalidArgument("trace power order must be at least 1");
  // The depth for max_m also covers every shorter length.
  return traces(truncate(c, truncation_depth_for(max_m)), max_m);
}

CycleEnumeration enumerate_primitive_cycles(const EdgeIndexedGraph& g, std::size_t max_length,
                                            EnumerationBudget budget) {
  if (max_length < 1) throw InvalidArgument("cycle length bound must be at least 1");
  if (max_length > budget.max_length) {
    throw BudgetExceeded("cycle length bound " + std::to_string(max_length) + " exceeds cap " +
                         std::to_string(budget.max_length));
  }
  const auto next = successor_lists(g);
  const std::size_t n = next.size();
  std::vector<std::vector<EdgeId>> prev(n);
  for (std::size_t e = 0; e < n; ++e) {
    for (const auto& s : next[e]) prev[s.to].push_back(e);
  }

  CycleEnumeration result;
  result.max_length = max_length;
  std::set<std::vector<EdgeId>> cycles;
  constexpr std::size_t kUnreachable = static_cast<std::size_t>(-1);

  for (EdgeId start = 0; start < n; ++start) {
    // Distance from each edge back to `start` through edges >= start.
    std::vector<std::size_t> dist(n, kUnreachable);
    std::queue<EdgeId> frontier;
    dist[start] = 0;
    frontier.push(start);
    while (!frontier.empty()) {
      const EdgeId e = frontier.front();
      frontier.pop();
      for (EdgeId p : prev[e]) {
        if (p < start || dist[p] != kUnreachable) continue;
        dist[p] = dist[e] + 1;
        frontier.push(p);
      }
    }

    // Closed paths starting at `start` whose other edges are all >= start;
    // every cycle has such a rotation at its minimal edge.
    std::vector<EdgeId> path{start};
    std::vector<std::size_t> cursor{0};
    while (!path.empty()) {
      const EdgeId tip = path.back();
      std::size_t& idx = cursor.back();
      if (idx >= next[tip].size()) {
        path.pop_back();
        cursor.pop_back();
        continue;
      }
      const EdgeId to = next[tip][idx++].to;
      if (to < start || dist[to] == kUnreachable) continue;
      if (to == start) {
        cycles.insert(canonical_rotation(path));
      }
      // Closing the cycle from `to` needs dist[to] more steps, giving length
      // path.size() + dist[to].
      if (path.size() + dist[to] > max_length) continue;
      if (++result.visited_paths > budget.max_visited) {
        throw BudgetExceeded("cycle enumeration visited more than " + std::to_string(budget.max_visited) +
                             " paths");
      }
      path.push_back(to);
      cursor.push_back(0);
    }
  }

  // Weight lookup for the cyclic product.
  std::vector<std::map<EdgeId, mpq_class>> weight(n);
  for (std::size_t e = 0; e < n; ++e) {
    for (const auto& s : next[e]) weight[e][s.to] = s.weight;
  }
  std::map<std::tuple<std::size_t, Rational, std::size_t>, std::size_t> index;
  for (const auto& cycle : cycles) {
    mpq_class w = 1;
    for (std::size_t i = 0; i < cycle.size(); ++i) w *= weight[cycle[i]].at(cycle[(i + 1) % cycle.size()]);
    const std::size_t period = primitive_period(cycle);
    auto key = std::make_tuple(cycle.size(), Rational(w.get_num(), w.get_den()), period);
    auto [it, inserted] = index.emplace(key, result.classes.size());
    if (inserted) {
      result.classes.push_back({cycle.size(), std::get<1>(key), period, 0, cycle});
    }
    ++result.classes[it->second].multiplicity;
  }
  return result;
}

Rational weighted_cycle_count(const CycleEnumeration& cycles, std::size_t m) {
  if (m > cycles.max_length) throw InvalidArgument("cycle enumeration is incomplete at this length");
  Rational total;
  for (const auto& c : cycles.classes) {
    if (c.length != m) continue;
    total += c.weight * Rational(static_cast<std::int64_t>(c.primitive_length * c.multiplicity));
  }
  return total;
}

PowerSeries euler_product_series(const CycleEnumeration& cycles, std::size_t order) {
  if (order > cycles.max_length) {
    throw InvalidArgument("cycle enumeration complete only through length " + std::to_string(cycles.max_length));
  }
  PowerSeries product = PowerSeries::one(order);
  for (const auto& c : cycles.classes) {
    if (!c.primitive() || c.length > order) continue;
    // (1 - w u^l)^-1 = sum_j w^j u^{jl}
    std::vector<Rational> geometric(order + 1);
    Rational term(1);
    for (std::size_t j = 0; j * c.length <= order; ++j) {
      geometric[j * c.length] = term;
      term *= c.weight;
    }
    const PowerSeries factor(std::move(geometric), order);
    for (std::size_t k = 0; k < c.multiplicity; ++k) product = product * factor;
  }
  return product;
}

}  // namespace graphzeta::oracle
