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

#include "graphzeta/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_map>

#include "graphzeta/error.hpp"

namespace graphzeta {

EdgeIndexedGraph EdgeIndexedGraph::from_parts(std::vector<Vertex> vertices,
                                              std::vector<OrientedEdge> edges) {
  EdgeIndexedGraph g;
  g.vertices_ = std::move(vertices);
  g.edges_ = std::move(edges);
  return g;
}

void EdgeIndexedGraph::add_vertex(VertexId id, std::string label) {
  if (has_vertex(id)) throw InvalidArgument("duplicate vertex '" + id + "'");
  vertices_.push_back({std::move(id), std::move(label)});
}

std::pair<EdgeId, EdgeId> EdgeIndexedGraph::add_edge(const VertexId& a, const VertexId& b,
                                                     Rational wa, Rational wb) {
  if (!has_vertex(a)) throw InvalidArgument("edge endpoint '" + a + "' is not a vertex");
  if (!has_vertex(b)) throw InvalidArgument("edge endpoint '" + b + "' is not a vertex");
  const EdgeId forward = edges_.size();
  const EdgeId backward = forward + 1;
  edges_.push_back({forward, a, b, backward, std::move(wa)});
  edges_.push_back({backward, b, a, forward, std::move(wb)});
  return {forward, backward};
}

bool EdgeIndexedGraph::has_vertex(const VertexId& id) const {
  return std::any_of(vertices_.begin(), vertices_.end(), [&](const Vertex& v) { return v.id == id; });
}

EdgeIndexedGraph EdgeIndexedGraph::with_weight(EdgeId id, Rational weight) const {
  EdgeIndexedGraph g = *this;
  g.edges_.at(id).weight = std::move(weight);
  return g;
}

std::vector<VertexId> EdgeIndexedGraph::canonical_vertex_order() const {
  std::vector<VertexId> ids;
  ids.reserve(vertices_.size());
  for (const auto& v : vertices_) ids.push_back(v.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<EdgeId> EdgeIndexedGraph::canonical_edge_order() const {
  std::vector<EdgeId> order(edges_.size());
  for (EdgeId i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](EdgeId x, EdgeId y) {
    const auto& ex = edges_[x];
    const auto& ey = edges_[y];
    return std::tie(ex.source, ex.target, x) < std::tie(ey.source, ey.target, y);
  });
  return order;
}

Rational EdgeIndexedGraph::out_weight(const VertexId& v) const {
  Rational sum;
  for (const auto& e : edges_) {
    if (e.source == v) sum += e.weight;
  }
  return sum;
}

bool EdgeIndexedGraph::all_weights_integral() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const OrientedEdge& e) { return e.weight.is_integer(); });
}

bool EdgeIndexedGraph::all_weights_one() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const OrientedEdge& e) { return e.weight.is_one(); });
}

namespace {

std::string edge_name(const OrientedEdge& e) {
  return "edge " + std::to_string(e.id) + " (" + e.source + " -> " + e.target + ")";
}

void check_structure(const EdgeIndexedGraph& g, ValidationReport& report) {
  std::set<VertexId> ids;
  for (const auto& v : g.vertices()) {
    if (!ids.insert(v.id).second) report.errors.push_back("duplicate vertex '" + v.id + "'");
  }
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (e.id != i) {
      report.errors.push_back("edge at position " + std::to_string(i) + " carries id " + std::to_string(e.id));
    }
    if (!ids.count(e.source)) report.errors.push_back(edge_name(e) + ": unknown source");
    if (!ids.count(e.target)) report.errors.push_back(edge_name(e) + ": unknown target");
    if (e.weight.sign() <= 0) {
      report.errors.push_back(edge_name(e) + ": weight " + e.weight.to_string() + " is not positive");
    }
    if (e.inverse >= edges.size()) {
      report.errors.push_back(edge_name(e) + ": inverse edge is missing");
      continue;
    }
    const auto& inv = edges[e.inverse];
    if (e.inverse == i) {
      report.errors.push_back(edge_name(e) + ": edge is its own inverse");
    } else if (inv.inverse != i) {
      report.errors.push_back(edge_name(e) + ": inverse of inverse is not the edge");
    } else if (inv.source != e.target || inv.target != e.source) {
      report.errors.push_back(edge_name(e) + ": inverse endpoints do not match");
    }
  }
  if (!report.ok() || g.vertex_count() == 0) return;

  std::unordered_map<VertexId, std::vector<VertexId>> adjacency;
  for (const auto& e : edges) adjacency[e.source].push_back(e.target);
  std::set<VertexId> seen{g.vertices().front().id};
  std::queue<VertexId> frontier;
  frontier.push(g.vertices().front().id);
  while (!frontier.empty()) {
    const VertexId v = frontier.front();
    frontier.pop();
    for (const auto& w : adjacency[v]) {
      if (seen.insert(w).second) frontier.push(w);
    }
  }
  if (seen.size() != ids.size()) report.errors.push_back("graph is not connected");
}

void check_regularity(const EdgeIndexedGraph& g, const std::vector<Cusp>& cusps, std::int64_t q,
                      ValidationReport& report) {
  const Rational target(q + 1);
  for (const auto& v : g.vertices()) {
    Rational degree = g.out_weight(v.id);
    for (const auto& c : cusps) {
      if (c.vertex == v.id) degree += Rational(c.alpha);
    }
    if (degree != target) {
      report.regular = false;
      report.warnings.push_back("vertex '" + v.id + "' has weighted out-degree " + degree.to_string() +
                                ", expected " + target.to_string());
    }
  }
  for (std::size_t i = 0; i < cusps.size(); ++i) {
    if (cusps[i].ray_q != q) {
      report.regular = false;
      report.warnings.push_back("cusp " + std::to_string(i) + " ray vertices have weighted out-degree " +
                                std::to_string(cusps[i].ray_q + 1) + ", expected " + target.to_string());
    }
  }
}

std::string joined(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) {
    if (!out.empty()) out += "; ";
    out += l;
  }
  return out;
}

}  // namespace

ValidationReport validate(const EdgeIndexedGraph& g, std::optional<std::int64_t> expect_q) {
  ValidationReport report;
  check_structure(g, report);
  if (expect_q && report.ok()) check_regularity(g, {}, *expect_q, report);
  return report;
}

ValidationReport validate(const CuspidalGraph& c, std::optional<std::int64_t> expect_q) {
  ValidationReport report;
  check_structure(c.core, report);
  if (c.q < 1) report.errors.push_back("q must be positive");
  if (c.central_order < 1) report.errors.push_back("central_order must be at least 1");
  for (std::size_t i = 0; i < c.cusps.size(); ++i) {
    const auto& cusp = c.cusps[i];
    const std::string name = "cusp " + std::to_string(i);
    if (!c.core.has_vertex(cusp.vertex)) {
      report.errors.push_back(name + ": attach vertex '" + cusp.vertex + "' is not in the core");
    }
    if (cusp.alpha < 1) report.errors.push_back(name + ": alpha must be at least 1");
    if (cusp.ray_q < 2) report.errors.push_back(name + ": ray_q must be at least 2");
  }
  if (expect_q && report.ok()) check_regularity(c.core, c.cusps, *expect_q, report);
  return report;
}

void require_valid(const EdgeIndexedGraph& g) {
  const auto report = validate(g);
  if (!report.ok()) throw ValidationError(joined(report.errors));
}

void require_valid(const CuspidalGraph& c) {
  const auto report = validate(c);
  if (!report.ok()) throw ValidationError(joined(report.errors));
}

}  // namespace graphzeta
