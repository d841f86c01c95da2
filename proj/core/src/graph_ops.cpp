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

#include <algorithm>
#include <set>
#include <sstream>

#include "graphzeta/error.hpp"
#include "graphzeta/graph.hpp"

namespace graphzeta {

EdgeIndexedGraph weights_from_groups(const GraphOfGroups& g) {
  EdgeIndexedGraph out;
  for (const auto& v : g.vertices) {
    const auto it = g.vertex_order.find(v);
    if (it == g.vertex_order.end() || it->second < 1) {
      throw ValidationError("vertex '" + v + "' needs a positive group order");
    }
    out.add_vertex(v);
  }
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    const std::string name = "edge " + std::to_string(i) + " (" + e.a + " -- " + e.b + ")";
    if (!g.vertex_order.count(e.a) || !g.vertex_order.count(e.b)) {
      throw ValidationError(name + ": unknown endpoint");
    }
    if (e.order < 1) throw ValidationError(name + ": edge group order must be positive");
    const std::int64_t oa = g.vertex_order.at(e.a);
    const std::int64_t ob = g.vertex_order.at(e.b);
    if (oa % e.order != 0 || ob % e.order != 0) {
      throw ValidationError(name + ": edge group order " + std::to_string(e.order) +
                            " does not divide vertex orders " + std::to_string(oa) + " and " +
                            std::to_string(ob));
    }
    out.add_edge(e.a, e.b, Rational(oa / e.order), Rational(ob / e.order));
  }
  return out;
}

EdgeIndexedGraph truncate(const CuspidalGraph& c, std::size_t depth) {
  if (depth < 1) throw InvalidArgument("truncation depth must be at least 1");
  EdgeIndexedGraph g = c.core;
  for (std::size_t i = 0; i < c.cusps.size(); ++i) {
    const Cusp& cusp = c.cusps[i];
    VertexId previous = cusp.vertex;
    for (std::size_t j = 1; j <= depth; ++j) {
      VertexId ray = "~cusp" + std::to_string(i) + ":" + std::to_string(j);
      g.add_vertex(ray);
      const Rational outward = j == 1 ? Rational(cusp.alpha) : Rational(1);
      g.add_edge(previous, ray, outward, Rational(cusp.ray_q));
      previous = std::move(ray);
    }
  }
  return g;
}

namespace {

const VertexId& mapped(const std::map<VertexId, VertexId>& permutation, const VertexId& v) {
  const auto it = permutation.find(v);
  if (it == permutation.end()) throw InvalidArgument("relabeling does not cover vertex '" + v + "'");
  return it->second;
}

void check_bijection(const EdgeIndexedGraph& g, const std::map<VertexId, VertexId>& permutation) {
  std::set<VertexId> domain;
  for (const auto& v : g.vertices()) domain.insert(v.id);
  std::set<VertexId> image;
  for (const auto& [from, to] : permutation) {
    if (!domain.count(from)) throw InvalidArgument("relabeling maps unknown vertex '" + from + "'");
    if (!image.insert(to).second) throw InvalidArgument("relabeling is not injective at '" + to + "'");
  }
  if (permutation.size() != domain.size()) throw InvalidArgument("relabeling is not total");
}

}  // namespace

EdgeIndexedGraph relabel(const EdgeIndexedGraph& g, const std::map<VertexId, VertexId>& permutation) {
  check_bijection(g, permutation);
  std::vector<Vertex> vertices;
  vertices.reserve(g.vertex_count());
  for (const auto& v : g.vertices()) vertices.push_back({mapped(permutation, v.id), v.label});
  std::vector<OrientedEdge> edges = g.edges();
  for (auto& e : edges) {
    e.source = mapped(permutation, e.source);
    e.target = mapped(permutation, e.target);
  }
  return EdgeIndexedGraph::from_parts(std::move(vertices), std::move(edges));
}

CuspidalGraph relabel(const CuspidalGraph& c, const std::map<VertexId, VertexId>& permutation) {
  CuspidalGraph out = c;
  out.core = relabel(c.core, permutation);
  for (auto& cusp : out.cusps) cusp.vertex = mapped(permutation, cusp.vertex);
  return out;
}

InvariantSignature invariant_signature(const CuspidalGraph& c) {
  InvariantSignature sig;
  std::map<VertexId, std::vector<Rational>> outgoing;
  for (const auto& v : c.core.vertices()) outgoing[v.id];
  for (const auto& e : c.core.edges()) {
    outgoing[e.source].push_back(e.weight);
    if (e.id < e.inverse) {
      const Rational& back = c.core.edge(e.inverse).weight;
      sig.weight_pairs.emplace_back(std::min(e.weight, back), std::max(e.weight, back));
    }
  }
  for (const auto& cusp : c.cusps) {
    outgoing[cusp.vertex].push_back(Rational(cusp.alpha));
    sig.cusps.emplace_back(cusp.alpha, cusp.ray_q);
  }
  for (auto& [vertex, weights] : outgoing) {
    std::sort(weights.begin(), weights.end());
    sig.degrees.push_back(weights.size());
    sig.out_weight_multisets.push_back(weights);
  }
  std::sort(sig.degrees.begin(), sig.degrees.end());
  std::sort(sig.weight_pairs.begin(), sig.weight_pairs.end());
  std::sort(sig.cusps.begin(), sig.cusps.end());
  std::sort(sig.out_weight_multisets.begin(), sig.out_weight_multisets.end());
  return sig;
}

std::string InvariantSignature::to_string() const {
  std::ostringstream os;
  os << "degrees=[";
  for (std::size_t i = 0; i < degrees.size(); ++i) os << (i ? "," : "") << degrees[i];
  os << "] pairs=[";
  for (std::size_t i = 0; i < weight_pairs.size(); ++i) {
    os << (i ? "," : "") << "(" << weight_pairs[i].first.to_string() << "," << weight_pairs[i].second.to_string()
       << ")";
  }
  os << "] cusps=[";
  for (std::size_t i = 0; i < cusps.size(); ++i) {
    os << (i ? "," : "") << "(" << cusps[i].first << "," << cusps[i].second << ")";
  }
  os << "] out=[";
  for (std::size_t i = 0; i < out_weight_multisets.size(); ++i) {
    os << (i ? "," : "") << "{";
    for (std::size_t j = 0; j < out_weight_multisets[i].size(); ++j) {
      os << (j ? "," : "") << out_weight_multisets[i][j].to_string();
    }
    os << "}";
  }
  os << "]";
  return os.str();
}

}  // namespace graphzeta
