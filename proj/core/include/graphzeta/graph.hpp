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

#ifndef GRAPHZETA_GRAPH_HPP_
#define GRAPHZETA_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphzeta/rational.hpp"

namespace graphzeta {

using VertexId = std::string;
using EdgeId = std::size_t;

struct Vertex {
  VertexId id;
  std::string label;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// An oriented edge. weight is w(e) = |G_s(e)| / |G_e| for graphs of groups.
struct OrientedEdge {
  EdgeId id = 0;
  VertexId source;
  VertexId target;
  EdgeId inverse = 0;
  Rational weight;

  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
};

// Finite graph with a positive weight on every oriented edge. Edges added
// through add_edge come in inverse pairs (2k, 2k+1); from_parts accepts
// arbitrary data so that validate() can diagnose it.
class EdgeIndexedGraph {
 public:
  EdgeIndexedGraph() = default;
  static EdgeIndexedGraph from_parts(std::vector<Vertex> vertices, std::vector<OrientedEdge> edges);

  // Throws InvalidArgument on a duplicate id.
  void add_vertex(VertexId id, std::string label = {});
  // Adds a -> b with weight wa and b -> a with weight wb; returns both ids.
  // Throws InvalidArgument when an endpoint is unknown.
  std::pair<EdgeId, EdgeId> add_edge(const VertexId& a, const VertexId& b, Rational wa, Rational wb);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<OrientedEdge>& edges() const { return edges_; }
  const OrientedEdge& edge(EdgeId id) const { return edges_.at(id); }
  bool has_vertex(const VertexId& id) const;
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  // Copy with the weight of one oriented edge replaced.
  EdgeIndexedGraph with_weight(EdgeId id, Rational weight) const;

  // Lexicographic vertex order.
  std::vector<VertexId> canonical_vertex_order() const;
  // Oriented edges sorted by (source, target, id).
  std::vector<EdgeId> canonical_edge_order() const;

  // Sum of w(e) over edges leaving v.
  Rational out_weight(const VertexId& v) const;

  bool all_weights_integral() const;
  bool all_weights_one() const;

  friend bool operator==(const EdgeIndexedGraph&, const EdgeIndexedGraph&) = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<OrientedEdge> edges_;
};

// Edge of a graph of finite groups, with the order of its edge group.
struct GroupEdge {
  VertexId a;
  VertexId b;
  std::int64_t order = 1;
};

struct GraphOfGroups {
  std::vector<VertexId> vertices;
  std::map<VertexId, std::int64_t> vertex_order;
  std::vector<GroupEdge> edges;
  std::int64_t central_order = 1;
  std::int64_t q = 2;
};

// Standard cusp: a ray attached at `vertex`. The attachment edge has weight
// alpha outward and ray_q inward; every later ray edge has weight 1 outward
// and ray_q inward.
struct Cusp {
  VertexId vertex;
  std::int64_t alpha = 1;
  std::int64_t ray_q = 2;

  friend bool operator==(const Cusp&, const Cusp&) = default;
};

// Finite core plus standard cusp rays; the computational model of a
// geometrically finite graph of groups.
struct CuspidalGraph {
  EdgeIndexedGraph core;
  std::vector<Cusp> cusps;
  std::int64_t q = 2;
  std::int64_t central_order = 1;

  friend bool operator==(const CuspidalGraph&, const CuspidalGraph&) = default;
};

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  // Meaningful only when a regularity parameter was requested.
  bool regular = true;

  bool ok() const { return errors.empty(); }
};

// Structural checks (inverse pairing, endpoints, positive weights,
// connectivity). With expect_q, each vertex whose weighted out-degree
// differs from q + 1 produces a warning and clears `regular`.
ValidationReport validate(const EdgeIndexedGraph& g, std::optional<std::int64_t> expect_q = std::nullopt);
ValidationReport validate(const CuspidalGraph& c, std::optional<std::int64_t> expect_q = std::nullopt);

// Throws ValidationError listing every structural error.
void require_valid(const EdgeIndexedGraph& g);
void require_valid(const CuspidalGraph& c);

// Weighted graph of a graph of groups: w(e) = |G_s(e)| / |G_e|. Throws
// ValidationError naming the edge when an edge order does not divide an
// endpoint order.
EdgeIndexedGraph weights_from_groups(const GraphOfGroups& g);

// Replaces each cusp by a path of `depth` ray vertices; the last one is a
// leaf. Throws InvalidArgument for depth < 1.
EdgeIndexedGraph truncate(const CuspidalGraph& c, std::size_t depth);

// Renames vertices. The map must be a bijection on the vertex ids; throws
// InvalidArgument otherwise.
EdgeIndexedGraph relabel(const EdgeIndexedGraph& g, const std::map<VertexId, VertexId>& permutation);
CuspidalGraph relabel(const CuspidalGraph& c, const std::map<VertexId, VertexId>& permutation);

// Isomorphism invariants. Different signatures certify non-isomorphism.
struct InvariantSignature {
  std::vector<std::size_t> degrees;
  std::vector<std::pair<Rational, Rational>> weight_pairs;
  std::vector<std::pair<std::int64_t, std::int64_t>> cusps;
  std::vector<std::vector<Rational>> out_weight_multisets;

  friend bool operator==(const InvariantSignature&, const InvariantSignature&) = default;
  std::string to_string() const;
};

InvariantSignature invariant_signature(const CuspidalGraph& c);

}  // namespace graphzeta

#endif  // GRAPHZETA_GRAPH_HPP_
