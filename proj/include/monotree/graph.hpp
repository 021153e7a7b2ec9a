#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace monotree {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph on the vertices 0..n-1, stored as sorted
// neighbour lists. Edges are kept canonically (u < v) in lexicographic order;
// an EdgeId is the position in that list.
class Graph {
 public:
  Graph() : offsets_{0} {}

  // Edges may be given in any order and orientation. Throws
  // std::invalid_argument on self-loops, parallel edges and endpoints >= n.
  Graph(std::size_t num_vertices, std::vector<Edge> edges);

  static Graph complete(std::size_t n);

  std::size_t num_vertices() const { return offsets_.size() - 1; }
  std::size_t num_edges() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const Vertex> neighbours(Vertex v) const {
    return {adjacency_.data() + offsets_[v], degree(v)};
  }
  // incident_edges(v)[i] is the id of {v, neighbours(v)[i]}.
  std::span<const EdgeId> incident_edges(Vertex v) const {
    return {adjacency_edges_.data() + offsets_[v], degree(v)};
  }

  std::optional<EdgeId> edge_id(Vertex u, Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const { return edge_id(u, v).has_value(); }

  // m / C(n, 2); zero when n < 2.
  double density() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::vector<EdgeId> adjacency_edges_;
  std::vector<Edge> edges_;
};

struct GnpParams {
  std::size_t n = 1;
  double p = 0.0;
  std::uint64_t seed = 0;
};

// Binomial random graph. Walks the pair sequence with geometric skips, so the
// cost is O(n + m) in expectation. Same parameters give the same graph.
// Throws std::invalid_argument unless n >= 1 and 0 <= p <= 1.
Graph sample_gnp(const GnpParams& params);

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);

  std::size_t find(std::size_t x);
  // Returns false when a and b were already in the same set.
  bool unite(std::size_t a, std::size_t b);
  bool same(std::size_t a, std::size_t b) { return find(a) == find(b); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::uint8_t> rank_;
};

inline constexpr std::uint32_t kNoComponent = 0xffffffffu;

// Components of the whole graph, each sorted, listed by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

// Components of the subgraph induced by {v : keep(v)}.
std::vector<VertexSet> connected_components(
    const Graph& g, const std::function<bool(Vertex)>& keep);

// labels[v] is the index of v's component in connected_components(g).
std::vector<std::uint32_t> component_labels(const Graph& g);

// Spanning tree of the subgraph induced by `part`, as canonical edges, or
// nullopt when that subgraph is disconnected. Empty and singleton parts give an
// empty edge list.
std::optional<std::vector<Edge>> spanning_tree(const Graph& g,
                                               std::span<const Vertex> part);

struct DegeneracyOrder {
  std::vector<Vertex> order;
  std::size_t degeneracy = 0;
};

// Smallest-last ordering of `subset`: repeatedly removes a vertex of minimum
// remaining degree (smallest id on ties). Every vertex has at most
// `degeneracy` neighbours later in the order, and no order does better.
DegeneracyOrder degeneracy_order(const Graph& g, std::span<const Vertex> subset);

// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace monotree
