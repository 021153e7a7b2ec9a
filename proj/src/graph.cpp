#include "monotree/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

#include "monotree/detail/traversal.hpp"
#include "monotree/rng.hpp"

namespace monotree {

Graph::Graph(std::size_t num_vertices, std::vector<Edge> edges)
    : offsets_(num_vertices + 1, 0) {
  if (num_vertices > std::numeric_limits<Vertex>::max()) {
    throw std::invalid_argument("graph: too many vertices");
  }
  for (Edge& e : edges) {
    if (e.u == e.v) {
      throw std::invalid_argument("graph: self-loop at vertex " +
                                  std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.v >= num_vertices) {
      throw std::invalid_argument("graph: endpoint " + std::to_string(e.v) +
                                  " out of range");
    }
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end());
      dup != edges.end()) {
    throw std::invalid_argument("graph: parallel edge " +
                                std::to_string(dup->u) + " " +
                                std::to_string(dup->v));
  }
  if (edges.size() > std::numeric_limits<EdgeId>::max()) {
    throw std::invalid_argument("graph: too many edges");
  }
  edges_ = std::move(edges);

  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < num_vertices; ++v) offsets_[v + 1] += offsets_[v];
  adjacency_.resize(2 * edges_.size());
  adjacency_edges_.resize(2 * edges_.size());
  // Lexicographic edge order fills every neighbour list in ascending order.
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    adjacency_[cursor[e.u]] = e.v;
    adjacency_edges_[cursor[e.u]++] = id;
    adjacency_[cursor[e.v]] = e.u;
    adjacency_edges_[cursor[e.v]++] = id;
  }
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n - (n > 0)) / 2);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

std::optional<EdgeId> Graph::edge_id(Vertex u, Vertex v) const {
  const std::size_t n = num_vertices();
  if (u >= n || v >= n || u == v) return std::nullopt;
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto nbrs = neighbours(u);
  const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) return std::nullopt;
  return incident_edges(u)[static_cast<std::size_t>(it - nbrs.begin())];
}

double Graph::density() const {
  const double n = static_cast<double>(num_vertices());
  if (n < 2) return 0.0;
  return static_cast<double>(num_edges()) / (n * (n - 1) / 2);
}

Graph sample_gnp(const GnpParams& params) {
  if (params.n < 1) throw std::invalid_argument("sample_gnp: n must be >= 1");
  if (!(params.p >= 0.0 && params.p <= 1.0)) {
    throw std::invalid_argument("sample_gnp: p must lie in [0, 1]");
  }
  const auto n = static_cast<std::int64_t>(params.n);
  if (params.p == 0.0) return Graph(params.n, {});
  if (params.p == 1.0) return Graph::complete(params.n);

  Rng rng(params.seed);
  const double log_q = std::log1p(-params.p);
  const double max_skip = static_cast<double>(n) * static_cast<double>(n);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(
      params.p * static_cast<double>(n) * static_cast<double>(n - 1) / 2 * 1.1));
  // Pairs (w, v) with w < v in column order; each step jumps over a
  // geometrically distributed run of absent pairs.
  std::int64_t v = 1;
  std::int64_t w = -1;
  while (v < n) {
    const double skip = std::floor(std::log1p(-uniform01(rng)) / log_q);
    w += 1 + static_cast<std::int64_t>(std::min(skip, max_skip));
    while (w >= v && v < n) {
      w -= v;
      ++v;
    }
    if (v < n) edges.push_back({static_cast<Vertex>(w), static_cast<Vertex>(v)});
  }
  return Graph(params.n, std::move(edges));
}

DisjointSets::DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
  for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
}

std::size_t DisjointSets::find(std::size_t x) {
  std::size_t root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    const std::size_t next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

bool DisjointSets::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  return true;
}

namespace {

std::vector<VertexSet> group_labels(const std::vector<std::uint32_t>& label) {
  std::vector<VertexSet> out;
  for (Vertex v = 0; v < label.size(); ++v) {
    if (label[v] == kNoComponent) continue;
    if (label[v] >= out.size()) out.resize(label[v] + 1);
    out[label[v]].push_back(v);
  }
  return out;
}

}  // namespace

std::vector<std::uint32_t> component_labels(const Graph& g) {
  return detail::label_components(
      g, [](Vertex) { return true; }, [](EdgeId) { return true; });
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return group_labels(component_labels(g));
}

std::vector<VertexSet> connected_components(
    const Graph& g, const std::function<bool(Vertex)>& keep) {
  // Evaluate the predicate once per vertex.
  std::vector<std::uint8_t> kept(g.num_vertices());
  for (Vertex v = 0; v < kept.size(); ++v) kept[v] = keep(v) ? 1 : 0;
  return group_labels(detail::label_components(
      g, [&](Vertex v) { return kept[v] != 0; }, [](EdgeId) { return true; }));
}

std::optional<std::vector<Edge>> spanning_tree(const Graph& g,
                                               std::span<const Vertex> part) {
  return detail::spanning_tree_filtered(g, part, [](EdgeId) { return true; });
}

DegeneracyOrder degeneracy_order(const Graph& g,
                                 std::span<const Vertex> subset) {
  std::vector<std::uint8_t> alive(g.num_vertices(), 0);
  for (Vertex v : subset) alive[v] = 1;
  std::vector<std::size_t> remaining(g.num_vertices(), 0);
  using Entry = std::pair<std::size_t, Vertex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  std::size_t count = 0;
  for (Vertex v = 0; v < alive.size(); ++v) {
    if (!alive[v]) continue;
    ++count;
    for (Vertex w : g.neighbours(v)) remaining[v] += alive[w];
    heap.push({remaining[v], v});
  }

  DegeneracyOrder result;
  result.order.reserve(count);
  while (!heap.empty()) {
    const auto [deg, v] = heap.top();
    heap.pop();
    if (!alive[v] || deg != remaining[v]) continue;  // stale entry
    alive[v] = 0;
    result.order.push_back(v);
    result.degeneracy = std::max(result.degeneracy, deg);
    for (Vertex w : g.neighbours(v)) {
      if (!alive[w]) continue;
      --remaining[w];
      heap.push({remaining[w], w});
    }
  }
  return result;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> index(g.num_vertices(), kNoComponent);
  for (Vertex i = 0; i < vertices.size(); ++i) {
    if (index[vertices[i]] != kNoComponent) {
      throw std::invalid_argument("induced_subgraph: repeated vertex");
    }
    index[vertices[i]] = i;
  }
  std::vector<Edge> edges;
  for (Vertex i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbours(vertices[i])) {
      if (index[w] != kNoComponent && i < index[w]) edges.push_back({i, index[w]});
    }
  }
  return Graph(vertices.size(), std::move(edges));
}

}  // namespace monotree
