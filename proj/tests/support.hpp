#pragma once

// Reference implementations used as oracles by the tests: recursion and
// adjacency matrices in place of the library traversals.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "monotree/colouring.hpp"
#include "monotree/graph.hpp"

namespace monotree::testing {

using Matrix = std::vector<std::vector<int>>;  // -1 no edge, else colour

inline Matrix colour_matrix(const EdgeColouring& c) {
  const std::size_t n = c.graph().num_vertices();
  Matrix m(n, std::vector<int>(n, -1));
  for (EdgeId e = 0; e < c.graph().num_edges(); ++e) {
    const Edge& edge = c.graph().edge(e);
    m[edge.u][edge.v] = m[edge.v][edge.u] = c.colour(e);
  }
  return m;
}

inline Matrix plain_matrix(const Graph& g) {
  const std::size_t n = g.num_vertices();
  Matrix m(n, std::vector<int>(n, -1));
  for (const Edge& e : g.edges()) m[e.u][e.v] = m[e.v][e.u] = 0;
  return m;
}

// Recursive DFS over vertices with keep[v], following entries equal to
// `colour` (or any entry when colour < 0).
inline void dfs(const Matrix& m, int colour, const std::vector<bool>& keep, std::size_t v,
                std::vector<int>& label, int id) {
  label[v] = id;
  for (std::size_t w = 0; w < m.size(); ++w) {
    if (label[w] >= 0 || !keep[w] || m[v][w] < 0) continue;
    if (colour >= 0 && m[v][w] != colour) continue;
    dfs(m, colour, keep, w, label, id);
  }
}

inline std::vector<VertexSet> dfs_components(const Matrix& m, int colour,
                                             const std::vector<bool>& keep) {
  std::vector<int> label(m.size(), -1);
  std::vector<VertexSet> comps;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (label[v] >= 0 || !keep[v]) continue;
    dfs(m, colour, keep, v, label, static_cast<int>(comps.size()));
    comps.emplace_back();
  }
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (label[v] >= 0) comps[label[v]].push_back(static_cast<Vertex>(v));
  }
  return comps;
}

inline bool connected_in(const Matrix& m, int colour, const VertexSet& part) {
  if (part.empty()) return true;
  std::vector<bool> keep(m.size(), false);
  for (Vertex v : part) keep[v] = true;
  return dfs_components(m, colour, keep).size() == 1;
}

inline bool mono_path(const Matrix& m, Vertex a, Vertex b) {
  std::vector<bool> keep(m.size(), true);
  for (int colour = 0; colour < 2; ++colour) {
    std::vector<int> label(m.size(), -1);
    dfs(m, colour, keep, a, label, 0);
    if (label[b] == 0) return true;
  }
  return false;
}

// Whether V splits into at most k parts, each connected in one colour, by
// recursive assignment with pruning on nothing at all.
inline bool brute_force_pi_k(const EdgeColouring& c, std::size_t k) {
  const Matrix m = colour_matrix(c);
  const std::size_t n = m.size();
  std::vector<std::size_t> part(n, 0);
  std::function<bool(std::size_t)> assign = [&](std::size_t v) {
    if (v == n) {
      for (std::size_t p = 0; p < k; ++p) {
        VertexSet members;
        for (std::size_t u = 0; u < n; ++u) {
          if (part[u] == p) members.push_back(static_cast<Vertex>(u));
        }
        bool ok = members.empty();
        for (int colour = 0; colour < c.num_colours() && !ok; ++colour) {
          ok = connected_in(m, colour, members);
        }
        if (!ok) return false;
      }
      return true;
    }
    for (std::size_t p = 0; p < k; ++p) {
      part[v] = p;
      if (assign(v + 1)) return true;
    }
    return false;
  };
  return assign(0);
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, static_cast<Vertex>((v + 1) % n)});
  return Graph(n, edges);
}

// Obstruction on {u=0, a=1, b=2, w=3, v=4}: ua and bv red; ab, aw, bw blue.
inline Graph obstruction_graph() {
  return Graph(5, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}});
}

inline EdgeColouring obstruction_colouring(const Graph& g) {
  std::vector<Colour> colours;
  for (const Edge& e : g.edges()) {
    const bool red = (e.u == 0 && e.v == 1) || (e.u == 2 && e.v == 4);
    colours.push_back(red ? kRed : kBlue);
  }
  return EdgeColouring(g, colours);
}

inline EdgeColouring colouring_from_bits(const Graph& g, std::uint64_t bits) {
  std::vector<Colour> colours(g.num_edges());
  for (std::size_t e = 0; e < colours.size(); ++e) colours[e] = (bits >> e) & 1;
  return EdgeColouring(g, colours);
}

// Acyclic spanning check of a claimed tree, independent of verify_partition.
inline bool is_spanning_tree(const EdgeColouring& c, const TreePart& part) {
  const Matrix m = colour_matrix(c);
  if (part.vertices.empty()) return part.edges.empty();
  if (part.edges.size() + 1 != part.vertices.size()) return false;
  Matrix tree(m.size(), std::vector<int>(m.size(), -1));
  const std::set<Vertex> members(part.vertices.begin(), part.vertices.end());
  for (const Edge& e : part.edges) {
    if (!members.count(e.u) || !members.count(e.v)) return false;
    if (m[e.u][e.v] != part.colour) return false;
    tree[e.u][e.v] = tree[e.v][e.u] = 0;
  }
  return connected_in(tree, 0, part.vertices);
}

}  // namespace monotree::testing
