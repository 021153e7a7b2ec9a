#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "monotree/graph.hpp"

namespace monotree::detail {

// BFS labelling restricted to vertices passing keep_vertex and edges passing
// keep_edge. Labels are assigned in order of smallest member.
template <class VertexFilter, class EdgeFilter>
std::vector<std::uint32_t> label_components(const Graph& g,
                                            VertexFilter&& keep_vertex,
                                            EdgeFilter&& keep_edge) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> label(n, kNoComponent);
  std::vector<Vertex> queue;
  std::uint32_t next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] != kNoComponent || !keep_vertex(s)) continue;
    label[s] = next;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      const auto nbrs = g.neighbours(v);
      const auto ids = g.incident_edges(v);
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        const Vertex w = nbrs[i];
        if (label[w] != kNoComponent || !keep_edge(ids[i]) || !keep_vertex(w)) {
          continue;
        }
        label[w] = next;
        queue.push_back(w);
      }
    }
    ++next;
  }
  return label;
}

template <class EdgeFilter>
std::optional<std::vector<Edge>> spanning_tree_filtered(
    const Graph& g, std::span<const Vertex> part, EdgeFilter&& keep_edge) {
  std::vector<Edge> tree;
  if (part.empty()) return tree;
  std::vector<std::uint8_t> state(g.num_vertices(), 0);  // 1 member, 2 reached
  std::size_t members = 0;
  Vertex root = part.front();
  for (Vertex v : part) {
    if (state[v] == 0) ++members;
    state[v] = 1;
    root = std::min(root, v);
  }
  tree.reserve(members - 1);
  std::vector<Vertex> queue{root};
  state[root] = 2;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    const auto nbrs = g.neighbours(v);
    const auto ids = g.incident_edges(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const Vertex w = nbrs[i];
      if (state[w] != 1 || !keep_edge(ids[i])) continue;
      state[w] = 2;
      queue.push_back(w);
      tree.push_back(v < w ? Edge{v, w} : Edge{w, v});
    }
  }
  if (queue.size() != members) return std::nullopt;
  return tree;
}

}  // namespace monotree::detail
