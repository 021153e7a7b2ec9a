#include "monotree/colouring.hpp"

#include <stdexcept>

#include "monotree/detail/traversal.hpp"

namespace monotree {

EdgeColouring::EdgeColouring(const Graph& g, std::vector<Colour> colours,
                             int num_colours)
    : graph_(&g), colours_(std::move(colours)), num_colours_(num_colours) {
  if (num_colours_ < 2 || num_colours_ > 255) {
    throw std::invalid_argument("colouring: need between 2 and 255 colours");
  }
  if (colours_.size() != g.num_edges()) {
    throw std::invalid_argument("colouring: one colour per edge required");
  }
  for (Colour c : colours_) {
    if (c >= num_colours_) throw std::invalid_argument("colouring: colour out of range");
  }
}

EdgeColouring EdgeColouring::uniform(const Graph& g, Colour c, int num_colours) {
  return EdgeColouring(g, std::vector<Colour>(g.num_edges(), c), num_colours);
}

EdgeColouring EdgeColouring::random(const Graph& g, Rng& rng, int num_colours) {
  std::vector<Colour> colours(g.num_edges());
  for (Colour& c : colours) {
    c = static_cast<Colour>(uniform_below(rng, static_cast<std::uint64_t>(num_colours)));
  }
  return EdgeColouring(g, std::move(colours), num_colours);
}

std::optional<Colour> EdgeColouring::colour_of(Vertex u, Vertex v) const {
  const auto id = graph_->edge_id(u, v);
  if (!id) return std::nullopt;
  return colours_[*id];
}

std::size_t EdgeColouring::degree_in(Vertex v, Colour c) const {
  std::size_t d = 0;
  for (EdgeId e : graph_->incident_edges(v)) d += colours_[e] == c;
  return d;
}

std::vector<Vertex> EdgeColouring::neighbours_in(Vertex v, Colour c) const {
  std::vector<Vertex> out;
  const auto nbrs = graph_->neighbours(v);
  const auto ids = graph_->incident_edges(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    if (colours_[ids[i]] == c) out.push_back(nbrs[i]);
  }
  return out;
}

Graph EdgeColouring::subgraph(Colour c) const {
  std::vector<Edge> edges;
  const auto all = graph_->edges();
  for (EdgeId e = 0; e < all.size(); ++e) {
    if (colours_[e] == c) edges.push_back(all[e]);
  }
  return Graph(graph_->num_vertices(), std::move(edges));
}

EdgeColouring EdgeColouring::swapped() const {
  if (num_colours_ != 2) throw std::invalid_argument("swapped: needs two colours");
  std::vector<Colour> flipped(colours_.size());
  for (std::size_t e = 0; e < flipped.size(); ++e) flipped[e] = opposite(colours_[e]);
  return EdgeColouring(*graph_, std::move(flipped), 2);
}

std::vector<std::uint32_t> mono_component_labels(const EdgeColouring& c,
                                                 Colour colour) {
  const auto colours = c.colours();
  return detail::label_components(
      c.graph(), [](Vertex) { return true; },
      [&](EdgeId e) { return colours[e] == colour; });
}

std::vector<VertexSet> mono_components(const EdgeColouring& c, Colour colour) {
  const auto label = mono_component_labels(c, colour);
  std::vector<VertexSet> out;
  for (Vertex v = 0; v < label.size(); ++v) {
    if (label[v] >= out.size()) out.resize(label[v] + 1);
    out[label[v]].push_back(v);
  }
  return out;
}

std::optional<std::vector<Edge>> mono_spanning_tree(const EdgeColouring& c,
                                                    Colour colour,
                                                    std::span<const Vertex> part) {
  const auto colours = c.colours();
  return detail::spanning_tree_filtered(
      c.graph(), part, [&](EdgeId e) { return colours[e] == colour; });
}

VertexSet VertexClasses::red_members() const {
  VertexSet out;
  for (Vertex v = 0; v < in_red.size(); ++v) {
    if (in_red[v]) out.push_back(v);
  }
  return out;
}

VertexSet VertexClasses::blue_members() const {
  VertexSet out;
  for (Vertex v = 0; v < in_blue.size(); ++v) {
    if (in_blue[v]) out.push_back(v);
  }
  return out;
}

VertexClasses vertex_classes(const EdgeColouring& c) {
  if (c.num_colours() != 2) throw std::invalid_argument("vertex_classes: needs two colours");
  const Graph& g = c.graph();
  VertexClasses classes;
  classes.in_red.assign(g.num_vertices(), 0);
  classes.in_blue.assign(g.num_vertices(), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const std::size_t d = g.degree(v);
    if (d == 0) {
      classes.in_red[v] = classes.in_blue[v] = 1;
      continue;
    }
    const std::size_t red = c.degree_in(v, kRed);
    // d_red > d/3 and d_blue > d/3, in integers.
    classes.in_red[v] = 3 * red > d;
    classes.in_blue[v] = 3 * (d - red) > d;
  }
  return classes;
}

namespace {

struct MonoLabels {
  std::vector<std::uint32_t> red;
  std::vector<std::uint32_t> blue;

  explicit MonoLabels(const EdgeColouring& c)
      : red(mono_component_labels(c, kRed)), blue(mono_component_labels(c, kBlue)) {}

  bool connected(Vertex a, Vertex b) const {
    return red[a] == red[b] || blue[a] == blue[b];
  }
};

}  // namespace

bool is_extremal_witness(const EdgeColouring& c, Vertex r, Vertex b) {
  const std::size_t n = c.graph().num_vertices();
  if (r >= n || b >= n || r == b) return false;
  const auto classes = vertex_classes(c);
  if (!classes.red(r) || !classes.blue(b)) return false;
  return !MonoLabels(c).connected(r, b);
}

ColouringClass classify(const EdgeColouring& c) {
  const auto classes = vertex_classes(c);
  const MonoLabels labels(c);
  const VertexSet reds = classes.red_members();
  const VertexSet blues = classes.blue_members();
  for (Vertex r : reds) {
    for (Vertex b : blues) {
      if (b != r && !labels.connected(r, b)) {
        return {ColouringClass::Tag::kExtremal, std::pair{r, b}};
      }
    }
  }
  return {};
}

std::size_t TreeCover::non_empty_parts() const {
  std::size_t count = 0;
  for (const auto& part : parts) count += !part.vertices.empty();
  return count;
}

bool verify_partition(const EdgeColouring& c, const TreeCover& cover) {
  const Graph& g = c.graph();
  const std::size_t n = g.num_vertices();
  if (cover.non_empty_parts() > cover.bound) return false;

  std::vector<std::uint32_t> owner(n, kNoComponent);
  std::size_t covered = 0;
  for (std::uint32_t i = 0; i < cover.parts.size(); ++i) {
    for (Vertex v : cover.parts[i].vertices) {
      if (v >= n || owner[v] != kNoComponent) return false;
      owner[v] = i;
      ++covered;
    }
  }
  if (covered != n) return false;

  DisjointSets forest(n);
  for (std::uint32_t i = 0; i < cover.parts.size(); ++i) {
    const TreePart& part = cover.parts[i];
    if (part.colour >= c.num_colours()) return false;
    const std::size_t size = part.vertices.size();
    if (part.edges.size() != (size == 0 ? 0 : size - 1)) return false;
    for (const Edge& e : part.edges) {
      if (e.u >= n || e.v >= n || owner[e.u] != i || owner[e.v] != i) return false;
      const auto colour = c.colour_of(e.u, e.v);
      if (!colour || *colour != part.colour) return false;
      // |part| - 1 acyclic edges inside the part span it.
      if (!forest.unite(e.u, e.v)) return false;
    }
  }
  return true;
}

}  // namespace monotree
