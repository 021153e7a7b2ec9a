#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "monotree/graph.hpp"
#include "monotree/rng.hpp"

namespace monotree {

using Colour = std::uint8_t;

inline constexpr Colour kRed = 0;
inline constexpr Colour kBlue = 1;
inline constexpr Colour kGreen = 2;

inline constexpr Colour opposite(Colour c) { return c == kRed ? kBlue : kRed; }

// Total map from the edges of a graph to colours 0..r-1. Holds a non-owning
// reference: the graph must outlive the colouring.
class EdgeColouring {
 public:
  // Throws std::invalid_argument unless colours.size() == m, r >= 2 and every
  // colour is below r.
  EdgeColouring(const Graph& g, std::vector<Colour> colours, int num_colours = 2);

  static EdgeColouring uniform(const Graph& g, Colour c, int num_colours = 2);
  // Each edge independently uniform over the r colours.
  static EdgeColouring random(const Graph& g, Rng& rng, int num_colours = 2);

  const Graph& graph() const { return *graph_; }
  int num_colours() const { return num_colours_; }

  Colour colour(EdgeId e) const { return colours_[e]; }
  std::optional<Colour> colour_of(Vertex u, Vertex v) const;
  std::span<const Colour> colours() const { return colours_; }

  std::size_t degree_in(Vertex v, Colour c) const;
  // Neighbours of v joined to it by an edge of colour c, ascending.
  std::vector<Vertex> neighbours_in(Vertex v, Colour c) const;

  // The spanning subgraph (V, colour^{-1}(c)).
  Graph subgraph(Colour c) const;

  // Red and blue exchanged; requires r == 2.
  EdgeColouring swapped() const;

 private:
  const Graph* graph_;
  std::vector<Colour> colours_;
  int num_colours_;
};

// Components of the colour-c subgraph, including singleton components, each
// sorted and listed by smallest member.
std::vector<VertexSet> mono_components(const EdgeColouring& c, Colour colour);

// labels[v] indexes v's component in mono_components(c, colour).
std::vector<std::uint32_t> mono_component_labels(const EdgeColouring& c,
                                                 Colour colour);

// Spanning tree of the colour-c graph induced on `part`, or nullopt when
// that graph is disconnected.
std::optional<std::vector<Edge>> mono_spanning_tree(const EdgeColouring& c,
                                                    Colour colour,
                                                    std::span<const Vertex> part);

// R: red degree exceeds a third of the degree. B: same for blue. Isolated
// vertices are placed in both classes, which keeps R and B covering V.
struct VertexClasses {
  std::vector<std::uint8_t> in_red;
  std::vector<std::uint8_t> in_blue;

  bool red(Vertex v) const { return in_red[v] != 0; }
  bool blue(Vertex v) const { return in_blue[v] != 0; }
  VertexSet red_members() const;
  VertexSet blue_members() const;
};

VertexClasses vertex_classes(const EdgeColouring& c);

struct ColouringClass {
  enum class Tag { kExtremal, kNonExtremal };
  Tag tag = Tag::kNonExtremal;
  // (r, b): r in R, b in B, r != b, no monochromatic r-b path.
  std::optional<std::pair<Vertex, Vertex>> witness;

  bool extremal() const { return tag == Tag::kExtremal; }
};

// Extremal with the lexicographically smallest witness, or NonExtremal.
ColouringClass classify(const EdgeColouring& c);

// Whether (r, b) is a witness of extremality for c.
bool is_extremal_witness(const EdgeColouring& c, Vertex r, Vertex b);

struct TreePart {
  VertexSet vertices;
  Colour colour = kRed;
  std::vector<Edge> edges;
};

// At most `bound` monochromatic trees whose vertex sets partition V.
struct TreeCover {
  std::vector<TreePart> parts;
  std::size_t bound = 2;

  std::size_t non_empty_parts() const;
};

// The certificate checker: parts pairwise disjoint, union V, at most `bound`
// non-empty parts, and each part's edges form a spanning tree of that part in
// the declared colour.
bool verify_partition(const EdgeColouring& c, const TreeCover& cover);

}  // namespace monotree
