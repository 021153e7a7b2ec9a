#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "monotree/colouring.hpp"

namespace monotree {

// Non-adjacent u < v with disjoint neighbourhoods.
struct DiameterWitness {
  Vertex u = 0;
  Vertex v = 0;
};

std::optional<DiameterWitness> find_diameter_witness(const Graph& g);

// Edges at u or v red, all others blue. u and v cannot share a red tree and
// only red stars reach them, so no partition into two monochromatic trees
// exists once some vertex lies outside N[u] ∪ N[v].
EdgeColouring diameter_colouring_for(const Graph& g, const DiameterWitness& w);

// The colouring for the lexicographically first witness, or nullopt.
std::optional<std::pair<EdgeColouring, DiameterWitness>> diameter_colouring(
    const Graph& g);

// Independent r < b < g < z with no vertex adjacent to all four. For x in
// N(r) ∪ N(b) ∪ N(g) outside the common neighbourhood of r, b and g, mc[x] is
// the colour reserved for the edge zx; mc is -1 elsewhere.
struct TriWitness {
  Vertex r = 0;
  Vertex b = 0;
  Vertex g = 0;
  Vertex z = 0;
  std::vector<std::int8_t> mc;
};

class InfeasibleConstraint : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

std::optional<TriWitness> find_tri_witness(const Graph& g);

// A 3-colouring that admits no partition into three monochromatic trees. Edges
// with several allowed colours take the smallest. Throws InfeasibleConstraint
// if some edge has no allowed colour.
EdgeColouring tri_colouring_for(const Graph& g, TriWitness& w);

std::optional<std::pair<EdgeColouring, TriWitness>> tri_colouring(const Graph& g);

// Certificate for tri_colouring: every edge at r is red, at b blue, at g
// green, and in no colour does z's component contain r, b or g.
bool check_tri_obstruction(const EdgeColouring& c, const TriWitness& w);

// r is the smallest vertex with a non-neighbour and b its smallest
// non-neighbour; edges at r red, all others blue. (r, b) is then an extremal
// witness. nullopt for complete graphs.
std::optional<std::pair<EdgeColouring, std::pair<Vertex, Vertex>>>
star_extremal_colouring(const Graph& g);

}  // namespace monotree
