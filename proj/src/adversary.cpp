#include "monotree/adversary.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <string>

namespace monotree {
namespace {

constexpr std::uint8_t kInR = 1;
constexpr std::uint8_t kInB = 2;
constexpr std::uint8_t kInG = 4;
constexpr std::uint8_t kAll = kInR | kInB | kInG;

VertexSet intersect(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Allowed colours (bit c for colour c) of an edge between two vertices of X
// with root-membership masks a and b.
std::uint8_t allowed_within_x(std::uint8_t a, std::uint8_t b) {
  std::uint8_t allowed = 0;
  const std::uint8_t shared = a & b;
  if (shared & kInR) allowed |= 1u << kRed;
  if (shared & kInB) allowed |= 1u << kBlue;
  if (shared & kInG) allowed |= 1u << kGreen;
  auto between = [&](auto first, auto second, Colour colour) {
    if ((first(a) && second(b)) || (first(b) && second(a))) allowed |= 1u << colour;
  };
  // N(r)\N(b) to N(b)\(N(r) ∪ N(g)) red, and the two rotations.
  between([](std::uint8_t m) { return (m & kInR) && !(m & kInB); },
          [](std::uint8_t m) { return m == kInB; }, kRed);
  between([](std::uint8_t m) { return (m & kInB) && !(m & kInG); },
          [](std::uint8_t m) { return m == kInG; }, kBlue);
  between([](std::uint8_t m) { return (m & kInG) && !(m & kInR); },
          [](std::uint8_t m) { return m == kInR; }, kGreen);
  return allowed;
}

Colour smallest(std::uint8_t allowed) {
  for (Colour c = 0; c < 3; ++c) {
    if (allowed & (1u << c)) return c;
  }
  return 3;
}

}  // namespace

std::optional<DiameterWitness> find_diameter_witness(const Graph& g) {
  const std::size_t n = g.num_vertices();
  // mark[w] == u + 1 flags w ∈ N[u] for the current u.
  std::vector<std::uint32_t> mark(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    mark[u] = u + 1;
    for (Vertex w : g.neighbours(u)) mark[w] = u + 1;
    for (Vertex v = u + 1; v < n; ++v) {
      if (mark[v] == u + 1) continue;
      const auto nbrs = g.neighbours(v);
      if (std::none_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return mark[w] == u + 1; })) {
        return DiameterWitness{u, v};
      }
    }
  }
  return std::nullopt;
}

EdgeColouring diameter_colouring_for(const Graph& g, const DiameterWitness& w) {
  std::vector<Colour> colours(g.num_edges(), kBlue);
  for (Vertex root : {w.u, w.v}) {
    for (EdgeId e : g.incident_edges(root)) colours[e] = kRed;
  }
  return EdgeColouring(g, std::move(colours), 2);
}

std::optional<std::pair<EdgeColouring, DiameterWitness>> diameter_colouring(
    const Graph& g) {
  const auto w = find_diameter_witness(g);
  if (!w) return std::nullopt;
  return std::pair{diameter_colouring_for(g, *w), *w};
}

std::optional<TriWitness> find_tri_witness(const Graph& g) {
  const std::size_t n = g.num_vertices();
  for (Vertex r = 0; r < n; ++r) {
    for (Vertex b = r + 1; b < n; ++b) {
      if (g.has_edge(r, b)) continue;
      const VertexSet rb = intersect(g.neighbours(r), g.neighbours(b));
      for (Vertex gv = b + 1; gv < n; ++gv) {
        if (g.has_edge(r, gv) || g.has_edge(b, gv)) continue;
        const VertexSet rbg = intersect(rb, g.neighbours(gv));
        for (Vertex z = gv + 1; z < n; ++z) {
          if (g.has_edge(r, z) || g.has_edge(b, z) || g.has_edge(gv, z)) continue;
          const auto nz = g.neighbours(z);
          const bool common = std::any_of(rbg.begin(), rbg.end(), [&](Vertex x) {
            return std::binary_search(nz.begin(), nz.end(), x);
          });
          if (!common) return TriWitness{r, b, gv, z, {}};
        }
      }
    }
  }
  return std::nullopt;
}

EdgeColouring tri_colouring_for(const Graph& g, TriWitness& w) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint8_t> member(n, 0);
  for (Vertex x : g.neighbours(w.r)) member[x] |= kInR;
  for (Vertex x : g.neighbours(w.b)) member[x] |= kInB;
  for (Vertex x : g.neighbours(w.g)) member[x] |= kInG;
  auto in_x = [&](Vertex v) { return member[v] != 0; };
  auto is_root = [&](Vertex v) { return v == w.r || v == w.b || v == w.g; };
  auto is_y = [&](Vertex v) { return !in_x(v) && !is_root(v) && v != w.z; };

  constexpr Colour kUncoloured = 0xff;
  std::vector<Colour> colours(g.num_edges(), kUncoloured);
  auto infeasible = [](const Edge& e, const char* why) {
    return InfeasibleConstraint("tri colouring: edge " + std::to_string(e.u) + " " +
                                std::to_string(e.v) + ": " + why);
  };

  // Root stars and edges inside X.
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    if (e.u == w.r || e.v == w.r) {
      colours[id] = kRed;
    } else if (e.u == w.b || e.v == w.b) {
      colours[id] = kBlue;
    } else if (e.u == w.g || e.v == w.g) {
      colours[id] = kGreen;
    } else if (in_x(e.u) && in_x(e.v)) {
      const Colour c = smallest(allowed_within_x(member[e.u], member[e.v]));
      if (c > kGreen) throw infeasible(e, "no allowed colour inside X");
      colours[id] = c;
    }
  }

  // Missing colours, from the edges fixed so far.
  w.mc.assign(n, -1);
  for (Vertex x = 0; x < n; ++x) {
    if (!in_x(x) || member[x] == kAll) continue;
    std::array<bool, 3> present{};
    const auto ids = g.incident_edges(x);
    for (EdgeId id : ids) {
      if (colours[id] != kUncoloured) present[colours[id]] = true;
    }
    const auto missing = std::find(present.begin(), present.end(), false);
    if (missing == present.end()) {
      throw InfeasibleConstraint("tri colouring: vertex " + std::to_string(x) +
                                 " sees all three colours");
    }
    w.mc[x] = static_cast<std::int8_t>(missing - present.begin());
  }

  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    if (colours[id] != kUncoloured) continue;
    const Edge& e = g.edge(id);
    Vertex a = e.u;
    Vertex other = e.v;
    if (other == w.z || (is_y(other) && !is_y(a) && a != w.z)) std::swap(a, other);
    // Now a is z, or a lies in Y whenever exactly one endpoint does.
    if (a == w.z) {
      if (is_y(other)) {
        colours[id] = kBlue;
      } else if (in_x(other) && member[other] != kAll) {
        colours[id] = static_cast<Colour>(w.mc[other]);
      } else {
        throw infeasible(e, "edge at z outside the allowed classes");
      }
    } else if (is_y(a) && is_y(other)) {
      colours[id] = kRed;
    } else if (is_y(a) && member[other] == kAll) {
      colours[id] = kRed;
    } else if (is_y(a) && in_x(other)) {
      const Colour avoid = static_cast<Colour>(w.mc[other]);
      colours[id] = avoid == kRed ? kGreen : kRed;
    } else {
      throw infeasible(e, "edge outside every rule");
    }
  }
  return EdgeColouring(g, std::move(colours), 3);
}

std::optional<std::pair<EdgeColouring, TriWitness>> tri_colouring(const Graph& g) {
  auto w = find_tri_witness(g);
  if (!w) return std::nullopt;
  EdgeColouring c = tri_colouring_for(g, *w);
  return std::pair{std::move(c), std::move(*w)};
}

bool check_tri_obstruction(const EdgeColouring& c, const TriWitness& w) {
  const Graph& g = c.graph();
  const std::size_t n = g.num_vertices();
  const std::array<Vertex, 4> named{w.r, w.b, w.g, w.z};
  if (c.num_colours() < 3 ||
      std::any_of(named.begin(), named.end(), [&](Vertex v) { return v >= n; })) {
    return false;
  }
  const std::array<std::pair<Vertex, Colour>, 3> roots{
      std::pair{w.r, kRed}, std::pair{w.b, kBlue}, std::pair{w.g, kGreen}};
  for (const auto& [root, colour] : roots) {
    for (EdgeId e : g.incident_edges(root)) {
      if (c.colour(e) != colour) return false;
    }
  }
  for (Colour colour = 0; colour < c.num_colours(); ++colour) {
    const auto label = mono_component_labels(c, colour);
    for (const auto& [root, root_colour] : roots) {
      if (label[root] == label[w.z]) return false;
    }
  }
  return true;
}

std::optional<std::pair<EdgeColouring, std::pair<Vertex, Vertex>>>
star_extremal_colouring(const Graph& g) {
  const std::size_t n = g.num_vertices();
  for (Vertex r = 0; r < n; ++r) {
    if (g.degree(r) + 1 == n) continue;
    const auto nbrs = g.neighbours(r);
    Vertex b = 0;
    while (b == r || std::binary_search(nbrs.begin(), nbrs.end(), b)) ++b;
    std::vector<Colour> colours(g.num_edges(), kBlue);
    for (EdgeId e : g.incident_edges(r)) colours[e] = kRed;
    return std::pair{EdgeColouring(g, std::move(colours), 2), std::pair{r, b}};
  }
  return std::nullopt;
}

}  // namespace monotree
