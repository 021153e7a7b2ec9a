#include "monotree/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

namespace monotree {
namespace {

using Mask = std::uint32_t;
constexpr std::size_t kMaskBits = 31;
constexpr std::uint8_t kKnown = 0x80;

// Per-colour adjacency bitmasks with a lazily filled table, indexed by subset,
// of the colours in which that subset is connected.
class SubsetConnectivity {
 public:
  explicit SubsetConnectivity(const EdgeColouring& c)
      : colours_(c.num_colours()),
        adjacency_(colours_ * c.graph().num_vertices(), 0),
        memo_(std::size_t{1} << c.graph().num_vertices(), 0) {
    const Graph& g = c.graph();
    const std::size_t n = g.num_vertices();
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const Edge& edge = g.edge(e);
      adjacency_[c.colour(e) * n + edge.u] |= Mask{1} << edge.v;
      adjacency_[c.colour(e) * n + edge.v] |= Mask{1} << edge.u;
    }
    n_ = n;
  }

  // Bit i set when the subset is connected in colour i; zero for the empty set.
  std::uint8_t connected_colours(Mask subset) {
    std::uint8_t& slot = memo_[subset];
    if (slot & kKnown) return slot & ~kKnown;
    std::uint8_t found = 0;
    if (subset != 0) {
      for (std::size_t colour = 0; colour < colours_; ++colour) {
        if (connected(subset, colour)) found |= std::uint8_t(1u << colour);
      }
    }
    slot = found | kKnown;
    return found;
  }

 private:
  bool connected(Mask subset, std::size_t colour) const {
    const Mask* adj = adjacency_.data() + colour * n_;
    Mask reached = subset & (~subset + 1);
    Mask frontier = reached;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) {
        next |= adj[std::countr_zero(f)];
      }
      frontier = next & subset & ~reached;
      reached |= frontier;
    }
    return reached == subset;
  }

  std::size_t colours_;
  std::size_t n_ = 0;
  std::vector<Mask> adjacency_;
  std::vector<std::uint8_t> memo_;
};

void check_colours(const EdgeColouring& c) {
  if (c.num_colours() > 7) throw BudgetExceeded("oracle: at most 7 colours supported");
}

}  // namespace

std::optional<TreeCover> oracle_pi_k(const EdgeColouring& c, std::size_t k,
                                     const OracleBudget& budget) {
  if (k == 0) throw std::invalid_argument("oracle: k must be positive");
  check_colours(c);
  const std::size_t n = c.graph().num_vertices();
  const std::size_t limit = k <= 2 ? budget.max_n : budget.max_n_multi;
  if (n > limit || n > kMaskBits) {
    throw BudgetExceeded("oracle: n = " + std::to_string(n) + " exceeds the budget of " +
                         std::to_string(std::min(limit, kMaskBits)));
  }

  SubsetConnectivity conn(c);
  std::vector<std::uint32_t> digits(n, 0);
  std::vector<Mask> parts(k, 0);
  // Odometer over assignments, last vertex as the least significant digit.
  while (true) {
    std::fill(parts.begin(), parts.end(), 0);
    for (std::size_t v = 0; v < n; ++v) parts[digits[v]] |= Mask{1} << v;
    bool ok = true;
    for (Mask part : parts) {
      if (part != 0 && conn.connected_colours(part) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      TreeCover cover;
      cover.bound = k;
      for (Mask part : parts) {
        if (part == 0) continue;
        TreePart tree;
        tree.colour = static_cast<Colour>(std::countr_zero(conn.connected_colours(part)));
        for (Mask m = part; m != 0; m &= m - 1) {
          tree.vertices.push_back(static_cast<Vertex>(std::countr_zero(m)));
        }
        tree.edges = *mono_spanning_tree(c, tree.colour, tree.vertices);
        cover.parts.push_back(std::move(tree));
      }
      return cover;
    }
    std::size_t pos = n;
    while (pos > 0 && digits[pos - 1] + 1 == k) digits[--pos] = 0;
    if (pos == 0) return std::nullopt;
    ++digits[pos - 1];
  }
}

ArrowResult oracle_arrow_pi2(const Graph& g, const OracleBudget& budget) {
  const std::size_t m = g.num_edges();
  if (m > budget.max_edges || m >= 64) {
    throw BudgetExceeded("oracle: m = " + std::to_string(m) + " exceeds the budget of " +
                         std::to_string(budget.max_edges));
  }
  if (g.num_vertices() > budget.max_n || g.num_vertices() > kMaskBits) {
    throw BudgetExceeded("oracle: n exceeds the partition budget");
  }
  ArrowResult result;
  std::vector<Colour> colours(m);
  for (std::uint64_t counter = 0; counter >> m == 0; ++counter) {
    for (std::size_t e = 0; e < m; ++e) colours[e] = static_cast<Colour>((counter >> e) & 1);
    EdgeColouring c(g, colours);
    if (!oracle_pi_k(c, 2, budget)) {
      result.holds = false;
      result.counter = std::move(c);
      result.counter_index = counter;
      return result;
    }
  }
  return result;
}

}  // namespace monotree
