#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "monotree/colouring.hpp"

namespace monotree {

struct OracleBudget {
  std::size_t max_n = 16;       // partition search with k = 2
  std::size_t max_n_multi = 10; // partition search with k >= 3
  std::size_t max_edges = 20;   // colouring enumeration
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The lexicographically first assignment of vertices to parts 0..k-1 (vertex
// 0 as the most significant digit) in which every non-empty part is connected
// in some single colour, as an explicit cover. Parts may be empty and may share
// a colour. nullopt when no such assignment exists.
std::optional<TreeCover> oracle_pi_k(const EdgeColouring& c, std::size_t k,
                                     const OracleBudget& budget = {});

struct ArrowResult {
  bool holds = true;
  // First failing 2-colouring by binary counter over the edge order (edge 0
  // is the least significant bit), and its counter value.
  std::optional<EdgeColouring> counter;
  std::uint64_t counter_index = 0;
};

// Decides whether every 2-colouring of g admits a partition into two
// monochromatic trees.
ArrowResult oracle_arrow_pi2(const Graph& g, const OracleBudget& budget = {});

}  // namespace monotree
