#pragma once

// Individual stages of the extremal procedure. solve_extremal runs them in
// order; they are exposed for testing and diagnostics.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "monotree/colouring.hpp"
#include "monotree/rng.hpp"
#include "monotree/solver.hpp"

namespace monotree {

inline constexpr std::int8_t kUnset = -1;

// An edge {anchor, relay} of colour rho(y) with anchor in N_other(y) preferring
// rho(y), and relay in N_rho(y)(y) preferring the other colour.
struct Bridge {
  Vertex anchor = 0;
  Vertex relay = 0;
};

struct YRecord {
  Vertex y = 0;
  bool canonical = false;
  // Canonical: earlier vertices preferring rho(y), joined to y in rho(y).
  std::vector<Vertex> anchors;
  // Non-canonical: the rho(y)-coloured mismatch edges.
  std::vector<Bridge> bridges;
  // |N_blue(y) ∩ rho^-1(red)| and |N_red(y) ∩ rho^-1(blue)| over earlier
  // vertices.
  std::size_t blue_to_red = 0;
  std::size_t red_to_blue = 0;
};

struct JokerRequirement {
  Vertex v = 0;
  std::vector<Vertex> anchors;  // N_red(v) ∩ (N_red(r) \ N_blue(b))
};

struct XRequirement {
  Vertex x = 0;
  std::vector<Vertex> jokers;  // N_rho(x)(x) ∩ J
};

inline constexpr std::uint8_t kZ0 = 0;
inline constexpr std::uint8_t kZ1 = 1;
inline constexpr std::uint8_t kRoot = 2;

// Working state. All colours refer to `colouring`, which is the input with red
// and blue exchanged when `swapped` is set; r is then the input's blue root.
struct ExtremalState {
  EdgeColouring colouring;
  Vertex r = 0;
  Vertex b = 0;
  bool swapped = false;
  Thresholds thresholds;

  std::vector<std::uint8_t> in_nr;  // N_red(r)
  std::vector<std::uint8_t> in_nb;  // N_blue(b)
  std::vector<std::int8_t> rho;

  VertexSet jokers;
  std::vector<std::uint8_t> is_joker;
  std::vector<JokerRequirement> joker_reqs;  // jokers outside N_red(r) ∩ N_blue(b)

  VertexSet x_set;
  std::vector<std::uint8_t> in_x;
  std::vector<XRequirement> x_reqs;

  std::vector<Vertex> y_order;
  std::size_t y_degeneracy = 0;
  std::vector<YRecord> y_records;  // parallel to y_order

  std::vector<std::uint8_t> side;  // kZ0, kZ1 or kRoot
  std::size_t z_attempts = 0;

  std::vector<std::int8_t> final_colour;
  VertexSet z1_prime;
  VertexSet pulled_forward;

  explicit ExtremalState(EdgeColouring c) : colouring(std::move(c)) {}
};

// Whether the edges between N_red(r)\N_blue(b) and N_blue(b)\N_red(r) are
// mostly blue, in which case the procedure runs on the swapped colouring.
bool needs_colour_swap(const EdgeColouring& c, Vertex r, Vertex b);

// Orients the colouring, fixes the thresholds and assigns rho on
// N_red(r) ∪ N_blue(b). Throws std::invalid_argument on a bad witness.
ExtremalState begin_extremal(const EdgeColouring& c, Vertex r, Vertex b,
                             const SolverParams& params);

const VertexSet& compute_jokers(ExtremalState& s);
const VertexSet& compute_x(ExtremalState& s);

// Orders Y and assigns rho on it. Fails with kYSize, kYDegeneracy or
// kMismatch.
std::optional<FailStage> assign_rho_y(ExtremalState& s);

// Whether the bipartition `side` is usable: each joker requirement has an
// anchor in Z0, each X vertex has preferred-colour jokers on both sides, each
// canonical Y vertex has an anchor in Z0 and each non-canonical one a bridge
// from Z0 to Z1.
bool partition_satisfies(const ExtremalState& s, std::span<const std::uint8_t> side);

// Rejection sampling of Z0/Z1 with fair coins; false once the retries run out.
bool sample_z_partition(ExtremalState& s, std::size_t retries, Rng& rng);

// Both finalisation rounds; fails with kFinalise if either colour class of f is
// disconnected in its colour.
std::optional<FailStage> finalise(ExtremalState& s);

// The two trees of f, in the input's colours.
std::optional<TreeCover> extract_cover(const ExtremalState& s);

}  // namespace monotree
