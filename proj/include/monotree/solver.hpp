#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "monotree/colouring.hpp"

namespace monotree {

struct SolverParams {
  double eps = 0.01;
  // Nominal edge probability for the thresholds; the graph density when unset.
  std::optional<double> p;
  std::size_t z_retries = 100;
  std::uint64_t seed = 0;
  bool oracle_fallback = true;
  std::size_t oracle_cutoff = 16;
};

// Integer thresholds of the extremal procedure at a given (n, p). Counts are
// compared with >=.
struct Thresholds {
  std::size_t joker = 1;         // max(1, ceil(p^2 n / 25))
  std::size_t x = 1;             // max(1, ceil(p^2 n / 200))
  std::size_t pref = 1;          // max(1, ceil(p^2 n / 400))
  std::size_t mismatch = 1;      // max(1, ceil(p^2 n / 200))
  std::size_t y_degeneracy = 0;  // ceil(10 ln n)
  double y_max = 0.0;            // 100 / p, infinite for p = 0
  double mismatch_side = 0.0;    // (1 - eps) p^2 n / 2, diagnostic only

  static Thresholds compute(std::size_t n, double p, double eps);
};

enum class FailStage {
  kPrecondition,
  kJoker,
  kYSize,
  kYDegeneracy,
  kMismatch,
  kZPartition,
  kFinalise,
  kGrowMonoTree,
  kSpanningTree,
  kCaseAnalysis,
  kCertificate,
  kSpanningShortcut,
};

const char* to_string(FailStage stage);

enum class Branch {
  kNone,
  kSpanningShortcut,  // R or B empty
  kSameColour,        // C' and C'' share a colour
  kCaseI,
  kCaseII,
  kExtremal,
  kOracle,
};

const char* to_string(Branch branch);

enum class Status { kSuccess, kNoPartition, kProcedureFailed };

const char* to_string(Status status);

struct Diagnostics {
  Branch branch = Branch::kNone;
  std::optional<FailStage> stage;  // set whenever a procedure failed
  std::string detail;
  bool oracle_used = false;
  // Grow-tree exchange steps in the non-extremal procedure.
  std::size_t exchanges = 0;
  // Extremal procedure.
  bool swapped = false;
  std::size_t jokers = 0;
  std::size_t x_size = 0;
  std::size_t y_size = 0;
  std::size_t y_degeneracy = 0;
  std::size_t non_canonical = 0;
  std::size_t z_attempts = 0;
  std::size_t z1_prime = 0;
  std::size_t pulled_forward = 0;
  // Smallest mismatch side over non-canonical Y vertices, and whether every
  // side reached Thresholds::mismatch_side.
  std::optional<std::size_t> min_mismatch_side;
  bool mismatch_sides_large = true;
};

struct SolveOutcome {
  Status status = Status::kProcedureFailed;
  std::optional<TreeCover> cover;  // present exactly on success
  Diagnostics diagnostics;

  bool success() const { return status == Status::kSuccess; }
};

struct MonoTree {
  Colour colour = kRed;
  VertexSet vertices;  // the whole monochromatic component
  std::size_t exchanges = 0;
};

// A monochromatic component containing U, built by repeated exchange of the
// component for the opposite-colour component of an uncovered vertex. Returns
// nullopt when an exchange fails to increase the coverage, which happens
// exactly when some pair of U is not monochromatically connected. An empty U
// gives an empty red tree.
std::optional<MonoTree> grow_mono_tree(const EdgeColouring& c,
                                       std::span<const Vertex> U);

SolveOutcome solve_nonextremal(const EdgeColouring& c, const SolverParams& params);

// Throws std::invalid_argument unless (r, b) is an extremal witness.
SolveOutcome solve_extremal(const EdgeColouring& c, Vertex r, Vertex b,
                            const SolverParams& params);

// Classifies and dispatches, then falls back to the exhaustive oracle on small
// graphs when a procedure fails. Requires two colours.
SolveOutcome solve(const EdgeColouring& c, const SolverParams& params);

}  // namespace monotree
