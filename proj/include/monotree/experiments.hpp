#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "monotree/solver.hpp"

namespace monotree {

enum class ColouringMode { kRandom, kDiameter, kStarExtremal, kTri };

const char* to_string(ColouringMode mode);
std::optional<ColouringMode> parse_mode(std::string_view name);

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SweepConfig {
  std::vector<std::size_t> n_values;
  std::vector<double> c_values;  // multipliers of sqrt(ln n / n)
  std::size_t trials = 1;
  std::vector<ColouringMode> modes{ColouringMode::kRandom};
  std::uint64_t master_seed = 0;
  std::string output;  // empty for stdout
  std::size_t threads = 1;
  SolverParams solver;
};

// Throws ConfigError on an empty grid, trials == 0, c <= 0, n == 0 or
// threads == 0.
void validate(const SweepConfig& cfg);

// Flat "key = value" lines; '#' starts a comment. Keys: n, c, trials, modes,
// seed, output, threads, eps, z_retries. Lists are comma separated.
SweepConfig parse_sweep_config(std::string_view text);

// min(1, c sqrt(ln n / n)); zero for n < 2.
double threshold_p(std::size_t n, double c);

// Reference value of c at which the sharp threshold is conjectured to sit. It
// is only printed for comparison and plays no part in the sweep.
inline constexpr double kConjecturedConstant = std::numbers::sqrt2;

struct TrialRecord {
  std::size_t n = 0;
  double c = 0.0;
  double p = 0.0;
  std::uint64_t seed = 0;
  ColouringMode mode = ColouringMode::kRandom;
  // success, no-partition, procedure-failed:<stage> or no-witness.
  std::string outcome;
  std::string branch;
  double ms = 0.0;
};

// stable_hash(master, n, bits(c), trial).
std::uint64_t trial_seed(std::uint64_t master, std::size_t n, double c, std::size_t trial);

// One trial: sample G(n, threshold_p(n, c)) from `seed`, colour it in `mode`
// and solve. Random colourings draw from stable_hash(seed, mode + 1). The tri
// mode certifies its obstruction instead of solving: a passing certificate is
// reported as no-partition.
TrialRecord run_trial(std::size_t n, double c, std::uint64_t seed, ColouringMode mode,
                      const SolverParams& solver);

// Rows in (n, c, trial, mode) order, whatever the thread count. Each
// (n, c, trial) graph is shared by all modes.
std::vector<TrialRecord> run_sweep(const SweepConfig& cfg);

inline constexpr std::string_view kCsvHeader = "n,c,p,seed,mode,outcome,branch,ms";

std::string csv_row(const TrialRecord& record, bool with_time = true);
// Header plus rows. Without timing the ms column is left empty.
std::string format_csv(const std::vector<TrialRecord>& records, bool with_time = true);

struct CellSummary {
  std::size_t n = 0;
  double c = 0.0;
  ColouringMode mode = ColouringMode::kRandom;
  std::size_t trials = 0;
  std::size_t success = 0;
  std::size_t no_partition = 0;
  std::size_t failed = 0;
  std::size_t no_witness = 0;

  // Witness frequency over all trials; success over those where a colouring
  // was produced.
  double witness_fraction() const;
  std::optional<double> success_fraction() const;
};

// One summary per (n, c, mode), in order of first appearance.
std::vector<CellSummary> summarise(const std::vector<TrialRecord>& records);

}  // namespace monotree
