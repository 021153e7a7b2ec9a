#include "monotree/experiments.hpp"

#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>
#include <type_traits>

#include <fmt/format.h>

#include "monotree/adversary.hpp"
#include "monotree/graph.hpp"
#include "monotree/rng.hpp"

namespace monotree {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = s.find(',');
    out.push_back(trim(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

template <class T>
T parse_number(std::string_view key, std::string_view value) {
  const std::string text(value);
  std::size_t used = 0;
  try {
    T out;
    if constexpr (std::is_floating_point_v<T>) {
      out = static_cast<T>(std::stod(text, &used));
    } else {
      if (!text.empty() && text[0] == '-') throw std::invalid_argument("negative");
      out = static_cast<T>(std::stoull(text, &used));
    }
    if (used == text.size() && !text.empty()) return out;
  } catch (const std::exception&) {
  }
  throw ConfigError(fmt::format("config: bad value '{}' for {}", value, key));
}

std::string outcome_of(const SolveOutcome& out) {
  switch (out.status) {
    case Status::kSuccess: return "success";
    case Status::kNoPartition: return "no-partition";
    case Status::kProcedureFailed: break;
  }
  return std::string("procedure-failed:") +
         (out.diagnostics.stage ? to_string(*out.diagnostics.stage) : "unknown");
}

TrialRecord run_mode(const Graph& g, std::size_t n, double c, double p,
                     std::uint64_t seed, ColouringMode mode, const SolverParams& base) {
  const auto start = std::chrono::steady_clock::now();
  TrialRecord rec{n, c, p, seed, mode, {}, "none", 0.0};
  SolverParams params = base;
  params.seed = seed;
  params.p = params.p.value_or(p);
  Rng rng(stable_hash({seed, static_cast<std::uint64_t>(mode) + 1}));

  auto solve_into = [&](const EdgeColouring& colouring) {
    const SolveOutcome out = solve(colouring, params);
    rec.outcome = outcome_of(out);
    rec.branch = to_string(out.diagnostics.branch);
  };

  switch (mode) {
    case ColouringMode::kRandom:
      solve_into(EdgeColouring::random(g, rng));
      break;
    case ColouringMode::kDiameter:
      if (auto d = diameter_colouring(g)) {
        solve_into(d->first);
      } else {
        rec.outcome = "no-witness";
      }
      break;
    case ColouringMode::kStarExtremal:
      if (auto s = star_extremal_colouring(g)) {
        solve_into(s->first);
      } else {
        rec.outcome = "no-witness";
      }
      break;
    case ColouringMode::kTri:
      if (auto t = tri_colouring(g)) {
        rec.branch = "tri-obstruction";
        rec.outcome = check_tri_obstruction(t->first, t->second)
                          ? "no-partition"
                          : "procedure-failed:tri-certificate";
      } else {
        rec.outcome = "no-witness";
      }
      break;
  }
  rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
               .count();
  return rec;
}

}  // namespace

const char* to_string(ColouringMode mode) {
  switch (mode) {
    case ColouringMode::kRandom: return "random";
    case ColouringMode::kDiameter: return "diameter";
    case ColouringMode::kStarExtremal: return "star-extremal";
    case ColouringMode::kTri: return "tri";
  }
  return "unknown";
}

std::optional<ColouringMode> parse_mode(std::string_view name) {
  for (ColouringMode mode : {ColouringMode::kRandom, ColouringMode::kDiameter,
                             ColouringMode::kStarExtremal, ColouringMode::kTri}) {
    if (name == to_string(mode)) return mode;
  }
  return std::nullopt;
}

void validate(const SweepConfig& cfg) {
  if (cfg.n_values.empty()) throw ConfigError("config: no n values");
  if (cfg.c_values.empty()) throw ConfigError("config: no c values");
  if (cfg.modes.empty()) throw ConfigError("config: no colouring modes");
  if (cfg.trials == 0) throw ConfigError("config: trials must be at least 1");
  if (cfg.threads == 0) throw ConfigError("config: threads must be at least 1");
  for (std::size_t n : cfg.n_values) {
    if (n == 0) throw ConfigError("config: n must be positive");
  }
  for (double c : cfg.c_values) {
    if (!(c > 0.0) || !std::isfinite(c)) throw ConfigError("config: c must be positive");
  }
  if (cfg.solver.z_retries == 0) throw ConfigError("config: z_retries must be at least 1");
  if (!(cfg.solver.eps > 0.0 && cfg.solver.eps < 1.0)) {
    throw ConfigError("config: eps must lie in (0, 1)");
  }
}

SweepConfig parse_sweep_config(std::string_view text) {
  SweepConfig cfg;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text.remove_prefix(end == std::string_view::npos ? text.size() : end + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(fmt::format("config: line {}: expected key = value", line_no));
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key == "n") {
      cfg.n_values.clear();
      for (auto item : split_list(value)) cfg.n_values.push_back(parse_number<std::size_t>(key, item));
    } else if (key == "c") {
      cfg.c_values.clear();
      for (auto item : split_list(value)) cfg.c_values.push_back(parse_number<double>(key, item));
    } else if (key == "modes" || key == "mode") {
      cfg.modes.clear();
      for (auto item : split_list(value)) {
        const auto mode = parse_mode(item);
        if (!mode) throw ConfigError(fmt::format("config: unknown mode '{}'", item));
        cfg.modes.push_back(*mode);
      }
    } else if (key == "trials") {
      cfg.trials = parse_number<std::size_t>(key, value);
    } else if (key == "seed") {
      cfg.master_seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "threads") {
      cfg.threads = parse_number<std::size_t>(key, value);
    } else if (key == "output") {
      cfg.output = std::string(value);
    } else if (key == "eps") {
      cfg.solver.eps = parse_number<double>(key, value);
    } else if (key == "z_retries") {
      cfg.solver.z_retries = parse_number<std::size_t>(key, value);
    } else {
      throw ConfigError(fmt::format("config: line {}: unknown key '{}'", line_no, key));
    }
  }
  return cfg;
}

double threshold_p(std::size_t n, double c) {
  if (n < 2) return 0.0;
  const double nd = static_cast<double>(n);
  return std::min(1.0, c * std::sqrt(std::log(nd) / nd));
}

std::uint64_t trial_seed(std::uint64_t master, std::size_t n, double c, std::size_t trial) {
  return stable_hash({master, static_cast<std::uint64_t>(n), std::bit_cast<std::uint64_t>(c),
                      static_cast<std::uint64_t>(trial)});
}

TrialRecord run_trial(std::size_t n, double c, std::uint64_t seed, ColouringMode mode,
                      const SolverParams& solver) {
  const double p = threshold_p(n, c);
  const Graph g = sample_gnp({n, p, seed});
  return run_mode(g, n, c, p, seed, mode, solver);
}

std::vector<TrialRecord> run_sweep(const SweepConfig& cfg) {
  validate(cfg);
  struct Job {
    std::size_t n;
    double c;
    std::size_t trial;
  };
  std::vector<Job> jobs;
  for (std::size_t n : cfg.n_values) {
    for (double c : cfg.c_values) {
      for (std::size_t t = 0; t < cfg.trials; ++t) jobs.push_back({n, c, t});
    }
  }
  const std::size_t per_job = cfg.modes.size();
  std::vector<TrialRecord> records(jobs.size() * per_job);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    while (true) {
      const std::size_t j = next.fetch_add(1);
      if (j >= jobs.size()) return;
      try {
        const Job& job = jobs[j];
        const std::uint64_t seed = trial_seed(cfg.master_seed, job.n, job.c, job.trial);
        const double p = threshold_p(job.n, job.c);
        const Graph g = sample_gnp({job.n, p, seed});
        for (std::size_t m = 0; m < per_job; ++m) {
          records[j * per_job + m] = run_mode(g, job.n, job.c, p, seed, cfg.modes[m], cfg.solver);
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };

  const std::size_t threads = std::min(cfg.threads, std::max<std::size_t>(jobs.size(), 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  return records;
}

std::string csv_row(const TrialRecord& r, bool with_time) {
  return fmt::format("{},{},{},{},{},{},{},{}", r.n, r.c, r.p, r.seed, to_string(r.mode),
                     r.outcome, r.branch, with_time ? fmt::format("{:.3f}", r.ms) : "");
}

std::string format_csv(const std::vector<TrialRecord>& records, bool with_time) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : records) {
    out += csv_row(r, with_time);
    out += '\n';
  }
  return out;
}

double CellSummary::witness_fraction() const {
  return trials == 0 ? 0.0 : static_cast<double>(trials - no_witness) / static_cast<double>(trials);
}

std::optional<double> CellSummary::success_fraction() const {
  const std::size_t ran = trials - no_witness;
  if (ran == 0) return std::nullopt;
  return static_cast<double>(success) / static_cast<double>(ran);
}

std::vector<CellSummary> summarise(const std::vector<TrialRecord>& records) {
  std::vector<CellSummary> out;
  std::map<std::tuple<std::size_t, std::uint64_t, int>, std::size_t> index;
  for (const auto& r : records) {
    const auto key = std::tuple{r.n, std::bit_cast<std::uint64_t>(r.c), static_cast<int>(r.mode)};
    auto [it, inserted] = index.try_emplace(key, out.size());
    if (inserted) out.push_back({r.n, r.c, r.mode});
    CellSummary& cell = out[it->second];
    ++cell.trials;
    if (r.outcome == "success") {
      ++cell.success;
    } else if (r.outcome == "no-partition") {
      ++cell.no_partition;
    } else if (r.outcome == "no-witness") {
      ++cell.no_witness;
    } else {
      ++cell.failed;
    }
  }
  return out;
}

}  // namespace monotree
