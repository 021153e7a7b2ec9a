// Command-line front end: sampling, colouring, solving, oracle checks,
// adversarial colourings, property verification and threshold sweeps.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "monotree/adversary.hpp"
#include "monotree/colouring.hpp"
#include "monotree/experiments.hpp"
#include "monotree/formats.hpp"
#include "monotree/graph.hpp"
#include "monotree/oracle.hpp"
#include "monotree/solver.hpp"
#include "monotree/verifier.hpp"

namespace {

using namespace monotree;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNoPartition = 2;
constexpr int kExitFailed = 3;
constexpr int kExitNoWitness = 4;

const char* colour_name(Colour c) {
  switch (c) {
    case kRed: return "red";
    case kBlue: return "blue";
    case kGreen: return "green";
  }
  return "other";
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
  } else {
    write_file(path, text);
  }
}

std::string format_cover(const TreeCover& cover) {
  std::string out;
  for (std::size_t i = 0; i < cover.parts.size(); ++i) {
    const TreePart& part = cover.parts[i];
    out += fmt::format("part {} colour {} vertices {} edges {}\n", i, colour_name(part.colour),
                       part.vertices.size(), part.edges.size());
    for (const Edge& e : part.edges) out += fmt::format("{} {}\n", e.u, e.v);
  }
  return out;
}

nlohmann::json cover_json(const TreeCover& cover) {
  nlohmann::json parts = nlohmann::json::array();
  for (const TreePart& part : cover.parts) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : part.edges) edges.push_back({e.u, e.v});
    parts.push_back({{"colour", colour_name(part.colour)},
                     {"vertices", part.vertices},
                     {"edges", std::move(edges)}});
  }
  return parts;
}

nlohmann::json outcome_json(const SolveOutcome& out) {
  const Diagnostics& d = out.diagnostics;
  nlohmann::json j{{"status", to_string(out.status)}, {"branch", to_string(d.branch)}};
  j["stage"] = d.stage ? nlohmann::json(to_string(*d.stage)) : nlohmann::json();
  if (out.cover) j["parts"] = cover_json(*out.cover);
  j["diagnostics"] = {{"oracle_used", d.oracle_used},   {"exchanges", d.exchanges},
                      {"swapped", d.swapped},           {"jokers", d.jokers},
                      {"x", d.x_size},                  {"y", d.y_size},
                      {"y_degeneracy", d.y_degeneracy}, {"non_canonical", d.non_canonical},
                      {"z_attempts", d.z_attempts},     {"z1_prime", d.z1_prime},
                      {"pulled_forward", d.pulled_forward}};
  if (!d.detail.empty()) j["detail"] = d.detail;
  return j;
}

int exit_code(Status status) {
  switch (status) {
    case Status::kSuccess: return kExitOk;
    case Status::kNoPartition: return kExitNoPartition;
    case Status::kProcedureFailed: return kExitFailed;
  }
  return kExitError;
}

std::string margin_text(const std::optional<double>& m) {
  return m ? fmt::format("{:.6g}", *m) : "";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partitions of 2-coloured graphs into monochromatic trees"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  app.add_option("--seed", seed, "Random seed")->capture_default_str();
  app.add_option("--threads", threads, "Worker threads for sweeps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // sample
  auto* sample = app.add_subcommand("sample", "Sample G(n, p) as an edge list");
  std::size_t sample_n = 0;
  double sample_p = 0.0;
  std::string sample_out;
  sample->add_option("--n", sample_n, "Vertices")->required()->check(CLI::PositiveNumber);
  sample->add_option("--p", sample_p, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));
  sample->add_option("--out", sample_out, "Output file (default stdout)");

  // colour
  auto* colour = app.add_subcommand("colour", "Uniformly random edge colouring");
  std::string colour_graph;
  std::string colour_out;
  int colour_count = 2;
  colour->add_option("--graph", colour_graph, "Edge-list file")->required();
  colour->add_option("--colours", colour_count, "Number of colours")->check(CLI::Range(2, 255));
  colour->add_option("--out", colour_out, "Output file (default stdout)");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Partition into two monochromatic trees");
  std::string solve_graph;
  std::string solve_colouring;
  std::optional<double> solve_p;
  double solve_eps = 0.01;
  bool solve_json = false;
  bool no_fallback = false;
  solve_cmd->add_option("--graph", solve_graph, "Edge-list file")->required();
  solve_cmd->add_option("--colouring", solve_colouring, "Colouring file")->required();
  solve_cmd->add_option("--p", solve_p, "Nominal edge probability (default: density)");
  solve_cmd->add_option("--eps", solve_eps, "Concentration slack")->check(CLI::Range(0.0, 1.0));
  solve_cmd->add_flag("--json", solve_json, "JSON output");
  solve_cmd->add_flag("--no-fallback", no_fallback, "Do not fall back to the oracle");

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive search on small instances");
  std::string oracle_graph;
  std::string oracle_colouring;
  std::size_t oracle_k = 2;
  oracle_cmd->add_option("--graph", oracle_graph, "Edge-list file")->required();
  oracle_cmd->add_option("--colouring", oracle_colouring,
                         "Colouring file; without it every 2-colouring is tried");
  oracle_cmd->add_option("--k", oracle_k, "Number of trees")->check(CLI::PositiveNumber);

  // adversary
  auto* adversary = app.add_subcommand("adversary", "Colourings without a tree partition");
  std::string adv_graph;
  std::string adv_mode = "diameter";
  std::string adv_out;
  adversary->add_option("--graph", adv_graph, "Edge-list file")->required();
  adversary->add_option("--mode", adv_mode, "diameter, tri or star-extremal")
      ->check(CLI::IsMember({"diameter", "tri", "star-extremal"}));
  adversary->add_option("--out", adv_out, "Colouring output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Sampled pseudo-randomness checks");
  std::string verify_graph;
  VerifierConfig vcfg;
  std::optional<double> verify_p;
  verify->add_option("--graph", verify_graph, "Edge-list file")->required();
  verify->add_option("--p", verify_p, "Nominal edge probability (default: density)");
  verify->add_option("--eps", vcfg.eps, "Slack")->check(CLI::Range(0.0, 1.0));
  verify->add_option("--samples", vcfg.samples, "Samples per check")->check(CLI::PositiveNumber);
  verify->add_option("--structure-samples", vcfg.structure_samples,
                     "Samples for the two neighbourhood-structure checks")
      ->check(CLI::PositiveNumber);
  verify->add_option("--degeneracy-factor", vcfg.degeneracy_factor, "Degeneracy bound factor");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Monte Carlo sweep over (n, c)");
  std::string sweep_config;
  std::vector<std::size_t> sweep_n;
  std::vector<double> sweep_c;
  std::vector<std::string> sweep_modes;
  std::optional<std::size_t> sweep_trials;
  std::string sweep_output;
  bool sweep_no_time = false;
  sweep->add_option("--config", sweep_config, "key = value configuration file");
  sweep->add_option("--n", sweep_n, "Vertex counts")->delimiter(',');
  sweep->add_option("--c", sweep_c, "Multipliers of sqrt(ln n / n)")->delimiter(',');
  sweep->add_option("--modes", sweep_modes, "Colouring modes")->delimiter(',');
  sweep->add_option("--trials", sweep_trials, "Trials per cell");
  sweep->add_option("--output", sweep_output, "CSV output file (default stdout)");
  sweep->add_flag("--no-time", sweep_no_time, "Leave the ms column empty");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sample) {
      emit(sample_out, format_edge_list(sample_gnp({sample_n, sample_p, seed})));
      return kExitOk;
    }
    if (*colour) {
      const Graph g = load_graph(colour_graph);
      Rng rng(seed);
      emit(colour_out, format_colouring(EdgeColouring::random(g, rng, colour_count)));
      return kExitOk;
    }
    if (*solve_cmd) {
      const Graph g = load_graph(solve_graph);
      const EdgeColouring c = load_colouring(solve_colouring, g);
      SolverParams params;
      params.p = solve_p;
      params.eps = solve_eps;
      params.seed = seed;
      params.oracle_fallback = !no_fallback;
      const SolveOutcome out = solve(c, params);
      if (solve_json) {
        std::cout << outcome_json(out).dump(2) << '\n';
      } else {
        std::cout << "status " << to_string(out.status) << '\n'
                  << "branch " << to_string(out.diagnostics.branch) << '\n';
        if (out.diagnostics.stage) std::cout << "stage " << to_string(*out.diagnostics.stage) << '\n';
        if (out.cover) std::cout << format_cover(*out.cover);
      }
      return exit_code(out.status);
    }
    if (*oracle_cmd) {
      const Graph g = load_graph(oracle_graph);
      if (!oracle_colouring.empty()) {
        const EdgeColouring c = load_colouring(oracle_colouring, g);
        if (auto cover = oracle_pi_k(c, oracle_k)) {
          std::cout << "status success\n" << format_cover(*cover);
          return kExitOk;
        }
        std::cout << "status no-partition\n";
        return kExitNoPartition;
      }
      if (oracle_k != 2) throw std::invalid_argument("without --colouring only k = 2 is supported");
      const ArrowResult result = oracle_arrow_pi2(g);
      if (result.holds) {
        std::cout << "status holds\n";
        return kExitOk;
      }
      std::cout << "status counter-colouring " << result.counter_index << '\n'
                << format_colouring(*result.counter);
      return kExitNoPartition;
    }
    if (*adversary) {
      const Graph g = load_graph(adv_graph);
      if (adv_mode == "diameter") {
        const auto d = diameter_colouring(g);
        if (!d) {
          std::cerr << "no-witness\n";
          return kExitNoWitness;
        }
        emit(adv_out, format_colouring(d->first));
        std::cerr << "witness " << d->second.u << ' ' << d->second.v << '\n';
      } else if (adv_mode == "tri") {
        const auto t = tri_colouring(g);
        if (!t) {
          std::cerr << "no-witness\n";
          return kExitNoWitness;
        }
        emit(adv_out, format_colouring(t->first));
        std::cerr << "witness " << t->second.r << ' ' << t->second.b << ' ' << t->second.g
                  << ' ' << t->second.z << '\n';
      } else {
        const auto s = star_extremal_colouring(g);
        if (!s) {
          std::cerr << "no-witness\n";
          return kExitNoWitness;
        }
        emit(adv_out, format_colouring(s->first));
        std::cerr << "witness " << s->second.first << ' ' << s->second.second << '\n';
      }
      return kExitOk;
    }
    if (*verify) {
      const Graph g = load_graph(verify_graph);
      vcfg.p = verify_p;
      vcfg.seed = seed;
      std::cout << "name,trials,skips,violations,worst_margin\n";
      for (const PropertyReport& r : run_all_checks(g, vcfg)) {
        std::cout << fmt::format("{},{},{},{},{}\n", r.name, r.trials, r.skips, r.violations,
                                 margin_text(r.worst_margin));
      }
      return kExitOk;
    }
    if (*sweep) {
      SweepConfig cfg = sweep_config.empty() ? SweepConfig{} : parse_sweep_config(read_file(sweep_config));
      if (!sweep_n.empty()) cfg.n_values = sweep_n;
      if (!sweep_c.empty()) cfg.c_values = sweep_c;
      if (sweep_trials) cfg.trials = *sweep_trials;
      if (!sweep_modes.empty()) {
        cfg.modes.clear();
        for (const auto& name : sweep_modes) {
          const auto mode = parse_mode(name);
          if (!mode) throw ConfigError("unknown mode " + name);
          cfg.modes.push_back(*mode);
        }
      }
      if (!sweep_output.empty()) cfg.output = sweep_output;
      if (app.count("--seed") > 0 || sweep_config.empty()) cfg.master_seed = seed;
      if (app.count("--threads") > 0 || sweep_config.empty()) cfg.threads = threads;
      const auto records = run_sweep(cfg);
      emit(cfg.output, format_csv(records, !sweep_no_time));
      std::cerr << fmt::format("# reference c = {:.6f} (conjectured sharp constant)\n",
                               kConjecturedConstant);
      for (const CellSummary& cell : summarise(records)) {
        const auto success = cell.success_fraction();
        std::cerr << fmt::format("# n={} c={} mode={} trials={} witness={:.3f} success={}\n",
                                 cell.n, cell.c, to_string(cell.mode), cell.trials,
                                 cell.witness_fraction(),
                                 success ? fmt::format("{:.3f}", *success) : "n/a");
      }
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
