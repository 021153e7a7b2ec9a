#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monotree/graph.hpp"

namespace monotree {

struct VerifierConfig {
  double eps = 0.1;
  std::optional<double> p;  // graph density when unset
  std::size_t samples = 1000;
  // Sample count of the two checks that scan a whole neighbourhood structure
  // per sample, (iii) and (iv).
  std::size_t structure_samples = 20;
  std::uint64_t seed = 0;
  double degeneracy_factor = 10.0;  // bound is factor * ln n
};

// Margins are relative slack: non-negative exactly when the property holds.
struct PropertyReport {
  std::string name;
  std::size_t trials = 0;  // samples drawn, skipped ones included
  std::size_t skips = 0;   // size constraints unsatisfiable for the sample
  std::size_t violations = 0;
  std::optional<double> worst_margin;

  void record(bool holds, double margin);
  void skip() { ++trials; ++skips; }
};

struct Evaluation {
  bool holds = true;
  double margin = 0.0;
};

// (i) d(v) = (1 ± eps) pn.
Evaluation evaluate_degree(const Graph& g, Vertex v, double p, double eps);
// (i) |N(u) ∩ N(w)| = (1 ± eps) p^2 n.
Evaluation evaluate_codegree(const Graph& g, Vertex u, Vertex w, double p, double eps);
// (ii) e(U, W) > p |U| |W| / 2, for disjoint U and W.
Evaluation evaluate_bipartite_density(const Graph& g, std::span<const Vertex> U,
                                      std::span<const Vertex> W, double p);
// (iii) at most 100/p vertices outside J have at most p^2 n / 200 neighbours
// in J.
Evaluation evaluate_joker_reach(const Graph& g, std::span<const Vertex> J, double p);
// (iv) G[A, B] has at least p^2 n / 100 vertices of degree at least p^2 n / 100.
Evaluation evaluate_mismatch_degrees(const Graph& g, std::span<const Vertex> A,
                                     std::span<const Vertex> B, double p);
// (vi) the induced subgraph is (factor * ln n)-degenerate.
Evaluation evaluate_degeneracy(const Graph& g, std::span<const Vertex> subset,
                               double factor);
// e(A, N(y) \ A) > (4/25) p^2 n |A|, for A ⊆ N(y).
Evaluation evaluate_neighbourhood_expansion(const Graph& g, Vertex y,
                                            std::span<const Vertex> A, double p);
// 2 e(U) < p |U|^2 + eps p n |U|.
Evaluation evaluate_edge_bound(const Graph& g, std::span<const Vertex> U, double p,
                               double eps);

PropertyReport check_i(const Graph& g, const VerifierConfig& cfg);
PropertyReport check_ii(const Graph& g, const VerifierConfig& cfg);
PropertyReport check_iii(const Graph& g, const VerifierConfig& cfg);
PropertyReport check_iv(const Graph& g, const VerifierConfig& cfg);

enum class VResult { kHolds, kViolated, kNotApplicable };

// (v) for one concrete H: if G[H] has minimum degree at least (1/2 + eps) pn
// it must be connected.
VResult check_v(const Graph& g, std::span<const Vertex> H, const VerifierConfig& cfg);

PropertyReport check_vi(const Graph& g, const VerifierConfig& cfg);
// The two auxiliary estimates, sampled `samples` times each.
PropertyReport check_internal(const Graph& g, const VerifierConfig& cfg);

// (i), (ii), (iii), (iv), (vi), internal, in that order.
std::vector<PropertyReport> run_all_checks(const Graph& g, const VerifierConfig& cfg);

}  // namespace monotree
