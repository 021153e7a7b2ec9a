#include "monotree/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "monotree/rng.hpp"

namespace monotree {
namespace {

enum CheckId : std::uint64_t { kCheckI = 1, kCheckII, kCheckIII, kCheckIV, kCheckVI, kCheckInternal };

double nominal_p(const Graph& g, const VerifierConfig& cfg) {
  return cfg.p.value_or(g.density());
}

Rng check_rng(const VerifierConfig& cfg, CheckId id) {
  return Rng(stable_hash({cfg.seed, static_cast<std::uint64_t>(id)}));
}

// |x - mu| <= eps mu, with slack relative to mu.
Evaluation concentration(double x, double mu, double eps) {
  if (mu <= 0.0) return {x == 0.0, -x};
  const double margin = eps - std::abs(x - mu) / mu;
  return {std::abs(x - mu) <= eps * mu, margin};
}

// Edges between the marked set and `from`, counting each edge once per
// endpoint in `from`.
std::size_t edges_into(const Graph& g, std::span<const Vertex> from,
                       const std::vector<std::uint8_t>& marked) {
  std::size_t count = 0;
  for (Vertex v : from) {
    for (Vertex w : g.neighbours(v)) count += marked[w];
  }
  return count;
}

std::vector<std::uint8_t> marker(std::size_t n, std::span<const Vertex> vs) {
  std::vector<std::uint8_t> m(n, 0);
  for (Vertex v : vs) m[v] = 1;
  return m;
}

std::size_t ceil_size(double x) {
  return x <= 0.0 ? 0 : static_cast<std::size_t>(std::ceil(x));
}

std::vector<Vertex> all_vertices(const Graph& g) {
  std::vector<Vertex> out(g.num_vertices());
  std::iota(out.begin(), out.end(), Vertex{0});
  return out;
}

// Vertices of `pool` not marked.
std::vector<Vertex> unmarked(std::span<const Vertex> pool,
                             const std::vector<std::uint8_t>& marked) {
  std::vector<Vertex> out;
  for (Vertex v : pool) {
    if (!marked[v]) out.push_back(v);
  }
  return out;
}

}  // namespace

void PropertyReport::record(bool holds, double margin) {
  ++trials;
  if (!holds) ++violations;
  worst_margin = std::min(worst_margin.value_or(margin), margin);
}

Evaluation evaluate_degree(const Graph& g, Vertex v, double p, double eps) {
  return concentration(static_cast<double>(g.degree(v)),
                       p * static_cast<double>(g.num_vertices()), eps);
}

Evaluation evaluate_codegree(const Graph& g, Vertex u, Vertex w, double p, double eps) {
  const auto a = g.neighbours(u);
  const auto b = g.neighbours(w);
  std::size_t common = 0;
  for (auto i = a.begin(), j = b.begin(); i != a.end() && j != b.end();) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return concentration(static_cast<double>(common),
                       p * p * static_cast<double>(g.num_vertices()), eps);
}

Evaluation evaluate_bipartite_density(const Graph& g, std::span<const Vertex> U,
                                      std::span<const Vertex> W, double p) {
  const double e =
      static_cast<double>(edges_into(g, W, marker(g.num_vertices(), U)));
  const double full = p * static_cast<double>(U.size()) * static_cast<double>(W.size());
  if (full <= 0.0) return {false, -0.5};
  return {e > full / 2.0, e / full - 0.5};
}

Evaluation evaluate_joker_reach(const Graph& g, std::span<const Vertex> J, double p) {
  const std::size_t n = g.num_vertices();
  const auto in_j = marker(n, J);
  std::vector<std::size_t> hits(n, 0);
  for (Vertex j : J) {
    for (Vertex x : g.neighbours(j)) ++hits[x];
  }
  const double need = p * p * static_cast<double>(n) / 200.0;
  std::size_t weak = 0;
  for (Vertex x = 0; x < n; ++x) {
    if (!in_j[x] && static_cast<double>(hits[x]) <= need) ++weak;
  }
  const double limit = 100.0 / p;
  return {static_cast<double>(weak) <= limit, (limit - static_cast<double>(weak)) / limit};
}

Evaluation evaluate_mismatch_degrees(const Graph& g, std::span<const Vertex> A,
                                     std::span<const Vertex> B, double p) {
  const std::size_t n = g.num_vertices();
  const double t = p * p * static_cast<double>(n) / 100.0;
  const auto in_a = marker(n, A);
  const auto in_b = marker(n, B);
  std::size_t heavy = 0;
  for (Vertex a : A) {
    std::size_t d = 0;
    for (Vertex w : g.neighbours(a)) d += in_b[w];
    heavy += static_cast<double>(d) >= t;
  }
  for (Vertex b : B) {
    std::size_t d = 0;
    for (Vertex w : g.neighbours(b)) d += in_a[w];
    heavy += static_cast<double>(d) >= t;
  }
  if (t <= 0.0) return {true, 0.0};
  return {static_cast<double>(heavy) >= t, (static_cast<double>(heavy) - t) / t};
}

Evaluation evaluate_degeneracy(const Graph& g, std::span<const Vertex> subset,
                               double factor) {
  const double bound = factor * std::log(static_cast<double>(g.num_vertices()));
  const double d = static_cast<double>(degeneracy_order(g, subset).degeneracy);
  if (bound <= 0.0) return {d == 0.0, -d};
  return {d <= bound, (bound - d) / bound};
}

Evaluation evaluate_neighbourhood_expansion(const Graph& g, Vertex y,
                                            std::span<const Vertex> A, double p) {
  const std::size_t n = g.num_vertices();
  auto rest = marker(n, g.neighbours(y));
  for (Vertex a : A) rest[a] = 0;
  const double e = static_cast<double>(edges_into(g, A, rest));
  const double scale = p * p * static_cast<double>(n) * static_cast<double>(A.size());
  if (scale <= 0.0) return {false, -4.0 / 25.0};
  return {e > 4.0 / 25.0 * scale, e / scale - 4.0 / 25.0};
}

Evaluation evaluate_edge_bound(const Graph& g, std::span<const Vertex> U, double p,
                               double eps) {
  const double twice = static_cast<double>(edges_into(g, U, marker(g.num_vertices(), U)));
  const double u = static_cast<double>(U.size());
  const double n = static_cast<double>(g.num_vertices());
  const double bound = p * u * u + eps * p * n * u;
  const double scale = p * n * u;
  return {twice < bound, scale > 0.0 ? (bound - twice) / scale : -twice};
}

PropertyReport check_i(const Graph& g, const VerifierConfig& cfg) {
  PropertyReport report;
  report.name = "i";
  const double p = nominal_p(g, cfg);
  const std::size_t n = g.num_vertices();
  for (Vertex v = 0; v < n; ++v) {
    const Evaluation e = evaluate_degree(g, v, p, cfg.eps);
    report.record(e.holds, e.margin);
  }
  Rng rng = check_rng(cfg, kCheckI);
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    if (n < 2) {
      report.skip();
      continue;
    }
    const Vertex u = static_cast<Vertex>(uniform_below(rng, n));
    Vertex w = static_cast<Vertex>(uniform_below(rng, n - 1));
    if (w >= u) ++w;
    const Evaluation e = evaluate_codegree(g, u, w, p, cfg.eps);
    report.record(e.holds, e.margin);
  }
  return report;
}

PropertyReport check_ii(const Graph& g, const VerifierConfig& cfg) {
  PropertyReport report;
  report.name = "ii";
  const double p = nominal_p(g, cfg);
  const std::size_t n = g.num_vertices();
  Rng rng = check_rng(cfg, kCheckII);
  const std::vector<Vertex> everyone = all_vertices(g);
  const std::size_t min_w = std::max<std::size_t>(1, ceil_size(p * n / 100.0));
  const std::size_t min_u = p > 0.0 ? std::max<std::size_t>(1, ceil_size(100.0 / p)) : n + 1;
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    const Vertex v = static_cast<Vertex>(uniform_below(rng, n));
    const auto nbrs = g.neighbours(v);
    if (nbrs.size() < min_w || n - min_w < min_u) {
      report.skip();
      continue;
    }
    const std::size_t w_size = uniform_between(rng, min_w, nbrs.size());
    const auto W = sample_without_replacement(nbrs, w_size, rng);
    const auto pool = unmarked(everyone, marker(n, W));
    if (pool.size() < min_u) {
      report.skip();
      continue;
    }
    const std::size_t u_size = uniform_between(rng, min_u, pool.size());
    const auto U = sample_without_replacement(std::span<const Vertex>(pool), u_size, rng);
    const Evaluation e = evaluate_bipartite_density(g, U, W, p);
    report.record(e.holds, e.margin);
  }
  return report;
}

PropertyReport check_iii(const Graph& g, const VerifierConfig& cfg) {
  PropertyReport report;
  report.name = "iii";
  const double p = nominal_p(g, cfg);
  const std::size_t n = g.num_vertices();
  Rng rng = check_rng(cfg, kCheckIII);
  const std::size_t min_j = std::max<std::size_t>(1, ceil_size(p * n / 100.0));
  for (std::size_t s = 0; s < cfg.structure_samples; ++s) {
    const Vertex v = static_cast<Vertex>(uniform_below(rng, n));
    const auto nbrs = g.neighbours(v);
    if (p <= 0.0 || nbrs.size() < min_j) {
      report.skip();
      continue;
    }
    const auto J = sample_without_replacement(nbrs, uniform_between(rng, min_j, nbrs.size()), rng);
    const Evaluation e = evaluate_joker_reach(g, J, p);
    report.record(e.holds, e.margin);
  }
  return report;
}

PropertyReport check_iv(const Graph& g, const VerifierConfig& cfg) {
  PropertyReport report;
  report.name = "iv";
  const double p = nominal_p(g, cfg);
  const std::size_t n = g.num_vertices();
  const double p2n = p * p * static_cast<double>(n);
  Rng rng = check_rng(cfg, kCheckIV);
  const std::size_t min_side = std::max<std::size_t>(1, ceil_size(p2n / 2.0));
  const auto max_removed = static_cast<std::size_t>(std::floor(p2n / 100.0));
  for (std::size_t s = 0; s < cfg.structure_samples; ++s) {
    const Vertex y = static_cast<Vertex>(uniform_below(rng, n));
    const auto nbrs = g.neighbours(y);
    const std::size_t removed = std::min<std::size_t>(
        uniform_between(rng, 0, max_removed), nbrs.size());
    const std::size_t u_size = nbrs.size() - removed;
    if (p <= 0.0 || u_size < 2 * min_side) {
      report.skip();
      continue;
    }
    auto U = sample_without_replacement(nbrs, u_size, rng);
    const std::size_t a_size = uniform_between(rng, min_side, u_size - min_side);
    const std::span<const Vertex> all_u(U);
    const Evaluation e =
        evaluate_mismatch_degrees(g, all_u.first(a_size), all_u.subspan(a_size), p);
    report.record(e.holds, e.margin);
  }
  return report;
}

VResult check_v(const Graph& g, std::span<const Vertex> H, const VerifierConfig& cfg) {
  const double p = nominal_p(g, cfg);
  const double need = (0.5 + cfg.eps) * p * static_cast<double>(g.num_vertices());
  const auto in_h = marker(g.num_vertices(), H);
  for (Vertex v : H) {
    std::size_t d = 0;
    for (Vertex w : g.neighbours(v)) d += in_h[w];
    if (static_cast<double>(d) < need) return VResult::kNotApplicable;
  }
  return spanning_tree(g, H) ? VResult::kHolds : VResult::kViolated;
}

PropertyReport check_vi(const Graph& g, const VerifierConfig& cfg) {
  PropertyReport report;
  report.name = "vi";
  const double p = nominal_p(g, cfg);
  const std::size_t n = g.num_vertices();
  Rng rng = check_rng(cfg, kCheckVI);
  const std::vector<Vertex> everyone = all_vertices(g);
  const std::size_t max_size =
      p > 0.0 ? std::min<std::size_t>(n, static_cast<std::size_t>(std::floor(100.0 / p))) : n;
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    if (max_size == 0) {
      report.skip();
      continue;
    }
    const auto subset = sample_without_replacement(
        std::span<const Vertex>(everyone), uniform_between(rng, 1, max_size), rng);
    const Evaluation e = evaluate_degeneracy(g, subset, cfg.degeneracy_factor);
    report.record(e.holds, e.margin);
  }
  return report;
}

PropertyReport check_internal(const Graph& g, const VerifierConfig& cfg) {
  PropertyReport report;
  report.name = "internal";
  const double p = nominal_p(g, cfg);
  const std::size_t n = g.num_vertices();
  Rng rng = check_rng(cfg, kCheckInternal);
  const std::size_t min_a =
      std::max<std::size_t>(1, ceil_size(p * p * static_cast<double>(n) / 2.0));
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    const Vertex y = static_cast<Vertex>(uniform_below(rng, n));
    const auto nbrs = g.neighbours(y);
    if (nbrs.size() / 2 < min_a) {
      report.skip();
      continue;
    }
    const auto A = sample_without_replacement(nbrs, uniform_between(rng, min_a, nbrs.size() / 2), rng);
    const Evaluation e = evaluate_neighbourhood_expansion(g, y, A, p);
    report.record(e.holds, e.margin);
  }
  const std::vector<Vertex> everyone = all_vertices(g);
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    const auto U = sample_without_replacement(std::span<const Vertex>(everyone),
                                              uniform_between(rng, 1, n), rng);
    const Evaluation e = evaluate_edge_bound(g, U, p, cfg.eps);
    report.record(e.holds, e.margin);
  }
  return report;
}

std::vector<PropertyReport> run_all_checks(const Graph& g, const VerifierConfig& cfg) {
  return {check_i(g, cfg),  check_ii(g, cfg), check_iii(g, cfg),
          check_iv(g, cfg), check_vi(g, cfg), check_internal(g, cfg)};
}

}  // namespace monotree
