#include "monotree/extremal.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace monotree {
namespace {

bool any_on_side(std::span<const Vertex> vs, std::span<const std::uint8_t> side,
                 std::uint8_t want) {
  return std::any_of(vs.begin(), vs.end(), [&](Vertex v) { return side[v] == want; });
}

const Bridge* usable_bridge(const YRecord& rec, std::span<const std::uint8_t> side) {
  for (const Bridge& br : rec.bridges) {
    if (side[br.anchor] == kZ0 && side[br.relay] == kZ1) return &br;
  }
  return nullptr;
}

VertexSet colour_class(const ExtremalState& s, Colour colour) {
  VertexSet out;
  for (Vertex v = 0; v < s.final_colour.size(); ++v) {
    if (s.final_colour[v] == colour) out.push_back(v);
  }
  return out;
}

}  // namespace

bool needs_colour_swap(const EdgeColouring& c, Vertex r, Vertex b) {
  const Graph& g = c.graph();
  std::vector<std::uint8_t> in_nr(g.num_vertices(), 0);
  std::vector<std::uint8_t> in_nb(g.num_vertices(), 0);
  for (Vertex v : c.neighbours_in(r, kRed)) in_nr[v] = 1;
  for (Vertex v : c.neighbours_in(b, kBlue)) in_nb[v] = 1;
  std::size_t red = 0;
  std::size_t blue = 0;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (!in_nr[u] || in_nb[u]) continue;
    const auto nbrs = g.neighbours(u);
    const auto ids = g.incident_edges(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (!in_nb[nbrs[i]] || in_nr[nbrs[i]]) continue;
      (c.colour(ids[i]) == kRed ? red : blue) += 1;
    }
  }
  return blue > red;
}

ExtremalState begin_extremal(const EdgeColouring& c, Vertex r, Vertex b,
                             const SolverParams& params) {
  if (c.num_colours() != 2) throw std::invalid_argument("extremal: needs two colours");
  if (!is_extremal_witness(c, r, b)) {
    throw std::invalid_argument("extremal: (" + std::to_string(r) + ", " +
                                std::to_string(b) + ") is not an extremal witness");
  }
  const bool swap = needs_colour_swap(c, r, b);
  ExtremalState s(swap ? c.swapped() : c);
  s.swapped = swap;
  s.r = swap ? b : r;
  s.b = swap ? r : b;
  const Graph& g = c.graph();
  const std::size_t n = g.num_vertices();
  s.thresholds = Thresholds::compute(n, params.p.value_or(g.density()), params.eps);

  s.in_nr.assign(n, 0);
  s.in_nb.assign(n, 0);
  s.rho.assign(n, kUnset);
  for (Vertex v : s.colouring.neighbours_in(s.r, kRed)) s.in_nr[v] = 1;
  for (Vertex v : s.colouring.neighbours_in(s.b, kBlue)) s.in_nb[v] = 1;
  for (Vertex v = 0; v < n; ++v) {
    if (s.in_nb[v]) {
      s.rho[v] = kBlue;
    } else if (s.in_nr[v]) {
      s.rho[v] = kRed;
    }
  }
  s.is_joker.assign(n, 0);
  s.in_x.assign(n, 0);
  return s;
}

const VertexSet& compute_jokers(ExtremalState& s) {
  const Graph& g = s.colouring.graph();
  s.jokers.clear();
  s.joker_reqs.clear();
  std::fill(s.is_joker.begin(), s.is_joker.end(), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!s.in_nb[v]) continue;
    if (s.in_nr[v]) {
      s.is_joker[v] = 1;
      s.jokers.push_back(v);
      continue;
    }
    JokerRequirement req{v, {}};
    for (Vertex u : s.colouring.neighbours_in(v, kRed)) {
      if (s.in_nr[u] && !s.in_nb[u]) req.anchors.push_back(u);
    }
    if (req.anchors.size() >= s.thresholds.joker) {
      s.is_joker[v] = 1;
      s.jokers.push_back(v);
      s.joker_reqs.push_back(std::move(req));
    }
  }
  return s.jokers;
}

const VertexSet& compute_x(ExtremalState& s) {
  const Graph& g = s.colouring.graph();
  s.x_set.clear();
  s.x_reqs.clear();
  std::fill(s.in_x.begin(), s.in_x.end(), 0);
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    if (x == s.r || x == s.b || s.in_nr[x] || s.in_nb[x]) continue;
    std::array<std::vector<Vertex>, 2> by_colour;
    const auto nbrs = g.neighbours(x);
    const auto ids = g.incident_edges(x);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (s.is_joker[nbrs[i]]) by_colour[s.colouring.colour(ids[i])].push_back(nbrs[i]);
    }
    if (by_colour[kRed].size() + by_colour[kBlue].size() < s.thresholds.x) continue;
    const Colour pref = by_colour[kRed].size() >= s.thresholds.pref ? kRed : kBlue;
    s.in_x[x] = 1;
    s.x_set.push_back(x);
    s.rho[x] = static_cast<std::int8_t>(pref);
    s.x_reqs.push_back({x, std::move(by_colour[pref])});
  }
  return s.x_set;
}

std::optional<FailStage> assign_rho_y(ExtremalState& s) {
  const Graph& g = s.colouring.graph();
  const std::size_t n = g.num_vertices();
  VertexSet y_set;
  for (Vertex v = 0; v < n; ++v) {
    if (v != s.r && v != s.b && s.rho[v] == kUnset) y_set.push_back(v);
  }
  s.y_order.clear();
  s.y_records.clear();
  if (static_cast<double>(y_set.size()) > s.thresholds.y_max) return FailStage::kYSize;
  DegeneracyOrder order = degeneracy_order(g, y_set);
  s.y_order = std::move(order.order);
  s.y_degeneracy = order.degeneracy;
  if (s.y_degeneracy > s.thresholds.y_degeneracy) return FailStage::kYDegeneracy;

  // side_mark[v]: 1 for A = N_blue(y) ∩ rho^-1(red), 2 for B = N_red(y) ∩
  // rho^-1(blue), among earlier vertices.
  std::vector<std::uint8_t> side_mark(n, 0);
  std::vector<std::size_t> red_degree(n, 0);
  for (Vertex y : s.y_order) {
    YRecord rec;
    rec.y = y;
    std::array<std::vector<Vertex>, 2> same;  // joined in colour c, prefers c
    VertexSet a_side;
    VertexSet b_side;
    const auto nbrs = g.neighbours(y);
    const auto ids = g.incident_edges(y);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const Vertex w = nbrs[i];
      if (s.rho[w] == kUnset) continue;
      const Colour edge = s.colouring.colour(ids[i]);
      const Colour pref = static_cast<Colour>(s.rho[w]);
      if (edge == pref) {
        same[edge].push_back(w);
      } else if (pref == kRed) {
        a_side.push_back(w);
      } else {
        b_side.push_back(w);
      }
    }
    rec.blue_to_red = a_side.size();
    rec.red_to_blue = b_side.size();

    Colour chosen = kRed;
    if (same[kRed].size() >= s.thresholds.pref) {
      rec.canonical = true;
      rec.anchors = std::move(same[kRed]);
    } else if (same[kBlue].size() >= s.thresholds.pref) {
      rec.canonical = true;
      chosen = kBlue;
      rec.anchors = std::move(same[kBlue]);
    } else {
      for (Vertex a : a_side) side_mark[a] = 1;
      for (Vertex v : b_side) side_mark[v] = 2;
      // Red and blue edges of the mismatch graph, anchored in A.
      std::array<std::vector<Bridge>, 2> edges;
      for (Vertex a : a_side) {
        const auto an = g.neighbours(a);
        const auto aid = g.incident_edges(a);
        for (std::size_t i = 0; i < an.size(); ++i) {
          if (side_mark[an[i]] != 2) continue;
          edges[s.colouring.colour(aid[i])].push_back({a, an[i]});
        }
      }
      std::size_t heavy = 0;
      for (const Bridge& e : edges[kRed]) {
        heavy += ++red_degree[e.anchor] == s.thresholds.mismatch;
        heavy += ++red_degree[e.relay] == s.thresholds.mismatch;
      }
      for (const Bridge& e : edges[kRed]) red_degree[e.anchor] = red_degree[e.relay] = 0;
      for (Vertex a : a_side) side_mark[a] = 0;
      for (Vertex v : b_side) side_mark[v] = 0;

      if (heavy >= s.thresholds.mismatch) {
        rec.bridges = std::move(edges[kRed]);
      } else {
        chosen = kBlue;
        // Blue bridges anchor in B and relay through A.
        for (const Bridge& e : edges[kBlue]) rec.bridges.push_back({e.relay, e.anchor});
        std::sort(rec.bridges.begin(), rec.bridges.end(),
                  [](const Bridge& x, const Bridge& y2) {
                    return std::pair(x.anchor, x.relay) < std::pair(y2.anchor, y2.relay);
                  });
      }
      if (rec.bridges.empty()) {
        s.rho[y] = static_cast<std::int8_t>(chosen);
        s.y_records.push_back(std::move(rec));
        return FailStage::kMismatch;
      }
    }
    s.rho[y] = static_cast<std::int8_t>(chosen);
    s.y_records.push_back(std::move(rec));
  }
  return std::nullopt;
}

bool partition_satisfies(const ExtremalState& s, std::span<const std::uint8_t> side) {
  for (const JokerRequirement& req : s.joker_reqs) {
    if (!any_on_side(req.anchors, side, kZ0)) return false;
  }
  for (const XRequirement& req : s.x_reqs) {
    if (!any_on_side(req.jokers, side, kZ0) || !any_on_side(req.jokers, side, kZ1)) {
      return false;
    }
  }
  for (const YRecord& rec : s.y_records) {
    if (rec.canonical ? !any_on_side(rec.anchors, side, kZ0)
                      : usable_bridge(rec, side) == nullptr) {
      return false;
    }
  }
  return true;
}

bool sample_z_partition(ExtremalState& s, std::size_t retries, Rng& rng) {
  const std::size_t n = s.colouring.graph().num_vertices();
  s.side.assign(n, kZ0);
  s.side[s.r] = s.side[s.b] = kRoot;
  s.z_attempts = 0;
  while (s.z_attempts < retries) {
    ++s.z_attempts;
    for (Vertex v = 0; v < n; ++v) {
      if (v != s.r && v != s.b) s.side[v] = coin_flip(rng) ? kZ1 : kZ0;
    }
    if (partition_satisfies(s, s.side)) return true;
  }
  return false;
}

std::optional<FailStage> finalise(ExtremalState& s) {
  const std::size_t n = s.colouring.graph().num_vertices();
  auto& f = s.final_colour;
  f.assign(n, kUnset);
  s.z1_prime.clear();
  s.pulled_forward.clear();
  f[s.r] = kRed;
  f[s.b] = kBlue;
  for (Vertex v = 0; v < n; ++v) {
    if (s.side[v] == kZ0) {
      f[v] = s.rho[v];
    } else if (s.side[v] == kZ1 && s.is_joker[v]) {
      f[v] = static_cast<std::int8_t>(opposite(static_cast<Colour>(s.rho[v])));
    }
  }

  auto attach_relay = [&](const YRecord& rec, VertexSet& log) {
    const Bridge* br = usable_bridge(rec, s.side);
    if (br == nullptr) return;
    if (f[br->relay] == kUnset) {
      f[br->relay] = static_cast<std::int8_t>(opposite(static_cast<Colour>(s.rho[br->relay])));
      log.push_back(br->relay);
    }
  };

  for (const YRecord& rec : s.y_records) {
    if (s.side[rec.y] == kZ0 && !rec.canonical) attach_relay(rec, s.z1_prime);
  }
  for (auto it = s.y_records.rbegin(); it != s.y_records.rend(); ++it) {
    if (f[it->y] != kUnset) continue;
    f[it->y] = s.rho[it->y];
    if (!it->canonical) attach_relay(*it, s.pulled_forward);
  }
  for (Vertex x : s.x_set) {
    if (f[x] == kUnset) f[x] = s.rho[x];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (f[v] == kUnset && (s.in_nr[v] || s.in_nb[v])) {
      f[v] = s.in_nr[v] ? kRed : kBlue;
    }
  }
  std::sort(s.z1_prime.begin(), s.z1_prime.end());
  std::sort(s.pulled_forward.begin(), s.pulled_forward.end());

  if (std::find(f.begin(), f.end(), kUnset) != f.end()) return FailStage::kFinalise;
  for (Colour colour : {kRed, kBlue}) {
    if (!mono_spanning_tree(s.colouring, colour, colour_class(s, colour))) {
      return FailStage::kFinalise;
    }
  }
  return std::nullopt;
}

std::optional<TreeCover> extract_cover(const ExtremalState& s) {
  TreeCover cover;
  for (Colour colour : {kRed, kBlue}) {
    TreePart part;
    part.vertices = colour_class(s, colour);
    auto tree = mono_spanning_tree(s.colouring, colour, part.vertices);
    if (!tree) return std::nullopt;
    part.edges = std::move(*tree);
    part.colour = s.swapped ? opposite(colour) : colour;
    cover.parts.push_back(std::move(part));
  }
  return cover;
}

SolveOutcome solve_extremal(const EdgeColouring& c, Vertex r, Vertex b,
                            const SolverParams& params) {
  ExtremalState s = begin_extremal(c, r, b, params);
  SolveOutcome out;
  Diagnostics& d = out.diagnostics;
  d.branch = Branch::kExtremal;
  d.swapped = s.swapped;
  auto fail = [&](FailStage stage) {
    out.status = Status::kProcedureFailed;
    d.stage = stage;
    return out;
  };

  d.jokers = compute_jokers(s).size();
  if (s.jokers.empty()) return fail(FailStage::kJoker);
  d.x_size = compute_x(s).size();
  const auto y_failure = assign_rho_y(s);
  d.y_size = s.y_order.size();
  d.y_degeneracy = s.y_degeneracy;
  for (const YRecord& rec : s.y_records) {
    if (rec.canonical) continue;
    ++d.non_canonical;
    const std::size_t smaller = std::min(rec.blue_to_red, rec.red_to_blue);
    d.min_mismatch_side = std::min(d.min_mismatch_side.value_or(smaller), smaller);
    if (static_cast<double>(smaller) < s.thresholds.mismatch_side) {
      d.mismatch_sides_large = false;
    }
  }
  if (y_failure) return fail(*y_failure);

  Rng rng(stable_hash({params.seed, r, b}));
  const bool sampled = sample_z_partition(s, params.z_retries, rng);
  d.z_attempts = s.z_attempts;
  if (!sampled) return fail(FailStage::kZPartition);
  if (const auto stage = finalise(s)) return fail(*stage);
  d.z1_prime = s.z1_prime.size();
  d.pulled_forward = s.pulled_forward.size();

  auto cover = extract_cover(s);
  if (!cover) return fail(FailStage::kFinalise);
  if (!verify_partition(c, *cover)) return fail(FailStage::kCertificate);
  out.status = Status::kSuccess;
  out.cover = std::move(cover);
  return out;
}

}  // namespace monotree
