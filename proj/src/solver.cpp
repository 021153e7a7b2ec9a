#include "monotree/solver.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "monotree/oracle.hpp"

namespace monotree {
namespace {

std::size_t ceil_at_least_one(double value) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(value)));
}

TreePart make_part(const EdgeColouring& c, Colour colour, VertexSet vertices,
                   bool& ok) {
  TreePart part;
  part.colour = colour;
  auto tree = mono_spanning_tree(c, colour, vertices);
  ok = tree.has_value();
  if (ok) part.edges = std::move(*tree);
  part.vertices = std::move(vertices);
  return part;
}

SolveOutcome failed(SolveOutcome out, FailStage stage, std::string detail = {}) {
  out.status = Status::kProcedureFailed;
  out.cover.reset();
  out.diagnostics.stage = stage;
  out.diagnostics.detail = std::move(detail);
  return out;
}

SolveOutcome certified(const EdgeColouring& c, SolveOutcome out, TreeCover cover) {
  if (!verify_partition(c, cover)) {
    return failed(std::move(out), FailStage::kCertificate, "cover rejected by checker");
  }
  out.status = Status::kSuccess;
  out.cover = std::move(cover);
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool subset_of(const VertexSet& a, const std::vector<std::uint8_t>& member) {
  return std::all_of(a.begin(), a.end(), [&](Vertex v) { return member[v] != 0; });
}

}  // namespace

Thresholds Thresholds::compute(std::size_t n, double p, double eps) {
  const double p2n = p * p * static_cast<double>(n);
  Thresholds t;
  t.joker = ceil_at_least_one(p2n / 25.0);
  t.x = ceil_at_least_one(p2n / 200.0);
  t.pref = ceil_at_least_one(p2n / 400.0);
  t.mismatch = ceil_at_least_one(p2n / 200.0);
  t.y_degeneracy =
      n < 2 ? 0 : static_cast<std::size_t>(std::ceil(10.0 * std::log(static_cast<double>(n))));
  t.y_max = p > 0.0 ? 100.0 / p : std::numeric_limits<double>::infinity();
  t.mismatch_side = (1.0 - eps) * p2n / 2.0;
  return t;
}

const char* to_string(FailStage stage) {
  switch (stage) {
    case FailStage::kPrecondition: return "precondition";
    case FailStage::kJoker: return "joker";
    case FailStage::kYSize: return "y-size";
    case FailStage::kYDegeneracy: return "y-degeneracy";
    case FailStage::kMismatch: return "mismatch";
    case FailStage::kZPartition: return "z-partition";
    case FailStage::kFinalise: return "finalise";
    case FailStage::kGrowMonoTree: return "grow-mono-tree";
    case FailStage::kSpanningTree: return "spanning-tree";
    case FailStage::kCaseAnalysis: return "case-analysis";
    case FailStage::kCertificate: return "certificate";
    case FailStage::kSpanningShortcut: return "spanning-shortcut";
  }
  return "unknown";
}

const char* to_string(Branch branch) {
  switch (branch) {
    case Branch::kNone: return "none";
    case Branch::kSpanningShortcut: return "spanning-shortcut";
    case Branch::kSameColour: return "same-colour";
    case Branch::kCaseI: return "case-I";
    case Branch::kCaseII: return "case-II";
    case Branch::kExtremal: return "extremal";
    case Branch::kOracle: return "oracle";
  }
  return "unknown";
}

const char* to_string(Status status) {
  switch (status) {
    case Status::kSuccess: return "success";
    case Status::kNoPartition: return "no-partition";
    case Status::kProcedureFailed: return "procedure-failed";
  }
  return "unknown";
}

std::optional<MonoTree> grow_mono_tree(const EdgeColouring& c,
                                       std::span<const Vertex> U) {
  if (U.empty()) return MonoTree{};
  const std::size_t n = c.graph().num_vertices();
  const std::array<std::vector<std::uint32_t>, 2> labels{
      mono_component_labels(c, kRed), mono_component_labels(c, kBlue)};
  std::vector<std::uint8_t> in_u(n, 0);
  for (Vertex u : U) in_u[u] = 1;

  // Starting component: most U-vertices, then smaller colour, then smaller
  // label (labels follow smallest members).
  Colour colour = kRed;
  std::uint32_t label = 0;
  std::size_t best = 0;
  for (Colour col : {kRed, kBlue}) {
    std::vector<std::size_t> count;
    for (Vertex v = 0; v < n; ++v) {
      if (!in_u[v]) continue;
      const std::uint32_t l = labels[col][v];
      if (l >= count.size()) count.resize(l + 1, 0);
      ++count[l];
    }
    for (std::uint32_t l = 0; l < count.size(); ++l) {
      if (count[l] > best) {
        best = count[l];
        colour = col;
        label = l;
      }
    }
  }

  auto coverage = [&](Colour col, std::uint32_t l) {
    std::size_t k = 0;
    for (Vertex u : U) k += labels[col][u] == l;
    return k;
  };

  std::size_t exchanges = 0;
  while (true) {
    const auto missing = std::find_if(U.begin(), U.end(), [&](Vertex u) {
      return labels[colour][u] != label;
    });
    if (missing == U.end()) break;
    const Colour next_colour = opposite(colour);
    const std::uint32_t next_label = labels[next_colour][*missing];
    const std::size_t next = coverage(next_colour, next_label);
    if (next <= best) return std::nullopt;
    colour = next_colour;
    label = next_label;
    best = next;
    ++exchanges;
  }

  MonoTree out;
  out.colour = colour;
  out.exchanges = exchanges;
  for (Vertex v = 0; v < n; ++v) {
    if (labels[colour][v] == label) out.vertices.push_back(v);
  }
  return out;
}

SolveOutcome solve_nonextremal(const EdgeColouring& c, const SolverParams&) {
  SolveOutcome out;
  const std::size_t n = c.graph().num_vertices();
  VertexSet all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  const VertexClasses classes = vertex_classes(c);
  const VertexSet reds = classes.red_members();
  const VertexSet blues = classes.blue_members();

  if (reds.empty() || blues.empty()) {
    out.diagnostics.branch = Branch::kSpanningShortcut;
    const Colour colour = reds.empty() ? kBlue : kRed;
    bool ok = false;
    TreeCover cover;
    cover.parts.push_back(make_part(c, colour, all, ok));
    if (!ok) {
      return failed(std::move(out), FailStage::kSpanningShortcut,
                    "no monochromatic spanning tree");
    }
    return certified(c, std::move(out), std::move(cover));
  }

  // Largest monochromatic component; red first, then smallest member.
  VertexSet largest;
  for (Colour colour : {kRed, kBlue}) {
    for (VertexSet& comp : mono_components(c, colour)) {
      if (comp.size() > largest.size()) largest = std::move(comp);
    }
  }

  const VertexSet u1 = set_union(set_intersection(largest, blues),
                                 set_difference(reds, largest));
  const VertexSet u2 = set_union(set_intersection(largest, reds),
                                 set_difference(blues, largest));
  const auto c1 = grow_mono_tree(c, u1);
  const auto c2 = grow_mono_tree(c, u2);
  if (!c1 || !c2) {
    return failed(std::move(out), FailStage::kGrowMonoTree,
                  "pairwise connectivity precondition violated");
  }
  out.diagnostics.exchanges = c1->exchanges + c2->exchanges;

  if (c1->colour == c2->colour || c1->vertices.empty() || c2->vertices.empty()) {
    // Components of one colour are equal or disjoint, and together they
    // contain u1 ∪ u2 = V.
    out.diagnostics.branch = Branch::kSameColour;
    TreeCover cover;
    bool ok = true;
    if (c1->vertices == c2->vertices || c2->vertices.empty()) {
      cover.parts.push_back(make_part(c, c1->colour, c1->vertices, ok));
    } else if (c1->vertices.empty()) {
      cover.parts.push_back(make_part(c, c2->colour, c2->vertices, ok));
    } else {
      bool ok2 = true;
      cover.parts.push_back(make_part(c, c1->colour, c1->vertices, ok));
      cover.parts.push_back(make_part(c, c2->colour, c2->vertices, ok2));
      ok = ok && ok2;
    }
    if (!ok) return failed(std::move(out), FailStage::kSpanningTree);
    return certified(c, std::move(out), std::move(cover));
  }

  const VertexSet& c_red = c1->colour == kRed ? c1->vertices : c2->vertices;
  const VertexSet& c_blue = c1->colour == kRed ? c2->vertices : c1->vertices;
  const VertexSet o_red = set_difference(c_red, c_blue);
  const VertexSet o_blue = set_difference(c_blue, c_red);

  TreeCover cover;
  bool ok = true;
  if (o_red.empty() || o_blue.empty()) {
    out.diagnostics.branch = Branch::kCaseI;
    const Colour colour = o_red.empty() ? kBlue : kRed;
    cover.parts.push_back(make_part(c, colour, all, ok));
  } else {
    const VertexSet o = set_union(o_red, o_blue);
    std::vector<std::uint8_t> red_only(n, 0);
    std::vector<std::uint8_t> blue_only(n, 0);
    for (Vertex v = 0; v < n; ++v) {
      red_only[v] = classes.red(v) && !classes.blue(v);
      blue_only[v] = classes.blue(v) && !classes.red(v);
    }
    bool ok2 = true;
    if (subset_of(o, red_only)) {
      out.diagnostics.branch = Branch::kCaseII;
      cover.parts.push_back(make_part(c, kRed, o_blue, ok));
      cover.parts.push_back(make_part(c, kRed, c_red, ok2));
    } else if (subset_of(o, blue_only)) {
      out.diagnostics.branch = Branch::kCaseII;
      cover.parts.push_back(make_part(c, kBlue, o_red, ok));
      cover.parts.push_back(make_part(c, kBlue, c_blue, ok2));
    } else {
      return failed(std::move(out), FailStage::kCaseAnalysis,
                    "symmetric difference meets both classes");
    }
    ok = ok && ok2;
  }
  if (!ok) return failed(std::move(out), FailStage::kSpanningTree);
  return certified(c, std::move(out), std::move(cover));
}

SolveOutcome solve(const EdgeColouring& c, const SolverParams& params) {
  if (c.num_colours() != 2) throw std::invalid_argument("solve: needs two colours");
  const ColouringClass cls = classify(c);
  SolveOutcome out = cls.extremal()
                         ? solve_extremal(c, cls.witness->first, cls.witness->second, params)
                         : solve_nonextremal(c, params);
  if (out.status != Status::kProcedureFailed || !params.oracle_fallback ||
      c.graph().num_vertices() > params.oracle_cutoff) {
    return out;
  }
  OracleBudget budget;
  budget.max_n = std::max(budget.max_n, params.oracle_cutoff);
  SolveOutcome fallback;
  fallback.diagnostics = std::move(out.diagnostics);
  fallback.diagnostics.oracle_used = true;
  if (auto cover = oracle_pi_k(c, 2, budget)) {
    fallback.diagnostics.branch = Branch::kOracle;
    return certified(c, std::move(fallback), std::move(*cover));
  }
  fallback.status = Status::kNoPartition;
  return fallback;
}

}  // namespace monotree
