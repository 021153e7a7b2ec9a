#include "monotree/solver.hpp"

#include <cmath>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "monotree/adversary.hpp"
#include "monotree/rng.hpp"
#include "support.hpp"

namespace monotree {
namespace {

using ::testing::ElementsAre;

void expect_certified(const EdgeColouring& c, const SolveOutcome& out) {
  ASSERT_TRUE(out.success());
  ASSERT_TRUE(out.cover.has_value());
  EXPECT_TRUE(verify_partition(c, *out.cover));
  EXPECT_LE(out.cover->non_empty_parts(), 2u);
  for (const TreePart& part : out.cover->parts) {
    EXPECT_TRUE(testing::is_spanning_tree(c, part));
  }
}

TEST(ThresholdsTest, Values) {
  const Thresholds t = Thresholds::compute(3000, 0.21, 0.01);
  EXPECT_EQ(t.joker, static_cast<std::size_t>(std::ceil(0.21 * 0.21 * 3000 / 25)));
  EXPECT_EQ(t.x, static_cast<std::size_t>(std::ceil(0.21 * 0.21 * 3000 / 200)));
  EXPECT_EQ(t.pref, 1u);
  EXPECT_EQ(t.mismatch, t.x);
  EXPECT_EQ(t.y_degeneracy, static_cast<std::size_t>(std::ceil(10 * std::log(3000.0))));
  EXPECT_DOUBLE_EQ(t.y_max, 100 / 0.21);
  const Thresholds tiny = Thresholds::compute(5, 0.5, 0.01);
  EXPECT_EQ(tiny.joker, 1u);
  EXPECT_EQ(tiny.x, 1u);
  EXPECT_EQ(tiny.pref, 1u);
}

TEST(GrowMonoTreeTest, InsideOneComponent) {
  const Graph g = testing::path_graph(4);
  const EdgeColouring c(g, {kRed, kRed, kBlue});
  const VertexSet U{0, 2};
  const auto tree = grow_mono_tree(c, U);
  ASSERT_TRUE(tree.has_value());
  EXPECT_EQ(tree->colour, kRed);
  EXPECT_THAT(tree->vertices, ElementsAre(0, 1, 2));
  EXPECT_EQ(tree->exchanges, 0u);
}

TEST(GrowMonoTreeTest, PreconditionViolated) {
  const Graph g = testing::path_graph(3);
  const EdgeColouring c(g, {kRed, kBlue});
  const VertexSet U{0, 2};
  EXPECT_FALSE(grow_mono_tree(c, U).has_value());
}

TEST(GrowMonoTreeTest, PicksTheCoveringColour) {
  // Red component {0,1,2}, blue component {0,2,3}.
  const Graph g(4, {{0, 1}, {1, 2}, {0, 3}, {2, 3}});
  const EdgeColouring c(g, {kRed, kBlue, kRed, kBlue});  // canonical edge order
  const VertexSet U{1, 3};
  EXPECT_FALSE(grow_mono_tree(c, U).has_value());  // 1 and 3 share no component
  const VertexSet W{0, 2, 3};
  const auto tree = grow_mono_tree(c, W);
  ASSERT_TRUE(tree.has_value());
  EXPECT_EQ(tree->colour, kBlue);
  EXPECT_THAT(tree->vertices, ElementsAre(0, 2, 3));
}

TEST(GrowMonoTreeTest, CompleteGraphEveryColouring) {
  const Graph k5 = Graph::complete(5);
  const VertexSet all{0, 1, 2, 3, 4};
  for (std::uint64_t bits = 0; bits < 1024; ++bits) {
    const EdgeColouring c = testing::colouring_from_bits(k5, bits);
    const auto tree = grow_mono_tree(c, all);
    ASSERT_TRUE(tree.has_value()) << bits;
    EXPECT_EQ(tree->vertices.size(), 5u);
    EXPECT_LE(tree->exchanges, all.size());
    EXPECT_TRUE(testing::connected_in(testing::colour_matrix(c), tree->colour, all));
  }
}

TEST(GrowMonoTreeTest, ResultIsAComponentContainingU) {
  Rng rng(31);
  int grown = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph g = sample_gnp({.n = 9, .p = 0.5, .seed = seed});
    const EdgeColouring c = EdgeColouring::random(g, rng);
    VertexSet U;
    for (Vertex v = 0; v < 9; ++v) {
      if (coin_flip(rng)) U.push_back(v);
    }
    const auto m = testing::colour_matrix(c);
    bool pairwise = true;
    for (Vertex a : U) {
      for (Vertex b : U) pairwise = pairwise && (a == b || testing::mono_path(m, a, b));
    }
    const auto tree = grow_mono_tree(c, U);
    ASSERT_EQ(tree.has_value(), pairwise) << seed;
    if (!tree) continue;
    ++grown;
    EXPECT_LE(tree->exchanges, U.size());
    EXPECT_TRUE(std::includes(tree->vertices.begin(), tree->vertices.end(), U.begin(),
                              U.end()));
    const auto comps = mono_components(c, tree->colour);
    if (!U.empty()) {
      EXPECT_NE(std::find(comps.begin(), comps.end(), tree->vertices), comps.end());
    }
  }
  EXPECT_GT(grown, 0);
}

TEST(SolveTest, SingleEdge) {
  const Graph k2 = Graph::complete(2);
  const EdgeColouring c = EdgeColouring::uniform(k2, kRed);
  const SolveOutcome out = solve(c, {});
  expect_certified(c, out);
  EXPECT_EQ(out.cover->non_empty_parts(), 1u);
}

TEST(SolveNonExtremalTest, CompleteAllRed) {
  const Graph k4 = Graph::complete(4);
  const EdgeColouring c = EdgeColouring::uniform(k4, kRed);
  const SolveOutcome out = solve_nonextremal(c, {});
  expect_certified(c, out);
  EXPECT_EQ(out.cover->non_empty_parts(), 1u);
  for (const TreePart& part : out.cover->parts) {
    if (!part.vertices.empty()) EXPECT_EQ(part.colour, kRed);
  }
}

TEST(SolveNonExtremalTest, EveryColouringOfK5) {
  const Graph k5 = Graph::complete(5);
  for (std::uint64_t bits = 0; bits < 1024; ++bits) {
    const EdgeColouring c = testing::colouring_from_bits(k5, bits);
    ASSERT_FALSE(classify(c).extremal());
    const SolveOutcome out = solve_nonextremal(c, {});
    expect_certified(c, out);
    EXPECT_TRUE(testing::brute_force_pi_k(c, 2));
  }
}

TEST(SolveNonExtremalTest, LargeRandomColouring) {
  const Graph g = sample_gnp({.n = 2000, .p = 0.25, .seed = 11});
  Rng rng(12);
  const EdgeColouring c = EdgeColouring::random(g, rng);
  ASSERT_FALSE(classify(c).extremal());
  expect_certified(c, solve_nonextremal(c, {}));
}

TEST(SolveTest, ObstructionFallsBackToNoPartition) {
  const Graph g = testing::obstruction_graph();
  const EdgeColouring c = testing::obstruction_colouring(g);
  const SolveOutcome out = solve(c, {});
  EXPECT_EQ(out.status, Status::kNoPartition);
  EXPECT_FALSE(out.cover.has_value());
  EXPECT_TRUE(out.diagnostics.oracle_used);
  EXPECT_TRUE(out.diagnostics.stage.has_value());

  SolverParams no_fallback;
  no_fallback.oracle_fallback = false;
  const SolveOutcome raw = solve(c, no_fallback);
  EXPECT_EQ(raw.status, Status::kProcedureFailed);
  EXPECT_EQ(raw.diagnostics.stage, out.diagnostics.stage);
}

TEST(SolveTest, AgreesWithBruteForce) {
  Rng rng(3);
  SolverParams no_fallback;
  no_fallback.oracle_fallback = false;
  for (std::uint64_t i = 0; i < 150; ++i) {
    const std::size_t n = 4 + i % 6;
    const Graph g = sample_gnp({.n = n, .p = 0.4, .seed = 1000 + i});
    const EdgeColouring c = EdgeColouring::random(g, rng);
    const bool yes = testing::brute_force_pi_k(c, 2);
    const SolveOutcome raw = solve(c, no_fallback);
    if (raw.success()) {
      EXPECT_TRUE(yes);
      expect_certified(c, raw);
    }
    const SolveOutcome full = solve(c, {});
    EXPECT_EQ(full.success(), yes) << i;
    EXPECT_NE(full.status, Status::kProcedureFailed);
    if (full.success()) expect_certified(c, full);
  }
}

TEST(SolveTest, SwapSymmetryOfStatus) {
  Rng rng(9);
  for (std::uint64_t i = 0; i < 120; ++i) {
    const std::size_t n = 3 + i % 8;
    const Graph g = sample_gnp({.n = n, .p = 0.5, .seed = 500 + i});
    const EdgeColouring c = EdgeColouring::random(g, rng);
    EXPECT_EQ(solve(c, {}).status, solve(c.swapped(), {}).status) << i;
  }
}

TEST(SolveTest, StarExtremalLargeInstance) {
  const Graph g = sample_gnp({.n = 3000, .p = 0.21, .seed = 5});
  const auto star = star_extremal_colouring(g);
  ASSERT_TRUE(star.has_value());
  const EdgeColouring& c = star->first;
  ASSERT_TRUE(classify(c).extremal());
  const SolveOutcome out = solve(c, {});
  expect_certified(c, out);
  EXPECT_EQ(out.diagnostics.branch, Branch::kExtremal);
}

TEST(SolveTest, FallbackRespectsCutoff) {
  const Graph g = testing::obstruction_graph();
  const EdgeColouring c = testing::obstruction_colouring(g);
  SolverParams params;
  params.oracle_cutoff = 4;
  const SolveOutcome out = solve(c, params);
  EXPECT_EQ(out.status, Status::kProcedureFailed);
  EXPECT_FALSE(out.diagnostics.oracle_used);
}

TEST(NamesTest, Strings) {
  EXPECT_STREQ(to_string(Status::kNoPartition), "no-partition");
  EXPECT_STREQ(to_string(FailStage::kZPartition), "z-partition");
  EXPECT_STREQ(to_string(Branch::kCaseII), "case-II");
}

}  // namespace
}  // namespace monotree
