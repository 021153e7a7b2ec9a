#include "monotree/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <unordered_set>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "monotree/rng.hpp"
#include "support.hpp"

namespace monotree {
namespace {

using ::testing::ElementsAre;
using ::testing::IsEmpty;

TEST(GraphTest, CanonicalisesEdges) {
  Graph g(4, {{3, 1}, {0, 2}, {1, 0}});
  EXPECT_EQ(g.num_edges(), 3u);
  EXPECT_THAT(std::vector<Edge>(g.edges().begin(), g.edges().end()),
              ElementsAre(Edge{0, 1}, Edge{0, 2}, Edge{1, 3}));
  EXPECT_THAT(std::vector<Vertex>(g.neighbours(1).begin(), g.neighbours(1).end()),
              ElementsAre(0, 3));
  EXPECT_EQ(g.edge_id(3, 1), 2u);
  EXPECT_FALSE(g.has_edge(2, 3));
}

TEST(GraphTest, RejectsBadEdges) {
  EXPECT_THROW(Graph(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
}

TEST(GraphTest, IncidentEdgesMatchNeighbours) {
  const Graph g = sample_gnp({.n = 60, .p = 0.2, .seed = 4});
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto nbrs = g.neighbours(v);
    const auto ids = g.incident_edges(v);
    ASSERT_TRUE(std::is_sorted(nbrs.begin(), nbrs.end()));
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const Edge& e = g.edge(ids[i]);
      EXPECT_EQ(std::min(v, nbrs[i]), e.u);
      EXPECT_EQ(std::max(v, nbrs[i]), e.v);
    }
    degree_sum += g.degree(v);
  }
  EXPECT_EQ(degree_sum, 2 * g.num_edges());
}

TEST(GraphTest, CompleteGraph) {
  const Graph g = Graph::complete(6);
  EXPECT_EQ(g.num_edges(), 15u);
  EXPECT_DOUBLE_EQ(g.density(), 1.0);
  EXPECT_DOUBLE_EQ(Graph(1, {}).density(), 0.0);
}

TEST(GnpTest, Extremes) {
  EXPECT_EQ(sample_gnp({.n = 50, .p = 0.0, .seed = 1}).num_edges(), 0u);
  EXPECT_EQ(sample_gnp({.n = 50, .p = 1.0, .seed = 1}).num_edges(), 1225u);
  EXPECT_EQ(sample_gnp({.n = 1, .p = 0.5, .seed = 1}).num_vertices(), 1u);
}

TEST(GnpTest, RejectsBadParameters) {
  EXPECT_THROW(sample_gnp({.n = 0, .p = 0.5}), std::invalid_argument);
  EXPECT_THROW(sample_gnp({.n = 5, .p = -0.1}), std::invalid_argument);
  EXPECT_THROW(sample_gnp({.n = 5, .p = 1.5}), std::invalid_argument);
}

TEST(GnpTest, EdgeCountWithinThreeSigma) {
  const Graph g = sample_gnp({.n = 1000, .p = 0.1, .seed = 7});
  const double pairs = 1000.0 * 999.0 / 2.0;
  const double mean = pairs * 0.1;
  const double sigma = std::sqrt(pairs * 0.1 * 0.9);
  EXPECT_NEAR(static_cast<double>(g.num_edges()), mean, 3 * sigma);
}

TEST(GnpTest, PairFrequencyIsUniform) {
  // Each of the 10 pairs of K5 should appear in about half of the samples.
  std::vector<int> hits(10, 0);
  const int samples = 4000;
  for (int s = 0; s < samples; ++s) {
    const Graph g = sample_gnp({.n = 5, .p = 0.5, .seed = static_cast<std::uint64_t>(s)});
    for (const Edge& e : g.edges()) {
      const int idx = static_cast<int>(e.u * 5 + e.v - (e.u + 1) * (e.u + 2) / 2);
      ++hits[idx];
    }
  }
  const double sigma = std::sqrt(samples * 0.25);
  for (int h : hits) EXPECT_NEAR(h, samples / 2.0, 4 * sigma);
}

TEST(GnpTest, Deterministic) {
  const Graph a = sample_gnp({.n = 300, .p = 0.05, .seed = 99});
  const Graph b = sample_gnp({.n = 300, .p = 0.05, .seed = 99});
  const Graph c = sample_gnp({.n = 300, .p = 0.05, .seed = 100});
  EXPECT_TRUE(std::equal(a.edges().begin(), a.edges().end(), b.edges().begin(),
                         b.edges().end()));
  EXPECT_FALSE(std::equal(a.edges().begin(), a.edges().end(), c.edges().begin(),
                          c.edges().end()));
}

TEST(ComponentsTest, PathWithHole) {
  const Graph g = testing::path_graph(5);
  EXPECT_EQ(connected_components(g).size(), 1u);
  const auto comps = connected_components(g, [](Vertex v) { return v != 2; });
  EXPECT_THAT(comps, ElementsAre(ElementsAre(0, 1), ElementsAre(3, 4)));
}

TEST(ComponentsTest, MatchesDfsOracle) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = sample_gnp({.n = 200, .p = 0.01, .seed = seed});
    const auto keep_fn = [seed](Vertex v) { return (v + seed) % 3 != 0; };
    std::vector<bool> keep(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) keep[v] = keep_fn(v);
    EXPECT_EQ(connected_components(g, keep_fn),
              testing::dfs_components(testing::plain_matrix(g), -1, keep));
  }
}

TEST(ComponentsTest, LabelsIndexComponents) {
  const Graph g = sample_gnp({.n = 150, .p = 0.01, .seed = 3});
  const auto comps = connected_components(g);
  const auto labels = component_labels(g);
  std::size_t total = 0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (Vertex v : comps[i]) EXPECT_EQ(labels[v], i);
    total += comps[i].size();
  }
  EXPECT_EQ(total, g.num_vertices());
}

TEST(SpanningTreeTest, SmallCases) {
  const Graph tri = Graph::complete(3);
  const VertexSet all{0, 1, 2};
  const auto tree = spanning_tree(tri, all);
  ASSERT_TRUE(tree.has_value());
  EXPECT_EQ(tree->size(), 2u);
  const VertexSet single{1};
  EXPECT_THAT(*spanning_tree(tri, single), IsEmpty());
  EXPECT_THAT(*spanning_tree(tri, VertexSet{}), IsEmpty());
  const Graph two(4, {{0, 1}, {2, 3}});
  const VertexSet four{0, 1, 2, 3};
  EXPECT_FALSE(spanning_tree(two, four).has_value());
}

TEST(SpanningTreeTest, RandomPartsAreTrees) {
  Rng rng(12);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = sample_gnp({.n = 40, .p = 0.15, .seed = seed});
    VertexSet part;
    for (Vertex v = 0; v < 40; ++v) {
      if (coin_flip(rng)) part.push_back(v);
    }
    const auto tree = spanning_tree(g, part);
    std::vector<bool> keep(40, false);
    for (Vertex v : part) keep[v] = true;
    const bool connected =
        testing::dfs_components(testing::plain_matrix(g), -1, keep).size() <= 1;
    ASSERT_EQ(tree.has_value(), connected);
    if (!tree) continue;
    ASSERT_EQ(tree->size() + 1, std::max<std::size_t>(part.size(), 1));
    DisjointSets dsu(40);
    for (const Edge& e : *tree) {
      EXPECT_TRUE(g.has_edge(e.u, e.v));
      EXPECT_TRUE(keep[e.u] && keep[e.v]);
      EXPECT_TRUE(dsu.unite(e.u, e.v));
    }
  }
}

// Degeneracy as the largest minimum degree over the subgraphs met while
// peeling any minimum-degree vertex, computed by rescanning.
std::size_t peel_degeneracy(const Graph& g, const VertexSet& subset) {
  std::set<Vertex> alive(subset.begin(), subset.end());
  std::size_t best = 0;
  while (!alive.empty()) {
    Vertex arg = *alive.begin();
    std::size_t low = SIZE_MAX;
    for (Vertex v : alive) {
      std::size_t d = 0;
      for (Vertex w : g.neighbours(v)) d += alive.count(w);
      if (d < low) {
        low = d;
        arg = v;
      }
    }
    best = std::max(best, low);
    alive.erase(arg);
  }
  return best;
}

TEST(DegeneracyTest, Examples) {
  const Graph empty(5, {});
  const VertexSet all5{0, 1, 2, 3, 4};
  EXPECT_EQ(degeneracy_order(empty, all5).degeneracy, 0u);
  const Graph cycle = testing::cycle_graph(6);
  const VertexSet all6{0, 1, 2, 3, 4, 5};
  EXPECT_EQ(degeneracy_order(cycle, all6).degeneracy, 2u);
  EXPECT_EQ(degeneracy_order(Graph::complete(5), all5).degeneracy, 4u);
  EXPECT_EQ(degeneracy_order(cycle, VertexSet{}).degeneracy, 0u);
}

TEST(DegeneracyTest, MatchesPeelingOracleAndBoundsLaterNeighbours) {
  Rng rng(5);
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Graph g = sample_gnp({.n = 120, .p = 0.3, .seed = seed});
    VertexSet subset;
    for (Vertex v = 0; v < 120; ++v) {
      if (uniform01(rng) < 0.4) subset.push_back(v);
    }
    const DegeneracyOrder d = degeneracy_order(g, subset);
    EXPECT_EQ(d.degeneracy, peel_degeneracy(g, subset));
    VertexSet sorted = d.order;
    std::sort(sorted.begin(), sorted.end());
    ASSERT_EQ(sorted, subset);
    std::vector<std::size_t> pos(120, SIZE_MAX);
    for (std::size_t i = 0; i < d.order.size(); ++i) pos[d.order[i]] = i;
    for (Vertex v : d.order) {
      std::size_t later = 0;
      for (Vertex w : g.neighbours(v)) later += pos[w] != SIZE_MAX && pos[w] > pos[v];
      EXPECT_LE(later, d.degeneracy);
    }
  }
}

TEST(InducedSubgraphTest, RelabelsVertices) {
  const Graph g = testing::cycle_graph(6);
  const VertexSet picked{1, 2, 3, 5};
  const Graph h = induced_subgraph(g, picked);
  EXPECT_EQ(h.num_vertices(), 4u);
  EXPECT_THAT(std::vector<Edge>(h.edges().begin(), h.edges().end()),
              ElementsAre(Edge{0, 1}, Edge{1, 2}));
}

TEST(DisjointSetsTest, UniteAndFind) {
  DisjointSets dsu(5);
  EXPECT_TRUE(dsu.unite(0, 1));
  EXPECT_TRUE(dsu.unite(3, 4));
  EXPECT_FALSE(dsu.unite(1, 0));
  EXPECT_TRUE(dsu.same(3, 4));
  EXPECT_FALSE(dsu.same(1, 3));
}

TEST(RngTest, StableHashIsOrderSensitiveAndDeterministic) {
  EXPECT_EQ(stable_hash({1, 2, 3}), stable_hash({1, 2, 3}));
  EXPECT_NE(stable_hash({1, 2, 3}), stable_hash({3, 2, 1}));
  EXPECT_NE(stable_hash({1}), stable_hash({1, 0}));
}

TEST(RngTest, StableHashFewCollisions) {
  std::unordered_set<std::uint64_t> seen;
  const std::uint64_t count = 1'000'000;
  for (std::uint64_t i = 0; i < count; ++i) seen.insert(stable_hash({42, i}));
  EXPECT_LT(static_cast<double>(count - seen.size()), 1e-3 * count);
}

TEST(RngTest, UniformBelowStaysInRange) {
  Rng rng(1);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto x = uniform_below(rng, 7);
    ASSERT_LT(x, 7u);
    ++counts[x];
  }
  for (int c : counts) EXPECT_NEAR(c, 1000, 150);
}

TEST(RngTest, ShuffleIsPermutation) {
  Rng rng(2);
  std::vector<int> items(50);
  std::iota(items.begin(), items.end(), 0);
  shuffle(std::span<int>(items), rng);
  std::vector<int> sorted = items;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 50; ++i) EXPECT_EQ(sorted[i], i);
}

TEST(RngTest, SampleWithoutReplacementIsDistinct) {
  Rng rng(3);
  const std::vector<int> pool{1, 2, 3, 4, 5, 6, 7, 8};
  const auto picked = sample_without_replacement(std::span<const int>(pool), 5, rng);
  EXPECT_EQ(picked.size(), 5u);
  EXPECT_EQ(std::set<int>(picked.begin(), picked.end()).size(), 5u);
  EXPECT_EQ(sample_without_replacement(std::span<const int>(pool), 20, rng).size(), 8u);
}

}  // namespace
}  // namespace monotree
