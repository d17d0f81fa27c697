#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "cliquelist/clique_sum.hpp"
#include "cliquelist/edge_list.hpp"
#include "cliquelist/enumeration.hpp"
#include "cliquelist/generators.hpp"
#include "cliquelist/ordering.hpp"
#include "cliquelist/random.hpp"

namespace cliquelist {
namespace {

TEST(SeededRng, StreamIsTheStandardMersenneTwister) {
  // 10000th output of a default-constructed mt19937_64, fixed by the standard.
  SeededRng rng(5489u);
  std::uint64_t x = 0;
  for (int i = 0; i < 10000; ++i) x = rng.next();
  EXPECT_EQ(x, 9981545732273789042ull);
}

TEST(SeededRng, BelowStaysInRange) {
  SeededRng rng(1);
  for (std::uint64_t bound = 1; bound < 200; ++bound) {
    for (int i = 0; i < 50; ++i) EXPECT_LT(rng.below(bound), bound);
  }
}

TEST(CompleteGraphs, EdgeCounts) {
  EXPECT_EQ(complete_graph(4).num_edges(), 6u);
  const Graph k33 = complete_bipartite(3, 3);
  EXPECT_EQ(k33.num_edges(), 9u);
  EXPECT_TRUE(is_bipartite(k33).has_value());
  const Graph k05 = complete_bipartite(0, 5);
  EXPECT_EQ(k05.num_vertices(), 5u);
  EXPECT_EQ(k05.num_edges(), 0u);
}

TEST(KTree, SmallExamples) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    EXPECT_EQ(count_cliques(k_tree(2, 5, seed)), 16);
    EXPECT_EQ(count_cliques(k_tree(3, 10, seed)), 64);
  }
}

TEST(KTree, OneTreeIsATree) {
  for (std::size_t n = 2; n < 40; ++n) {
    const Graph t = k_tree(1, n, n);
    EXPECT_EQ(t.num_edges(), n - 1);
    EXPECT_TRUE(is_bipartite(t).has_value());
    EXPECT_EQ(count_cliques(t), BigCount(2 * n));
  }
}

TEST(KTree, RejectsTooFewVertices) { EXPECT_THROW(k_tree(3, 3, 0), std::invalid_argument); }

TEST(KTree, MeetsDegenerateBoundExactly) {
  for (std::size_t k = 0; k <= 5; ++k) {
    for (std::size_t n = k + 1; n <= 40; n += 3) {
      const Graph g = k_tree(k, n, 31 * k + n);
      EXPECT_EQ(g.num_edges(), k * (k + 1) / 2 + (n - k - 1) * k);
      EXPECT_EQ(count_cliques(g), BigCount(std::uint64_t{1} << k) * (n - k + 1));
    }
  }
}

TEST(Apollonian, FourVerticesIsK4) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) EXPECT_EQ(apollonian(4, seed), complete_graph(4));
}

TEST(Apollonian, CountIsEightNMinusTwo) {
  for (std::size_t n = 3; n <= 30; ++n) {
    const Graph g = apollonian(n, n);
    EXPECT_EQ(g.num_edges(), 3 * n - 6);
    EXPECT_EQ(count_cliques(g), BigCount(8 * (n - 2)));
  }
  EXPECT_THROW(apollonian(2, 0), std::invalid_argument);
}

TEST(AlmostBipartite, Examples) {
  EXPECT_EQ(almost_bipartite_graph(3, 3, 0, 1.0, 9), complete_bipartite(3, 3));
  const Graph g = almost_bipartite_graph(2, 2, 1, 1.0, 9);
  EXPECT_EQ(g.num_vertices(), 5u);
  EXPECT_EQ(induced_subgraph(g, std::vector<Vertex>{0, 1, 2, 3}).graph, complete_bipartite(2, 2));
  EXPECT_THROW(almost_bipartite_graph(2, 2, 0, 1.5, 0), std::invalid_argument);
}

TEST(AlmostBipartite, RemovingApicesLeavesBipartiteGraph) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t a = seed % 9, b = (seed / 3) % 8, h = seed % 4;
    const Graph g = almost_bipartite_graph(a, b, h, 0.6, seed);
    std::vector<Vertex> base(a + b);
    std::iota(base.begin(), base.end(), Vertex{0});
    EXPECT_TRUE(is_bipartite(induced_subgraph(g, base).graph).has_value());
    for (Vertex apex = static_cast<Vertex>(a + b); apex < g.num_vertices(); ++apex) {
      EXPECT_EQ(g.degree(apex), g.num_vertices() - 1);
    }
  }
}

TEST(RandomGraph, Extremes) {
  EXPECT_EQ(random_graph(9, 0.0, 1).num_edges(), 0u);
  EXPECT_EQ(random_graph(9, 1.0, 1), complete_graph(9));
}

TEST(RandomGraph, GoldenEdgeLists) {
  // Recorded from the first build; any change here breaks fixture portability.
  EXPECT_EQ(to_edge_list_string(random_graph(8, 0.5, 0)),
            "8 13\n0 1\n0 3\n0 6\n1 2\n1 5\n2 3\n2 4\n2 5\n3 5\n3 6\n4 6\n4 7\n5 6\n");
  EXPECT_EQ(random_graph(8, 0.5, 1).num_edges(), 21u);
}

TEST(Generators, DeterministicPerSeed) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    EXPECT_EQ(k_tree(3, 25, seed), k_tree(3, 25, seed));
    EXPECT_EQ(apollonian(25, seed), apollonian(25, seed));
    EXPECT_EQ(random_graph(25, 0.3, seed), random_graph(25, 0.3, seed));
    EXPECT_EQ(almost_bipartite_graph(5, 6, 2, 0.4, seed), almost_bipartite_graph(5, 6, 2, 0.4, seed));
  }
  EXPECT_NE(apollonian(25, 1), apollonian(25, 2));
}

CliqueSumSpec edge_join(Vertex a1, Vertex b1, Vertex a2, Vertex b2) {
  CliqueSumSpec spec;
  spec.pairing = {{a1, a2}, {b1, b2}};
  return spec;
}

TEST(CliqueSum, TwoK4sOverAnEdge) {
  const Graph g = clique_sum(complete_graph(4), complete_graph(4), edge_join(0, 1, 2, 3));
  EXPECT_EQ(g.num_vertices(), 6u);
  EXPECT_EQ(g.num_edges(), 11u);
  // Every clique sits in one K4; the shared edge contributes 4 to both sides.
  EXPECT_EQ(BigCount(brute_force_cliques(g).size()), 16 + 16 - 4);
  EXPECT_EQ(count_cliques(g), 28);
}

TEST(CliqueSum, ZeroSumIsDisjointUnion) {
  const Graph a = complete_graph(3);
  const Graph b = path_graph(4);
  const Graph g = clique_sum(a, b, {});
  EXPECT_EQ(g.num_vertices(), 7u);
  EXPECT_EQ(count_cliques(g), count_cliques(a) + count_cliques(b) - 1);
}

TEST(CliqueSum, BowTie) {
  CliqueSumSpec spec;
  spec.pairing = {{2, 0}};
  const Graph g = clique_sum(complete_graph(3), complete_graph(3), spec);
  EXPECT_EQ(g.num_vertices(), 5u);
  EXPECT_EQ(g.num_edges(), 6u);
  EXPECT_EQ(g.degree(2), 4u);
  EXPECT_EQ(count_cliques(g), 8 + 8 - 2);
}

TEST(CliqueSum, IdPolicy) {
  // g2 = path 0-1-2-3 joined at its vertex 2: survivors 0,1,3 become 3,4,5.
  CliqueSumSpec spec;
  spec.pairing = {{1, 2}};
  const Graph g = clique_sum(complete_graph(3), path_graph(4), spec);
  EXPECT_EQ(clique_sum_relabelling(3, 4, spec), (std::vector<Vertex>{3, 4, 1, 5}));
  EXPECT_TRUE(g.is_adjacent(3, 4));
  EXPECT_TRUE(g.is_adjacent(4, 1));
  EXPECT_TRUE(g.is_adjacent(1, 5));
  EXPECT_EQ(g.num_edges(), 6u);
}

TEST(CliqueSum, DeletedJoinEdgeIsAbsentFromResult) {
  CliqueSumSpec spec = edge_join(0, 1, 0, 1);
  spec.deleted_join_edges = {{1, 0}};
  const Graph g = clique_sum(complete_graph(3), complete_graph(3), spec);
  EXPECT_FALSE(g.is_adjacent(0, 1));
  EXPECT_EQ(g.num_edges(), 4u);
  EXPECT_TRUE(is_bipartite(g).has_value());
}

TEST(CliqueSum, ValidationErrors) {
  EXPECT_THROW(clique_sum(path_graph(3), complete_graph(3), edge_join(0, 2, 0, 1)), GraphError);
  EXPECT_THROW(clique_sum(complete_graph(3), path_graph(3), edge_join(0, 1, 0, 2)), GraphError);
  EXPECT_THROW(clique_sum(complete_graph(3), complete_graph(3), edge_join(0, 0, 0, 1)), GraphError);
  EXPECT_THROW(clique_sum(complete_graph(3), complete_graph(3), edge_join(0, 5, 0, 1)), GraphError);
  CliqueSumSpec bad_delete = edge_join(0, 1, 0, 1);
  bad_delete.deleted_join_edges = {{0, 2}};
  EXPECT_THROW(clique_sum(complete_graph(3), complete_graph(3), bad_delete), GraphError);
}

TEST(CliqueSum, EveryCliqueLiesInOneSummand) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const Graph g1 = random_graph(4 + seed % 6, 0.6, seed);
    const Graph g2 = random_graph(4 + (seed / 2) % 6, 0.6, seed + 500);
    const CliqueSumTree tree = random_clique_sum_tree({g1, g2}, 3, seed);
    const Graph sum = compose_clique_sum_tree(tree).graph;
    const CliqueSumSpec& spec = tree.spec();
    EXPECT_EQ(sum.num_vertices(), g1.num_vertices() + g2.num_vertices() - spec.k());

    // random_clique_sum_tree may swap the two leaves.
    const Graph& first = *tree.leaves()[0];
    const Graph& second = *tree.leaves()[1];
    const auto relabel = clique_sum_relabelling(first.num_vertices(), second.num_vertices(), spec);
    std::vector<bool> in_second(sum.num_vertices(), false);
    for (Vertex v : relabel) in_second[v] = true;
    for (const auto& c : brute_force_cliques(sum)) {
      const bool within_first = std::all_of(c.begin(), c.end(),
                                            [&](Vertex v) { return v < first.num_vertices(); });
      const bool within_second = std::all_of(c.begin(), c.end(), [&](Vertex v) { return in_second[v]; });
      EXPECT_TRUE(within_first || within_second) << "seed " << seed;
    }
  }
}

TEST(CliqueSumTree, SingleLeafIsIdentity) {
  const Graph g = apollonian(9, 2);
  const ComposedTree c = compose_clique_sum_tree(CliqueSumTree::leaf(g));
  EXPECT_EQ(c.graph, g);
  EXPECT_EQ(c.leaf_sizes, (std::vector<std::size_t>{9}));
}

TEST(CliqueSumTree, TwoLeavesEqualsCliqueSum) {
  const auto spec = edge_join(0, 1, 2, 3);
  const auto tree =
      CliqueSumTree::join(CliqueSumTree::leaf(complete_graph(4)), CliqueSumTree::leaf(complete_graph(5)), spec);
  EXPECT_EQ(compose_clique_sum_tree(tree).graph, clique_sum(complete_graph(4), complete_graph(5), spec));
}

TEST(CliqueSumTree, BalancedFourK4sWithTwoSums) {
  const auto pair = CliqueSumTree::join(CliqueSumTree::leaf(complete_graph(4)),
                                        CliqueSumTree::leaf(complete_graph(4)), edge_join(0, 1, 0, 1));
  const auto tree = CliqueSumTree::join(pair, pair, edge_join(2, 3, 4, 5));
  const ComposedTree c = compose_clique_sum_tree(tree);
  EXPECT_EQ(c.graph.num_vertices(), 4u * 4 - 3 * 2);
  EXPECT_EQ(c.leaf_sizes, (std::vector<std::size_t>{4, 4, 4, 4}));
  EXPECT_EQ(c.max_join_size, 2u);
  EXPECT_EQ(tree.leaf_count(), 4u);
}

TEST(CliqueSumTree, InvalidSpecPropagates) {
  const auto tree = CliqueSumTree::join(CliqueSumTree::leaf(path_graph(3)),
                                        CliqueSumTree::leaf(complete_graph(3)), edge_join(0, 2, 0, 1));
  EXPECT_THROW(compose_clique_sum_tree(tree), GraphError);
}

TEST(CliqueSumTree, RandomTreesAreDeterministicAndTriangleFreeWhenLeavesAre) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto leaves = random_bipartite_leaves(6, 6, 0.5, seed);
    const auto a = compose_clique_sum_tree(random_clique_sum_tree(leaves, 2, seed)).graph;
    const auto b = compose_clique_sum_tree(random_clique_sum_tree(leaves, 2, seed)).graph;
    EXPECT_EQ(a, b);
    EXPECT_EQ(count_cliques(a), BigCount(a.num_edges() + a.num_vertices() + 1));
  }
}

}  // namespace
}  // namespace cliquelist
