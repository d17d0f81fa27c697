#include <gtest/gtest.h>

#include <numeric>

#include "cliquelist/generators.hpp"
#include "cliquelist/ordering.hpp"
#include "cliquelist/random.hpp"
#include "oracles.hpp"

namespace cliquelist {
namespace {

void expect_well_formed(const Graph& g, const DegenerateOrdering& o) {
  const std::size_t n = g.num_vertices();
  ASSERT_EQ(o.order.size(), n);
  ASSERT_EQ(o.position.size(), n);
  std::size_t forward_total = 0;
  std::size_t widest = 0;
  for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(o.position[o.order[i]], i);
  for (Vertex v = 0; v < n; ++v) {
    const auto fwd = o.forward_of(v);
    forward_total += fwd.size();
    widest = std::max(widest, fwd.size());
    for (std::size_t j = 0; j < fwd.size(); ++j) {
      EXPECT_TRUE(g.is_adjacent(v, fwd[j]));
      EXPECT_GT(o.position[fwd[j]], o.position[v]);
      if (j > 0) EXPECT_LT(o.position[fwd[j - 1]], o.position[fwd[j]]);
    }
    // N+(v) is exactly the later neighbours.
    std::size_t later = 0;
    for (Vertex w : g.neighbors(v)) later += o.position[w] > o.position[v];
    EXPECT_EQ(later, fwd.size());
  }
  EXPECT_EQ(forward_total, g.num_edges());
  EXPECT_EQ(widest, o.degeneracy);
}

TEST(DegeneracyOrdering, CompleteGraphOrderedById) {
  const auto o = degeneracy_ordering(complete_graph(4));
  EXPECT_EQ(o.degeneracy, 3u);
  EXPECT_EQ(o.order, (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(DegeneracyOrdering, CompleteBipartite33) {
  EXPECT_EQ(degeneracy_ordering(complete_bipartite(3, 3)).degeneracy, 3u);
  EXPECT_EQ(testing::degeneracy_by_permutations(complete_bipartite(3, 3)), 3u);
}

TEST(DegeneracyOrdering, TwoTreeOnFiveVertices) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    EXPECT_EQ(degeneracy_ordering(k_tree(2, 5, seed)).degeneracy, 2u);
  }
}

TEST(DegeneracyOrdering, EmptyGraphHasDegeneracyZero) {
  const auto o = degeneracy_ordering(empty_graph(0));
  EXPECT_EQ(o.degeneracy, 0u);
  EXPECT_TRUE(o.order.empty());
}

TEST(DegeneracyOrdering, KnownFamilies) {
  for (std::size_t n = 1; n <= 12; ++n) {
    EXPECT_EQ(degeneracy_ordering(complete_graph(n)).degeneracy, n - 1);
  }
  for (std::size_t a = 0; a <= 6; ++a) {
    for (std::size_t b = 0; b <= 6; ++b) {
      EXPECT_EQ(degeneracy_ordering(complete_bipartite(a, b)).degeneracy, std::min(a, b));
    }
  }
  for (std::size_t k = 1; k <= 5; ++k) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      EXPECT_EQ(degeneracy_ordering(k_tree(k, 30, seed)).degeneracy, k);
    }
  }
}

TEST(DegeneracyOrdering, SubsetDpAgreesWithPermutationsOnSmallGraphs) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = random_graph(1 + seed % 7, 0.5, seed);
    EXPECT_EQ(testing::degeneracy_by_subset_dp(g), testing::degeneracy_by_permutations(g));
  }
}

TEST(DegeneracyOrdering, MatchesExhaustiveOptimumUpToTenVertices) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::size_t n = seed % 11;
    const double p = 0.1 + 0.1 * static_cast<double>(seed % 9);
    const Graph g = random_graph(n, p, seed);
    const auto o = degeneracy_ordering(g);
    expect_well_formed(g, o);
    EXPECT_EQ(o.degeneracy, testing::degeneracy_by_subset_dp(g)) << "seed " << seed;
    EXPECT_EQ(max_forward_degree(g, o.order), o.degeneracy);
  }
  // A few full n! sweeps at n = 10.
  for (std::uint64_t seed = 0; seed < 2; ++seed) {
    const Graph g = random_graph(10, 0.4, 1000 + seed);
    EXPECT_EQ(degeneracy_ordering(g).degeneracy, testing::degeneracy_by_permutations(g));
  }
}

TEST(DegeneracyOrdering, EverySuffixStartsWithALowDegreeVertex) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_graph(25, 0.3, seed);
    const auto o = degeneracy_ordering(g);
    // The subgraph induced by v_i..v_n contains v_i with degree |N+(v_i)| <= d.
    for (std::size_t i = 0; i < o.size(); ++i) {
      std::vector<Vertex> suffix(o.order.begin() + static_cast<std::ptrdiff_t>(i), o.order.end());
      std::sort(suffix.begin(), suffix.end());
      const auto sub = induced_subgraph(g, suffix);
      EXPECT_LE(sub.graph.degree(sub.local_id(o.order[i])), o.degeneracy);
    }
  }
}

TEST(DegeneracyOrdering, DeterministicTieBreakBySmallestId) {
  const auto o = degeneracy_ordering(empty_graph(5));
  EXPECT_EQ(o.order, (std::vector<Vertex>{0, 1, 2, 3, 4}));
  // Path: both ends have degree 1, the smaller id goes first.
  EXPECT_EQ(degeneracy_ordering(path_graph(4)).order, (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(OrderedAdjacent, Examples) {
  EXPECT_TRUE(ordered_adjacent(degeneracy_ordering(complete_graph(3)), 0, 2));
  EXPECT_TRUE(ordered_adjacent(degeneracy_ordering(complete_graph(3)), 2, 0));
  EXPECT_FALSE(ordered_adjacent(degeneracy_ordering(path_graph(3)), 0, 2));
  EXPECT_THROW(ordered_adjacent(degeneracy_ordering(complete_graph(3)), 1, 1),
               std::invalid_argument);
}

TEST(OrderedAdjacent, AgreesWithBinarySearchOnRandomPairs) {
  const Graph g = random_graph(60, 0.15, 5);
  const auto o = degeneracy_ordering(g);
  SeededRng rng(17);
  int checked = 0;
  while (checked < 1000) {
    const auto u = static_cast<Vertex>(rng.below(60));
    const auto v = static_cast<Vertex>(rng.below(60));
    if (u == v) continue;
    EXPECT_EQ(ordered_adjacent(o, u, v), g.is_adjacent(u, v));
    ++checked;
  }
}

}  // namespace
}  // namespace cliquelist
