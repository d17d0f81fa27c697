#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "cliquelist/graph.hpp"

namespace cliquelist {

/// One k-sum recipe. `pairing[i] = (a, b)` identifies vertex a of the first
/// graph with vertex b of the second; the a's form W1, the b's W2, and both
/// must be cliques. `deleted_join_edges` lists pairs of W1 (first-graph ids)
/// whose edge is absent from the sum.
struct CliqueSumSpec {
  std::vector<std::pair<Vertex, Vertex>> pairing;
  std::vector<Edge> deleted_join_edges;

  std::size_t k() const noexcept { return pairing.size(); }
  VertexSet w1() const;
  VertexSet w2() const;
};

/// The k-sum of g1 and g2. The result has n1 + n2 - k vertices: g1's vertices
/// keep their ids, g2's non-join vertices follow in ascending order, and each
/// join vertex of g2 takes the id of its partner in g1. A deleted join edge is
/// removed from both copies, so it is absent from the result.
///
/// Throws GraphError when W1 or W2 is not a clique, ids are out of range or
/// repeated, or a deleted edge is not a pair of W1.
Graph clique_sum(const Graph& g1, const Graph& g2, const CliqueSumSpec& spec);

/// Id that a vertex of g2 receives in clique_sum(g1, g2, spec).
std::vector<Vertex> clique_sum_relabelling(std::size_t n1, std::size_t n2,
                                           const CliqueSumSpec& spec);

/// Binary composition tree: leaves hold graphs, internal nodes join the graphs
/// composed from their two children. An internal node's spec refers to the
/// vertex ids of the children's composed graphs. Nodes are immutable and
/// subtrees may be shared.
class CliqueSumTree {
 public:
  static CliqueSumTree leaf(Graph g);
  static CliqueSumTree join(CliqueSumTree left, CliqueSumTree right, CliqueSumSpec spec);

  bool is_leaf() const noexcept { return leaf_ != nullptr; }
  const Graph& leaf_graph() const;
  const CliqueSumTree& left() const;
  const CliqueSumTree& right() const;
  const CliqueSumSpec& spec() const noexcept { return spec_; }

  std::size_t leaf_count() const;
  /// Leaf graphs, left to right.
  std::vector<const Graph*> leaves() const;

 private:
  std::shared_ptr<const Graph> leaf_;
  std::shared_ptr<const CliqueSumTree> left_;
  std::shared_ptr<const CliqueSumTree> right_;
  CliqueSumSpec spec_;
};

struct ComposedTree {
  Graph graph;
  /// Vertex counts of the leaves, left to right.
  std::vector<std::size_t> leaf_sizes;
  /// Largest k used by any join (0 for a single leaf).
  std::size_t max_join_size = 0;
};

/// Folds clique_sum bottom-up. Errors from clique_sum propagate.
ComposedTree compose_clique_sum_tree(const CliqueSumTree& tree);

/// Seeded random tree over the given leaves. Repeatedly joins two random
/// subtrees with a k-sum, k drawn uniformly from 0..max_join and lowered until
/// both sides have a k-clique; the cliques, the pairing and (independently,
/// probability 1/2 each) the deleted join edges are all random. Finding the
/// k-cliques enumerates the composed graphs, so this is meant for sparse
/// desk-scale leaves.
CliqueSumTree random_clique_sum_tree(std::vector<Graph> leaves, std::size_t max_join,
                                     std::uint64_t seed);

/// `count` random bipartite graphs (so triangle-free), each with side sizes
/// drawn uniformly from 1..max_side and edge probability p.
std::vector<Graph> random_bipartite_leaves(std::size_t count, std::size_t max_side, double p,
                                           std::uint64_t seed);

}  // namespace cliquelist
