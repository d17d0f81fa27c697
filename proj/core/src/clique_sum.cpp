#include "cliquelist/clique_sum.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cliquelist/enumeration.hpp"
#include "cliquelist/generators.hpp"
#include "cliquelist/random.hpp"

namespace cliquelist {
namespace {

Edge normalized(Edge e) { return e.first < e.second ? e : Edge{e.second, e.first}; }

void check_join_side(const Graph& g, const VertexSet& sorted_side, const char* name) {
  for (std::size_t i = 0; i < sorted_side.size(); ++i) {
    if (sorted_side[i] >= g.num_vertices()) {
      throw GraphError(std::string("clique_sum: ") + name + " vertex " +
                       std::to_string(sorted_side[i]) + " is out of range");
    }
    if (i > 0 && sorted_side[i - 1] == sorted_side[i]) {
      throw GraphError(std::string("clique_sum: ") + name + " repeats vertex " +
                       std::to_string(sorted_side[i]));
    }
  }
  if (!is_clique(g, sorted_side)) {
    throw GraphError(std::string("clique_sum: ") + name + " is not a clique");
  }
}

}  // namespace

VertexSet CliqueSumSpec::w1() const {
  VertexSet s;
  for (auto [a, b] : pairing) s.push_back(a);
  std::sort(s.begin(), s.end());
  return s;
}

VertexSet CliqueSumSpec::w2() const {
  VertexSet s;
  for (auto [a, b] : pairing) s.push_back(b);
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<Vertex> clique_sum_relabelling(std::size_t n1, std::size_t n2,
                                           const CliqueSumSpec& spec) {
  constexpr Vertex kUnassigned = ~Vertex{0};
  std::vector<Vertex> relabel(n2, kUnassigned);
  for (auto [a, b] : spec.pairing) relabel.at(b) = a;
  Vertex next = static_cast<Vertex>(n1);
  for (auto& id : relabel) {
    if (id == kUnassigned) id = next++;
  }
  return relabel;
}

Graph clique_sum(const Graph& g1, const Graph& g2, const CliqueSumSpec& spec) {
  const VertexSet w1 = spec.w1();
  const VertexSet w2 = spec.w2();
  check_join_side(g1, w1, "W1");
  check_join_side(g2, w2, "W2");

  std::set<Edge> deleted;
  for (Edge e : spec.deleted_join_edges) {
    if (e.first == e.second || !std::binary_search(w1.begin(), w1.end(), e.first) ||
        !std::binary_search(w1.begin(), w1.end(), e.second)) {
      throw GraphError("clique_sum: deleted edge " + format_edge(e) + " is not a pair of W1");
    }
    deleted.insert(normalized(e));
  }

  const std::vector<Vertex> relabel =
      clique_sum_relabelling(g1.num_vertices(), g2.num_vertices(), spec);
  std::vector<Edge> edges;
  edges.reserve(g1.num_edges() + g2.num_edges());
  for (Edge e : g1.edges()) {
    if (!deleted.contains(e)) edges.push_back(e);
  }
  for (auto [u, v] : g2.edges()) {
    const Edge mapped = normalized({relabel[u], relabel[v]});
    if (!deleted.contains(mapped)) edges.push_back(mapped);
  }
  return build_graph(g1.num_vertices() + g2.num_vertices() - spec.k(), edges);
}

CliqueSumTree CliqueSumTree::leaf(Graph g) {
  CliqueSumTree t;
  t.leaf_ = std::make_shared<const Graph>(std::move(g));
  return t;
}

CliqueSumTree CliqueSumTree::join(CliqueSumTree left, CliqueSumTree right, CliqueSumSpec spec) {
  CliqueSumTree t;
  t.left_ = std::make_shared<const CliqueSumTree>(std::move(left));
  t.right_ = std::make_shared<const CliqueSumTree>(std::move(right));
  t.spec_ = std::move(spec);
  return t;
}

const Graph& CliqueSumTree::leaf_graph() const {
  if (!leaf_) throw std::logic_error("CliqueSumTree: not a leaf");
  return *leaf_;
}

const CliqueSumTree& CliqueSumTree::left() const {
  if (!left_) throw std::logic_error("CliqueSumTree: leaf has no children");
  return *left_;
}

const CliqueSumTree& CliqueSumTree::right() const {
  if (!right_) throw std::logic_error("CliqueSumTree: leaf has no children");
  return *right_;
}

std::size_t CliqueSumTree::leaf_count() const {
  return is_leaf() ? 1 : left_->leaf_count() + right_->leaf_count();
}

std::vector<const Graph*> CliqueSumTree::leaves() const {
  if (is_leaf()) return {leaf_.get()};
  auto out = left_->leaves();
  auto rest = right_->leaves();
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

ComposedTree compose_clique_sum_tree(const CliqueSumTree& tree) {
  if (tree.is_leaf()) {
    return ComposedTree{tree.leaf_graph(), {tree.leaf_graph().num_vertices()}, 0};
  }
  ComposedTree left = compose_clique_sum_tree(tree.left());
  ComposedTree right = compose_clique_sum_tree(tree.right());
  ComposedTree out;
  out.graph = clique_sum(left.graph, right.graph, tree.spec());
  out.leaf_sizes = std::move(left.leaf_sizes);
  out.leaf_sizes.insert(out.leaf_sizes.end(), right.leaf_sizes.begin(), right.leaf_sizes.end());
  out.max_join_size = std::max({left.max_join_size, right.max_join_size, tree.spec().k()});
  return out;
}

namespace {

std::vector<Clique> cliques_of_size(const Graph& g, std::size_t size) {
  std::vector<Clique> out;
  all_cliques(g, [&](std::span<const Vertex> c) {
    if (c.size() == size) out.emplace_back(c.begin(), c.end());
  });
  return out;
}

}  // namespace

CliqueSumTree random_clique_sum_tree(std::vector<Graph> leaves, std::size_t max_join,
                                     std::uint64_t seed) {
  if (leaves.empty()) throw std::invalid_argument("random_clique_sum_tree needs at least one leaf");
  SeededRng rng(seed);

  struct Part {
    CliqueSumTree tree;
    Graph graph;
  };
  std::vector<Part> parts;
  for (auto& g : leaves) {
    Graph copy = g;
    parts.push_back({CliqueSumTree::leaf(std::move(g)), std::move(copy)});
  }

  while (parts.size() > 1) {
    const std::size_t i = rng.below(parts.size());
    std::size_t j = rng.below(parts.size() - 1);
    if (j >= i) ++j;

    std::size_t k = rng.below(max_join + 1);
    std::vector<Clique> left_cliques;
    std::vector<Clique> right_cliques;
    for (;; --k) {
      left_cliques = cliques_of_size(parts[i].graph, k);
      right_cliques = cliques_of_size(parts[j].graph, k);
      if (!left_cliques.empty() && !right_cliques.empty()) break;
    }

    const Clique& w1 = left_cliques[rng.below(left_cliques.size())];
    Clique w2 = right_cliques[rng.below(right_cliques.size())];
    rng.shuffle(w2);

    CliqueSumSpec spec;
    for (std::size_t t = 0; t < k; ++t) spec.pairing.emplace_back(w1[t], w2[t]);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        if (rng.bernoulli(0.5)) spec.deleted_join_edges.emplace_back(w1[a], w1[b]);
      }
    }

    Graph joined = clique_sum(parts[i].graph, parts[j].graph, spec);
    Part merged{CliqueSumTree::join(std::move(parts[i].tree), std::move(parts[j].tree), spec),
                std::move(joined)};
    const std::size_t hi = std::max(i, j);
    const std::size_t lo = std::min(i, j);
    parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(hi));
    parts[lo] = std::move(merged);
  }
  return std::move(parts.front().tree);
}

std::vector<Graph> random_bipartite_leaves(std::size_t count, std::size_t max_side, double p,
                                           std::uint64_t seed) {
  if (max_side == 0) throw std::invalid_argument("random_bipartite_leaves needs max_side >= 1");
  SeededRng rng(seed);
  std::vector<Graph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t a = 1 + rng.below(max_side);
    const std::size_t b = 1 + rng.below(max_side);
    out.push_back(almost_bipartite_graph(a, b, 0, p, rng.next()));
  }
  return out;
}

}  // namespace cliquelist
