#include "cliquelist/bounds.hpp"

#include <algorithm>

namespace cliquelist {
namespace {

BigCount pow2(std::size_t e) {
  BigCount r = 1;
  r <<= static_cast<unsigned>(e);
  return r;
}

BigCount big(std::size_t v) { return BigCount(static_cast<unsigned long long>(v)); }

std::size_t largest_clique(const Graph& g) {
  std::size_t best = 0;
  all_cliques(g, [&](std::span<const Vertex> c) { best = std::max(best, c.size()); });
  return best;
}

}  // namespace

BigCount degenerate_clique_bound(std::size_t d, std::size_t n) {
  if (n < d) throw std::invalid_argument("degenerate_clique_bound requires n >= d");
  return pow2(d) * big(n - d + 1);
}

BigCount planar_clique_bound(std::size_t n) {
  if (n < 3) throw std::invalid_argument("planar_clique_bound requires n >= 3");
  return 8 * big(n - 2);
}

BigCount almost_bipartite_clique_bound(std::size_t h, std::size_t n) {
  if (h > n) throw std::invalid_argument("almost_bipartite_clique_bound requires n >= h");
  return pow2(h) * big(n) * big(n) + 2;
}

BigRational exact_almost_bipartite_count_bound(std::size_t apex_count, std::size_t n) {
  if (apex_count > n) {
    throw std::invalid_argument("exact_almost_bipartite_count_bound requires n >= apex count");
  }
  const BigRational rest(big(n - apex_count));
  return BigRational(pow2(apex_count)) * (rest * rest / 4 + rest + 1);
}

SquareInequality clique_sum_square_inequality(std::size_t n1, std::size_t n2, std::size_t k) {
  if (n1 < k || n2 < k) {
    throw std::invalid_argument("clique_sum_square_inequality requires n1 >= k and n2 >= k");
  }
  SquareInequality out;
  const BigCount n = big(n1) + big(n2) - big(k);
  out.lhs = n * n;
  out.rhs = big(n1) * big(n1) + big(n2) * big(n2);
  out.holds = out.lhs >= out.rhs;
  // n1 >= k^2/2 + k, doubled to stay in integers.
  out.hypotheses_hold = 2 * big(n1) >= big(k) * big(k) + 2 * big(k) && n2 >= k + 1;
  return out;
}

BigCount f_prime(std::size_t k, const BigCount& f_k) {
  if (k < 1) throw std::invalid_argument("f_prime requires k >= 1");
  const BigCount floor = pow2(k * k + 2 * k);
  return std::max(f_k, floor);
}

BoundReport verify_family_bound(const Graph& g, const BigCount& bound, std::string label,
                                std::string params) {
  BoundReport r;
  r.label = std::move(label);
  r.params = std::move(params);
  r.n = g.num_vertices();
  r.bound = bound;
  r.actual = count_cliques(g);
  r.holds = r.actual <= r.bound;
  r.tight = r.actual == r.bound;
  return r;
}

BoundReport verify_family_bound(const Graph& g, const BigRational& bound, std::string label,
                                std::string params) {
  BoundReport r;
  r.label = std::move(label);
  r.params = std::move(params);
  r.n = g.num_vertices();
  r.bound = numerator(bound) / denominator(bound);  // floor; bound is non-negative
  r.actual = count_cliques(g);
  const BigRational actual(r.actual);
  r.holds = actual <= bound;
  r.tight = actual == bound;
  return r;
}

TreeBoundReport verify_clique_sum_tree_bound(const CliqueSumTree& tree, std::size_t k,
                                             const BigCount& f_k) {
  TreeBoundReport out;
  out.k = k;
  out.f_k = f_k;
  out.f_prime = f_prime(k, f_k);

  const auto leaves = tree.leaves();
  out.leaf_count = leaves.size();
  out.all_leaves_large = true;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const Graph& leaf = *leaves[i];
    const std::size_t n_i = leaf.num_vertices();
    if (largest_clique(leaf) >= k) {
      throw BoundPreconditionError("leaf " + std::to_string(i) + " contains a " +
                                   std::to_string(k) + "-clique");
    }
    const BigCount leaf_count = count_cliques(leaf);
    if (leaf_count > f_k * big(n_i) * big(n_i)) {
      throw BoundPreconditionError("leaf " + std::to_string(i) + " has " + leaf_count.str() +
                                   " cliques, more than f_k * n_i^2 = " +
                                   BigCount(f_k * big(n_i) * big(n_i)).str());
    }
    if (2 * n_i < k * k + 2 * k) out.all_leaves_large = false;
  }

  const ComposedTree composed = compose_clique_sum_tree(tree);
  const std::size_t n = composed.graph.num_vertices();
  out.n_squared = big(n) * big(n);
  for (std::size_t size : composed.leaf_sizes) out.leaf_square_sum += big(size) * big(size);
  out.leaf_square_sum_within = out.leaf_square_sum <= out.n_squared;

  const BigCount bound = out.f_prime * out.n_squared;
  out.report = verify_family_bound(composed.graph, bound, "clique-sum-tree",
                                   "leaves=" + std::to_string(out.leaf_count) +
                                       " k=" + std::to_string(k) + " f_k=" + f_k.str());
  return out;
}

std::string to_tsv(const BoundReport& r) {
  return r.label + '\t' + std::to_string(r.n) + '\t' + r.bound.str() + '\t' + r.actual.str() +
         '\t' + (r.holds ? "true" : "false") + '\t' + (r.tight ? "true" : "false");
}

}  // namespace cliquelist
