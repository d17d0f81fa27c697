#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "cliquelist/clique_sum.hpp"
#include "cliquelist/enumeration.hpp"
#include "cliquelist/graph.hpp"

namespace cliquelist {

using BigRational = boost::multiprecision::cpp_rational;

/// Raised when a verification harness is handed input outside the
/// hypotheses of the bound it checks.
class BoundPreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// 2^d (n - d + 1): cliques of a d-degenerate graph on n vertices. Tight for
/// d-trees. Requires n >= d.
BigCount degenerate_clique_bound(std::size_t d, std::size_t n);

/// 8 (n - 2): cliques of a planar graph. Tight for stacked triangulations.
/// Requires n >= 3.
BigCount planar_clique_bound(std::size_t n);

/// 2^h n^2 + 2: cliques of a graph that is bipartite after removing h
/// vertices. Requires n >= h.
BigCount almost_bipartite_clique_bound(std::size_t h, std::size_t n);

/// 2^a (n_b^2 / 4 + n_b + 1) with n_b = n - a, kept exact: the sharper count
/// behind the previous bound, where a is the actual number of apices.
/// Requires n >= a.
BigRational exact_almost_bipartite_count_bound(std::size_t apex_count, std::size_t n);

struct SquareInequality {
  /// (n1 + n2 - k)^2 >= n1^2 + n2^2
  bool holds = false;
  /// n1 >= k^2/2 + k and n2 >= k + 1
  bool hypotheses_hold = false;
  BigCount lhs;
  BigCount rhs;
};

/// The vertex-count inequality behind gluing two graphs with O(n_i^2)
/// cliques along a k-clique. Requires n1 >= k and n2 >= k.
SquareInequality clique_sum_square_inequality(std::size_t n1, std::size_t n2, std::size_t k);

/// max(f_k, 2^(k^2 + 2k)). Requires k >= 1.
BigCount f_prime(std::size_t k, const BigCount& f_k);

/// One bound checked against an enumerated count.
struct BoundReport {
  std::string label;
  std::size_t n = 0;
  std::string params;
  /// For rational bounds this is the floor; `holds`/`tight` are exact.
  BigCount bound;
  BigCount actual;
  bool holds = false;
  bool tight = false;
};

/// Enumerates g and compares its clique count with `bound`.
BoundReport verify_family_bound(const Graph& g, const BigCount& bound, std::string label,
                                std::string params = {});

/// Same, against an exact rational bound.
BoundReport verify_family_bound(const Graph& g, const BigRational& bound, std::string label,
                                std::string params = {});

struct TreeBoundReport {
  BoundReport report;
  std::size_t k = 0;
  BigCount f_k;
  BigCount f_prime;
  std::size_t leaf_count = 0;
  /// Leaves with n_u >= k^2/2 + k.
  bool all_leaves_large = false;
  BigCount leaf_square_sum;
  BigCount n_squared;
  /// leaf_square_sum <= n_squared; only asserted when all leaves are large.
  bool leaf_square_sum_within = false;
};

/// Composes the tree and checks count <= f'(k) n^2. Every leaf must have no
/// k-clique and at most f_k n_i^2 cliques; a leaf that fails either raises
/// BoundPreconditionError naming its index (left to right).
TreeBoundReport verify_clique_sum_tree_bound(const CliqueSumTree& tree, std::size_t k,
                                             const BigCount& f_k);

/// Tab-separated: label, n, bound, actual, holds, tight.
std::string to_tsv(const BoundReport& r);

}  // namespace cliquelist
