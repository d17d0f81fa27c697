#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "cliquelist/graph.hpp"

namespace cliquelist {

/// Exact clique count. K_n alone has 2^n cliques, so 64 bits are not enough.
using BigCount = boost::multiprecision::cpp_int;

/// Receives one clique at a time, members ascending. The span is only valid
/// for the duration of the call. An empty std::function is a no-op sink.
using CliqueSink = std::function<void(std::span<const Vertex>)>;

using CliqueSet = std::set<Clique>;

/// Largest graph accepted by the set-materialising reference algorithms.
inline constexpr std::size_t kOracleMaxVertices = 25;

class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Work counters for one run of all_cliques.
///
/// Cost model (machine independent): every test of an empty candidate set
/// followed by a pop costs 1 step; every output step (pick the smallest
/// candidate x, emit, intersect the remaining candidates with N(x), advance)
/// costs |V_i| + 1 where V_i is the candidate set before x is removed.
/// `max_gap` is the largest number of steps spent between two consecutive
/// outputs, including the tail between the last output and termination.
struct DelayStats {
  std::size_t n = 0;
  std::uint64_t clique_count = 0;
  std::uint64_t total_steps = 0;
  std::uint64_t max_gap = 0;

  double gap_per_vertex() const noexcept {
    return n == 0 ? static_cast<double>(max_gap) : static_cast<double>(max_gap) / static_cast<double>(n);
  }
};

/// Under the cost model above, any gap is at most (pops) + (|V_j| + 1)
/// <= 2n + 1, so max_gap <= kDelayConstant * n for every n >= 1.
inline constexpr std::uint64_t kDelayConstant = 3;

constexpr std::uint64_t delay_bound(std::size_t n) noexcept { return 2 * static_cast<std::uint64_t>(n) + 1; }

/// Recursive reference lister: branch on the smallest vertex v, returning
/// {C + v : C a clique of G[N(v)]} together with the cliques of G - v.
/// Includes the empty clique. Throws SizeLimitError above kOracleMaxVertices.
CliqueSet cliques_recursive(const Graph& g);

/// Iterative depth-first lister with a stack of candidate sets V_1..V_i.
/// Always picks the smallest candidate, so the output order is
/// {}, {0}, {0, a}, ... . Every clique is emitted exactly once, the empty
/// clique first.
DelayStats all_cliques(const Graph& g, const CliqueSink& sink);

/// Work counters for degenerate_cliques: peeling cost (n + m), forward
/// subgraph construction (each ordered adjacency test costs the length of the
/// scanned forward list, plus one), and the all_cliques steps of every
/// per-vertex subproblem.
struct DegenerateRun {
  BigCount clique_count;
  std::uint64_t total_steps = 0;
  std::size_t degeneracy = 0;
};

/// Lists cliques through a degeneracy ordering. The empty clique is emitted
/// once up front; then for each v_i, every clique whose earliest vertex in the
/// ordering is v_i, i.e. v_i plus a clique of G[N+(v_i)]. Returns the count.
BigCount degenerate_cliques(const Graph& g, const CliqueSink& sink);
DegenerateRun degenerate_cliques_measured(const Graph& g, const CliqueSink& sink);

/// All 2^n subsets filtered by pairwise adjacency via bitmasks. Independent
/// of every other lister; used as the oracle. Throws SizeLimitError above
/// kOracleMaxVertices.
CliqueSet brute_force_cliques(const Graph& g);

/// Exact number of cliques, empty clique included.
BigCount count_cliques(const Graph& g);

/// all_cliques with a discarding sink.
DelayStats measure_delay(const Graph& g);

}  // namespace cliquelist
