#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cliquelist/graph.hpp"

namespace cliquelist {

/// A vertex ordering (v_1, ..., v_n) together with the forward neighbourhoods
/// N+(v_i) = { v_j : j > i, v_i v_j in E }.
///
/// Invariants: `order` and `position` are inverse permutations; every edge
/// appears in exactly one forward list; each forward list is ascending by
/// position, so its head is the next vertex of the ordering among them;
/// `degeneracy` is the largest forward list size (0 for the empty graph).
struct DegenerateOrdering {
  std::vector<Vertex> order;
  std::vector<std::size_t> position;
  std::vector<std::vector<Vertex>> forward;
  std::size_t degeneracy = 0;

  std::size_t size() const noexcept { return order.size(); }
  std::span<const Vertex> forward_of(Vertex v) const { return forward.at(v); }
};

/// Minimum-degree peeling. Among vertices of minimum remaining degree the
/// smallest id is removed first, so the ordering is a deterministic function
/// of the graph. The resulting degeneracy is exact.
DegenerateOrdering degeneracy_ordering(const Graph& g);

/// Adjacency test through the forward list of whichever endpoint comes first
/// in the ordering: O(degeneracy). Throws std::invalid_argument when u == v.
bool ordered_adjacent(const DegenerateOrdering& o, Vertex u, Vertex v);

/// Maximum forward degree of an arbitrary ordering of g.
std::size_t max_forward_degree(const Graph& g, std::span<const Vertex> order);

}  // namespace cliquelist
