#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cliquelist {

using Vertex = std::uint32_t;

/// Strictly ascending list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// A set of pairwise adjacent vertices, stored ascending. The empty clique is valid.
using Clique = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

/// Raised for malformed graph input: self-loops, out-of-range ids, bad files.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Every adjacency list is strictly ascending, symmetric and loop-free. Once
/// built the graph never changes, so concurrent readers need no locking.
class Graph {
 public:
  Graph() = default;

  std::size_t num_vertices() const noexcept { return adj_.size(); }
  std::size_t num_edges() const noexcept { return num_edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  /// Binary search over the ascending list of `u`; `u == v` is false.
  bool is_adjacent(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(std::size_t, std::span<const Edge>);

  std::vector<std::vector<Vertex>> adj_;
  std::size_t num_edges_ = 0;
};

/// Builds a graph from an unordered edge list. Duplicate pairs (in either
/// orientation) collapse into one edge; self-loops and ids >= n throw GraphError.
Graph build_graph(std::size_t n, std::span<const Edge> edges);

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

inline bool is_adjacent(const Graph& g, Vertex u, Vertex v) { return g.is_adjacent(u, v); }

/// G[s] relabelled 0..|s|-1 in ascending order of the host ids.
struct InducedSubgraph {
  Graph graph;
  /// host_ids[local] is the host vertex; ascending, so old->new is its rank.
  std::vector<Vertex> host_ids;

  Vertex local_id(Vertex host) const;
};

/// `members` must be strictly ascending with ids < n; otherwise GraphError.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> members);

/// Linear merge of two ascending ranges.
VertexSet intersect_ascending(std::span<const Vertex> a, std::span<const Vertex> b);

/// Same merge, writing into `out` (cleared first) so callers can reuse storage.
void intersect_ascending_into(std::span<const Vertex> a, std::span<const Vertex> b,
                              std::vector<Vertex>& out);

/// Colour 0/1 per vertex such that every edge is bichromatic, or nullopt if
/// the graph has an odd cycle. Each component's smallest vertex gets colour 0.
std::optional<std::vector<std::uint8_t>> is_bipartite(const Graph& g);

/// True if every pair of `members` is adjacent in `g`.
bool is_clique(const Graph& g, std::span<const Vertex> members);

std::string format_edge(Edge e);

}  // namespace cliquelist
