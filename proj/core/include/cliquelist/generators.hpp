#pragma once

#include <cstddef>
#include <cstdint>

#include "cliquelist/graph.hpp"

namespace cliquelist {

// Deterministic graph families. Every seeded generator draws from SeededRng
// (random.hpp), so identical arguments give identical edge lists everywhere.

Graph empty_graph(std::size_t n);
Graph path_graph(std::size_t n);
/// Requires n >= 3.
Graph cycle_graph(std::size_t n);

Graph complete_graph(std::size_t n);

/// Sides {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(std::size_t a, std::size_t b);

/// Starts from K_{k+1}; each further vertex joins a k-clique drawn uniformly
/// from all k-cliques created so far. Requires n >= k + 1.
Graph k_tree(std::size_t k, std::size_t n, std::uint64_t seed);

/// Stacked triangulation: start from the face {0,1,2}, repeatedly pick a face
/// uniformly, put a new vertex inside it and split it into three. Planar by
/// construction (a planar 3-tree). Requires n >= 3.
Graph apollonian(std::size_t n, std::uint64_t seed);

/// Random bipartite graph on sides {0..a-1}, {a..a+b-1} with edge probability
/// p, plus h apex vertices (the last h ids) adjacent to every other vertex.
Graph almost_bipartite_graph(std::size_t a, std::size_t b, std::size_t h, double p,
                             std::uint64_t seed);

/// G(n, p): each pair u < v, visited lexicographically, is an edge with
/// probability p.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

}  // namespace cliquelist
