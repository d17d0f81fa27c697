#include "cliquelist/generators.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliquelist/random.hpp"

namespace cliquelist {
namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("edge probability must lie in [0, 1], got " + std::to_string(p));
  }
}

}  // namespace

Graph empty_graph(std::size_t n) { return build_graph(n, {}); }

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return build_graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle_graph requires n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  edges.emplace_back(0, static_cast<Vertex>(n - 1));
  return build_graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n > 0 ? n - 1 : 0) / 2);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return build_graph(n, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  edges.reserve(a * b);
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, static_cast<Vertex>(a + v));
  }
  return build_graph(a + b, edges);
}

Graph k_tree(std::size_t k, std::size_t n, std::uint64_t seed) {
  if (n < k + 1) {
    throw std::invalid_argument("k_tree requires n >= k + 1 (k=" + std::to_string(k) +
                                ", n=" + std::to_string(n) + ")");
  }
  SeededRng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u <= k; ++u) {
    for (Vertex v = u + 1; v <= k; ++v) edges.emplace_back(u, v);
  }

  // Every k-subset of the initial K_{k+1}, then k new ones per added vertex.
  std::vector<std::vector<Vertex>> cliques;
  for (Vertex skip = 0; skip <= k; ++skip) {
    std::vector<Vertex> c;
    for (Vertex u = 0; u <= k; ++u) {
      if (u != skip) c.push_back(u);
    }
    cliques.push_back(std::move(c));
  }

  for (Vertex v = static_cast<Vertex>(k + 1); v < n; ++v) {
    const std::vector<Vertex> base = cliques[rng.below(cliques.size())];
    for (Vertex u : base) edges.emplace_back(u, v);
    for (std::size_t drop = 0; drop < base.size(); ++drop) {
      std::vector<Vertex> c;
      c.reserve(k);
      for (std::size_t j = 0; j < base.size(); ++j) {
        if (j != drop) c.push_back(base[j]);
      }
      c.push_back(v);
      cliques.push_back(std::move(c));
    }
  }
  return build_graph(n, edges);
}

Graph apollonian(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("apollonian requires n >= 3");
  SeededRng rng(seed);
  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
  std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}};
  for (Vertex v = 3; v < n; ++v) {
    const std::size_t pick = rng.below(faces.size());
    const auto [a, b, c] = faces[pick];
    edges.emplace_back(a, v);
    edges.emplace_back(b, v);
    edges.emplace_back(c, v);
    faces[pick] = {a, b, v};
    faces.push_back({a, v, c});
    faces.push_back({v, b, c});
  }
  return build_graph(n, edges);
}

Graph almost_bipartite_graph(std::size_t a, std::size_t b, std::size_t h, double p,
                             std::uint64_t seed) {
  check_probability(p);
  SeededRng rng(seed);
  const std::size_t n = a + b + h;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < b; ++v) {
      if (rng.bernoulli(p)) edges.emplace_back(u, static_cast<Vertex>(a + v));
    }
  }
  for (Vertex apex = static_cast<Vertex>(a + b); apex < n; ++apex) {
    for (Vertex u = 0; u < apex; ++u) edges.emplace_back(u, apex);
  }
  return build_graph(n, edges);
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  check_probability(p);
  SeededRng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
    }
  }
  return build_graph(n, edges);
}

}  // namespace cliquelist
