#include "cliquelist/ordering.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace cliquelist {

DegenerateOrdering degeneracy_ordering(const Graph& g) {
  const std::size_t n = g.num_vertices();
  DegenerateOrdering o;
  o.order.reserve(n);
  o.position.assign(n, 0);
  o.forward.assign(n, {});
  if (n == 0) return o;

  // Bucket d holds vertices whose remaining degree is d, smallest id on top.
  // Entries go stale when a vertex's degree drops; they are skipped on pop.
  using Bucket = std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>>;
  std::size_t max_degree = 0;
  std::vector<std::size_t> degree(n);
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    max_degree = std::max(max_degree, degree[v]);
  }
  std::vector<Bucket> buckets(max_degree + 1);
  for (Vertex v = 0; v < n; ++v) buckets[degree[v]].push(v);

  std::vector<bool> removed(n, false);
  std::size_t current = 0;
  while (o.order.size() < n) {
    Vertex v = 0;
    for (;;) {
      auto& bucket = buckets[current];
      while (!bucket.empty() && (removed[bucket.top()] || degree[bucket.top()] != current)) {
        bucket.pop();
      }
      if (!bucket.empty()) {
        v = bucket.top();
        bucket.pop();
        break;
      }
      ++current;
    }

    removed[v] = true;
    o.position[v] = o.order.size();
    o.order.push_back(v);
    o.degeneracy = std::max(o.degeneracy, current);
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      o.forward[v].push_back(w);
      buckets[--degree[w]].push(w);
    }
    if (current > 0) --current;
  }

  for (auto& fwd : o.forward) {
    std::sort(fwd.begin(), fwd.end(),
              [&](Vertex a, Vertex b) { return o.position[a] < o.position[b]; });
  }
  return o;
}

bool ordered_adjacent(const DegenerateOrdering& o, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("ordered_adjacent: u and v must differ");
  if (o.position.at(u) > o.position.at(v)) std::swap(u, v);
  const auto& fwd = o.forward[u];
  return std::find(fwd.begin(), fwd.end(), v) != fwd.end();
}

std::size_t max_forward_degree(const Graph& g, std::span<const Vertex> order) {
  std::vector<std::size_t> pos(g.num_vertices());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  std::size_t best = 0;
  for (Vertex v : order) {
    std::size_t fwd = 0;
    for (Vertex w : g.neighbors(v)) fwd += pos[w] > pos[v] ? 1 : 0;
    best = std::max(best, fwd);
  }
  return best;
}

}  // namespace cliquelist
