#include "cliquelist/graph.hpp"

#include <algorithm>
#include <deque>

namespace cliquelist {

bool Graph::is_adjacent(Vertex u, Vertex v) const {
  if (u == v) return false;
  const auto& list = adj_.at(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string format_edge(Edge e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.adj_.assign(n, {});
  for (const auto& e : edges) {
    if (e.first >= n || e.second >= n) {
      throw GraphError("edge " + format_edge(e) + " has a vertex id outside [0, " +
                       std::to_string(n) + ")");
    }
    if (e.first == e.second) {
      throw GraphError("edge " + format_edge(e) + " is a self-loop");
    }
    g.adj_[e.first].push_back(e.second);
    g.adj_[e.second].push_back(e.first);
  }
  std::size_t total = 0;
  for (auto& list : g.adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    list.shrink_to_fit();
    total += list.size();
  }
  g.num_edges_ = total / 2;
  return g;
}

Vertex InducedSubgraph::local_id(Vertex host) const {
  auto it = std::lower_bound(host_ids.begin(), host_ids.end(), host);
  if (it == host_ids.end() || *it != host) {
    throw GraphError("vertex " + std::to_string(host) + " is not in the induced subgraph");
  }
  return static_cast<Vertex>(it - host_ids.begin());
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> members) {
  const std::size_t n = g.num_vertices();
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] >= n) {
      throw GraphError("vertex " + std::to_string(members[i]) + " is outside [0, " +
                       std::to_string(n) + ")");
    }
    if (i > 0 && members[i - 1] >= members[i]) {
      throw GraphError("induced_subgraph requires strictly ascending members");
    }
  }

  InducedSubgraph sub;
  sub.host_ids.assign(members.begin(), members.end());
  std::vector<Edge> edges;
  std::vector<Vertex> common;
  for (Vertex local = 0; local < members.size(); ++local) {
    intersect_ascending_into(g.neighbors(members[local]), members, common);
    for (Vertex host : common) {
      Vertex other = sub.local_id(host);
      if (local < other) edges.emplace_back(local, other);
    }
  }
  sub.graph = build_graph(members.size(), edges);
  return sub;
}

void intersect_ascending_into(std::span<const Vertex> a, std::span<const Vertex> b,
                              std::vector<Vertex>& out) {
  out.clear();
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      out.push_back(*ia);
      ++ia;
      ++ib;
    }
  }
}

VertexSet intersect_ascending(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  out.reserve(std::min(a.size(), b.size()));
  intersect_ascending_into(a, b, out);
  return out;
}

std::optional<std::vector<std::uint8_t>> is_bipartite(const Graph& g) {
  constexpr std::uint8_t kUnset = 2;
  const std::size_t n = g.num_vertices();
  std::vector<std::uint8_t> color(n, kUnset);
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    if (color[root] != kUnset) continue;
    color[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (color[w] == kUnset) {
          color[w] = static_cast<std::uint8_t>(1 - color[u]);
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool is_clique(const Graph& g, std::span<const Vertex> members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!g.is_adjacent(members[i], members[j])) return false;
    }
  }
  return true;
}

}  // namespace cliquelist
