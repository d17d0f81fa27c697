#include "cliquelist/enumeration.hpp"

#include <algorithm>
#include <numeric>

#include "cliquelist/ordering.hpp"

namespace cliquelist {
namespace {

void check_oracle_size(const Graph& g, const char* who) {
  if (g.num_vertices() > kOracleMaxVertices) {
    throw SizeLimitError(std::string(who) + ": graph has " + std::to_string(g.num_vertices()) +
                         " vertices, limit is " + std::to_string(kOracleMaxVertices));
  }
}

// Cliques of `g`, reported in the ids of `host`.
void recurse(const Graph& g, std::span<const Vertex> host, std::vector<Clique>& out) {
  const std::size_t n = g.num_vertices();
  if (n == 0) {
    out.emplace_back();
    return;
  }
  const Vertex v = 0;

  std::vector<Vertex> nbr(g.neighbors(v).begin(), g.neighbors(v).end());
  InducedSubgraph with_v = induced_subgraph(g, nbr);
  std::vector<Vertex> with_v_host;
  with_v_host.reserve(nbr.size());
  for (Vertex local : nbr) with_v_host.push_back(host[local]);
  const std::size_t first = out.size();
  recurse(with_v.graph, with_v_host, out);
  for (std::size_t i = first; i < out.size(); ++i) {
    auto& c = out[i];
    c.insert(std::upper_bound(c.begin(), c.end(), host[v]), host[v]);
  }

  std::vector<Vertex> rest(n - 1);
  std::iota(rest.begin(), rest.end(), Vertex{1});
  InducedSubgraph without_v = induced_subgraph(g, rest);
  recurse(without_v.graph, host.subspan(1), out);
}

// One frame of the candidate-set stack: the live candidates are set[head..].
struct Level {
  std::vector<Vertex> set;
  std::size_t head = 0;

  bool empty() const noexcept { return head == set.size(); }
  std::size_t size() const noexcept { return set.size() - head; }
};

}  // namespace

CliqueSet cliques_recursive(const Graph& g) {
  check_oracle_size(g, "cliques_recursive");
  std::vector<Vertex> host(g.num_vertices());
  std::iota(host.begin(), host.end(), Vertex{0});
  std::vector<Clique> out;
  recurse(g, host, out);
  return CliqueSet(out.begin(), out.end());
}

DelayStats all_cliques(const Graph& g, const CliqueSink& sink) {
  const std::size_t n = g.num_vertices();
  DelayStats stats;
  stats.n = n;

  std::vector<Vertex> clique;
  clique.reserve(n);
  if (sink) sink(clique);
  stats.clique_count = 1;

  // levels[i - 1] is V_i; depth is i.
  std::vector<Level> levels(n + 1);
  levels[0].set.resize(n);
  std::iota(levels[0].set.begin(), levels[0].set.end(), Vertex{0});
  std::size_t depth = 1;
  std::uint64_t gap = 0;

  while (depth > 0) {
    Level& current = levels[depth - 1];
    if (current.empty()) {
      --depth;
      ++gap;
      ++stats.total_steps;
      continue;
    }

    const std::uint64_t cost = current.size() + 1;
    const Vertex x = current.set[current.head];
    clique.resize(depth - 1);
    clique.push_back(x);

    gap += cost;
    stats.total_steps += cost;
    stats.max_gap = std::max(stats.max_gap, gap);
    gap = 0;
    if (sink) sink(clique);
    ++stats.clique_count;

    const auto rest = std::span<const Vertex>(current.set).subspan(current.head + 1);
    Level& next = levels[depth];
    intersect_ascending_into(rest, g.neighbors(x), next.set);
    next.head = 0;
    ++current.head;
    ++depth;
  }
  stats.max_gap = std::max(stats.max_gap, gap);
  return stats;
}

DegenerateRun degenerate_cliques_measured(const Graph& g, const CliqueSink& sink) {
  DegenerateRun run;
  const DegenerateOrdering ordering = degeneracy_ordering(g);
  run.degeneracy = ordering.degeneracy;
  run.total_steps = g.num_vertices() + g.num_edges();

  if (sink) sink(std::span<const Vertex>{});
  std::uint64_t count = 1;

  std::vector<Edge> local_edges;
  std::vector<Vertex> translated;
  for (Vertex v : ordering.order) {
    const auto forward = ordering.forward_of(v);

    // G[N+(v)] with local id j standing for forward[j].
    local_edges.clear();
    for (Vertex a = 0; a < forward.size(); ++a) {
      for (Vertex b = a + 1; b < forward.size(); ++b) {
        run.total_steps += ordering.forward_of(forward[a]).size() + 1;
        if (ordered_adjacent(ordering, forward[a], forward[b])) local_edges.emplace_back(a, b);
      }
    }
    const Graph local = build_graph(forward.size(), local_edges);

    CliqueSink lifted;
    if (sink) {
      lifted = [&](std::span<const Vertex> c) {
        translated.clear();
        translated.push_back(v);
        for (Vertex local_id : c) translated.push_back(forward[local_id]);
        std::sort(translated.begin(), translated.end());
        sink(translated);
      };
    }
    const DelayStats sub = all_cliques(local, lifted);
    run.total_steps += sub.total_steps;
    count += sub.clique_count;
  }
  run.clique_count = count;
  return run;
}

BigCount degenerate_cliques(const Graph& g, const CliqueSink& sink) {
  return degenerate_cliques_measured(g, sink).clique_count;
}

CliqueSet brute_force_cliques(const Graph& g) {
  check_oracle_size(g, "brute_force_cliques");
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> adjacency(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) adjacency[v] |= std::uint32_t{1} << w;
  }

  CliqueSet out;
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t subset = 0; subset < limit; ++subset) {
    bool pairwise = true;
    for (Vertex v = 0; v < n && pairwise; ++v) {
      const std::uint32_t bit = std::uint32_t{1} << v;
      if ((subset & bit) && ((subset & ~bit) & ~adjacency[v])) pairwise = false;
    }
    if (!pairwise) continue;
    Clique c;
    for (Vertex v = 0; v < n; ++v) {
      if (subset & (std::uint32_t{1} << v)) c.push_back(v);
    }
    out.insert(std::move(c));
  }
  return out;
}

BigCount count_cliques(const Graph& g) {
  return BigCount(all_cliques(g, {}).clique_count);
}

DelayStats measure_delay(const Graph& g) { return all_cliques(g, {}); }

}  // namespace cliquelist
