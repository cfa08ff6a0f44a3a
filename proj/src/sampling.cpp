#include "rmc/sampling.hpp"

#include <algorithm>

namespace rmc {

std::size_t RngHandle::below(std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(engine_);
}

double RngHandle::unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

Graph random_walk_sample(const Graph& g, std::size_t size, RngHandle& rng, std::size_t max_iter) {
  const std::size_t n = g.node_count();
  if (size == 0 || size > n) {
    throw GraphError("random-walk sample size must be in 1.." + std::to_string(n));
  }

  std::vector<char> visited(n, 0);
  std::vector<NodeId> sampled;
  sampled.reserve(size);

  auto current = static_cast<NodeId>(rng.below(n));
  visited[current] = 1;
  sampled.push_back(current);

  std::size_t stagnant = 0;
  while (sampled.size() < size) {
    const auto nbrs = g.neighbors(current);
    NodeId next = nbrs.empty() ? static_cast<NodeId>(rng.below(n)) : nbrs[rng.below(nbrs.size())];

    if (!visited[next]) {
      visited[next] = 1;
      sampled.push_back(next);
      stagnant = 0;
    } else {
      ++stagnant;
    }

    if (stagnant >= max_iter) {
      std::vector<NodeId> unvisited;
      for (std::size_t v = 0; v < n; ++v) {
        if (!visited[v]) unvisited.push_back(static_cast<NodeId>(v));
      }
      if (unvisited.empty()) break;
      // The jump target becomes the walk position; it is only recorded once
      // the walk steps onto it again.
      next = unvisited[rng.below(unvisited.size())];
      stagnant = 0;
    }
    current = next;
  }
  return g.induced_subgraph(sampled);
}

Graph delete_edges_randomly(const Graph& g, double p, RngHandle& rng) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw GraphError("deletion probability must lie in [0, 1]");
  }
  std::vector<NodePair> removed;
  for (const NodePair& e : g.edges()) {
    if (rng.unit() < p) removed.push_back(e);
  }
  return g.without_edges(removed);
}

Graph random_connected_graph(std::size_t n, double extra_edge_p, RngHandle& rng) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (std::size_t v = 1; v < n; ++v) {
    edges.emplace_back(static_cast<NodeId>(rng.below(v)), static_cast<NodeId>(v));
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (rng.unit() < extra_edge_p) edges.emplace_back(static_cast<NodeId>(a), static_cast<NodeId>(b));
    }
  }
  return Graph::from_edge_list(edges, n);
}

Graph preferential_attachment_graph(std::size_t n, std::size_t attach, RngHandle& rng) {
  if (attach == 0 || n <= attach) {
    throw GraphError("preferential attachment needs 0 < attach < n");
  }
  std::vector<std::pair<NodeId, NodeId>> edges;
  // Every edge endpoint appears once per incidence, so a uniform draw from
  // `endpoints` is a degree-proportional draw.
  std::vector<NodeId> endpoints;
  for (std::size_t v = 0; v < attach; ++v) {
    edges.emplace_back(static_cast<NodeId>(v), static_cast<NodeId>(attach));
    endpoints.push_back(static_cast<NodeId>(v));
    endpoints.push_back(static_cast<NodeId>(attach));
  }
  std::vector<NodeId> targets;
  for (std::size_t v = attach + 1; v < n; ++v) {
    targets.clear();
    while (targets.size() < attach) {
      const NodeId t = endpoints[rng.below(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (NodeId t : targets) {
      edges.emplace_back(t, static_cast<NodeId>(v));
      endpoints.push_back(t);
      endpoints.push_back(static_cast<NodeId>(v));
    }
  }
  return Graph::from_edge_list(edges, n);
}

}  // namespace rmc
