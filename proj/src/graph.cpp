#include "rmc/graph.hpp"

#include <algorithm>
#include <queue>

namespace rmc {

NodePair::NodePair(NodeId a, NodeId b) {
  if (a == b) {
    throw GraphError("self-loop on node " + std::to_string(a));
  }
  u = std::min(a, b);
  v = std::max(a, b);
}

Graph Graph::build(std::size_t n, std::vector<NodePair> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.adjacency_.resize(n);
  for (const NodePair& e : edges) {
    if (e.u < 0 || static_cast<std::size_t>(e.v) >= n) {
      throw GraphError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                       ") references a node outside 0.." + std::to_string(n) + "-1");
    }
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : g.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
  }
  g.edges_ = std::move(edges);
  return g;
}

Graph Graph::from_edge_list(std::span<const std::pair<NodeId, NodeId>> pairs,
                            std::optional<std::size_t> n) {
  std::vector<NodePair> edges;
  edges.reserve(pairs.size());
  NodeId max_id = -1;
  for (const auto& [a, b] : pairs) {
    if (a < 0 || b < 0) {
      throw GraphError("negative node id in edge list");
    }
    edges.emplace_back(a, b);
    max_id = std::max({max_id, a, b});
  }
  const std::size_t needed = static_cast<std::size_t>(max_id + 1);
  if (n && *n < needed) {
    throw GraphError("node count " + std::to_string(*n) + " does not cover id " +
                     std::to_string(max_id));
  }
  return build(n.value_or(needed), std::move(edges));
}

Graph Graph::from_labeled_edges(std::span<const std::pair<std::int64_t, std::int64_t>> pairs) {
  std::vector<std::int64_t> ids;
  ids.reserve(pairs.size() * 2);
  for (const auto& [a, b] : pairs) {
    ids.push_back(a);
    ids.push_back(b);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  auto dense = [&](std::int64_t id) {
    return static_cast<NodeId>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  std::vector<NodePair> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    edges.emplace_back(dense(a), dense(b));
  }
  Graph g = build(ids.size(), std::move(edges));
  g.labels_.reserve(ids.size());
  for (std::int64_t id : ids) {
    g.labels_.push_back(std::to_string(id));
  }
  return g;
}

Graph Graph::from_weighted_edges(std::size_t n, std::span<const std::pair<NodeId, NodeId>> pairs,
                                 std::span<const double> node_weights,
                                 std::span<const double> edge_weights) {
  if (!node_weights.empty() && node_weights.size() != n) {
    throw GraphError("node weight count does not match node count");
  }
  if (!edge_weights.empty() && edge_weights.size() != pairs.size()) {
    throw GraphError("edge weight count does not match edge count");
  }
  for (double w : node_weights) {
    if (!(w > 0.0)) throw GraphError("node weights must be strictly positive");
  }
  for (double w : edge_weights) {
    if (!(w > 0.0)) throw GraphError("edge weights must be strictly positive");
  }

  Graph g = from_edge_list(pairs, n);
  if (g.edge_count() != pairs.size() && !edge_weights.empty()) {
    throw GraphError("duplicate edges are ambiguous in a weighted edge list");
  }
  g.node_weights_.assign(node_weights.begin(), node_weights.end());
  if (!edge_weights.empty()) {
    g.edge_weights_.resize(g.edge_count());
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      g.edge_weights_[g.edge_index(NodePair(pairs[k].first, pairs[k].second))] = edge_weights[k];
    }
  }
  return g;
}

void Graph::check_node(NodeId v) const {
  if (!contains(v)) {
    throw GraphError("unknown node id " + std::to_string(v));
  }
}

std::size_t Graph::degree(NodeId v) const {
  check_node(v);
  return adjacency_[v].size();
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
  check_node(v);
  return adjacency_[v];
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& nbrs : adjacency_) best = std::max(best, nbrs.size());
  return best;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(node_count());
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = adjacency_[v].size();
  return out;
}

bool Graph::has_edge(NodeId a, NodeId b) const {
  if (!contains(a) || !contains(b) || a == b) return false;
  const auto& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::size_t Graph::edge_index(NodePair e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) {
    throw GraphError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                     ") is not in the graph");
  }
  return static_cast<std::size_t>(it - edges_.begin());
}

double Graph::node_weight(NodeId v) const {
  check_node(v);
  return node_weights_.empty() ? 1.0 : node_weights_[v];
}

double Graph::edge_weight(NodePair e) const {
  const std::size_t k = edge_index(e);
  return edge_weights_.empty() ? 1.0 : edge_weights_[k];
}

std::string Graph::label(NodeId v) const {
  check_node(v);
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (labels.size() != node_count()) {
    throw GraphError("label count does not match node count");
  }
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

bool Graph::is_connected() const {
  if (node_count() == 0) {
    throw GraphError("connectivity is undefined for the empty graph");
  }
  std::vector<char> seen(node_count(), 0);
  std::queue<NodeId> frontier;
  frontier.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const NodeId v = frontier.front();
    frontier.pop();
    for (NodeId w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == node_count();
}

Graph Graph::induced_subgraph(std::span<const NodeId> keep) const {
  std::vector<NodeId> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  for (NodeId v : kept) check_node(v);

  std::vector<NodeId> new_id(node_count(), -1);
  for (std::size_t i = 0; i < kept.size(); ++i) new_id[kept[i]] = static_cast<NodeId>(i);

  std::vector<NodePair> sub_edges;
  std::vector<double> sub_edge_weights;
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const NodePair& e = edges_[k];
    if (new_id[e.u] >= 0 && new_id[e.v] >= 0) {
      sub_edges.emplace_back(new_id[e.u], new_id[e.v]);
      if (!edge_weights_.empty()) sub_edge_weights.push_back(edge_weights_[k]);
    }
  }
  // edges_ is sorted and new_id is monotone, so sub_edges stays sorted and
  // build() keeps edge_weights aligned.
  Graph g = build(kept.size(), std::move(sub_edges));
  g.edge_weights_ = std::move(sub_edge_weights);
  g.labels_.reserve(kept.size());
  for (NodeId v : kept) {
    g.labels_.push_back(label(v));
    if (!node_weights_.empty()) g.node_weights_.push_back(node_weights_[v]);
  }
  return g;
}

Graph Graph::without_edges(std::span<const NodePair> removed) const {
  std::vector<NodePair> drop(removed.begin(), removed.end());
  std::sort(drop.begin(), drop.end());

  std::vector<NodePair> kept;
  std::vector<double> kept_weights;
  kept.reserve(edges_.size());
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    if (std::binary_search(drop.begin(), drop.end(), edges_[k])) continue;
    kept.push_back(edges_[k]);
    if (!edge_weights_.empty()) kept_weights.push_back(edge_weights_[k]);
  }
  Graph g = build(node_count(), std::move(kept));
  g.edge_weights_ = std::move(kept_weights);
  g.node_weights_ = node_weights_;
  g.labels_ = labels_;
  return g;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.adjacency_.size() == b.adjacency_.size() && a.edges_ == b.edges_ &&
         a.node_weights_ == b.node_weights_ && a.edge_weights_ == b.edge_weights_ &&
         a.labels_ == b.labels_;
}

}  // namespace rmc
