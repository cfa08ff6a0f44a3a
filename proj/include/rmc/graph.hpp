#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rmc {

using NodeId = std::int32_t;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected edge stored canonically with u < v.
struct NodePair {
  NodeId u = 0;
  NodeId v = 0;

  NodePair() = default;
  /// Canonicalizes the endpoints; throws GraphError when a == b.
  NodePair(NodeId a, NodeId b);

  auto operator<=>(const NodePair&) const = default;
};

/// Immutable simple undirected graph on dense ids 0..N-1.
///
/// Unweighted graphs carry no weight tables; node_weight() and edge_weight()
/// then report 1. Adjacency lists are sorted ascending so every traversal
/// and every sort derived from them is reproducible.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from raw (u, v) pairs. Duplicate pairs collapse; ids
  /// must be nonnegative. When `n` is given it must cover every referenced
  /// id, and ids beyond the referenced range become isolated nodes.
  static Graph from_edge_list(std::span<const std::pair<NodeId, NodeId>> pairs,
                              std::optional<std::size_t> n = std::nullopt);

  /// Like from_edge_list, but the ids are arbitrary integers that get
  /// relabeled densely in ascending order. The original ids are kept as
  /// labels.
  static Graph from_labeled_edges(std::span<const std::pair<std::int64_t, std::int64_t>> pairs);

  /// Weighted construction. `node_weights` is empty or has n entries;
  /// `edge_weights` is empty or parallel to `pairs`. All weights must be > 0.
  static Graph from_weighted_edges(std::size_t n, std::span<const std::pair<NodeId, NodeId>> pairs,
                                   std::span<const double> node_weights,
                                   std::span<const double> edge_weights);

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  /// Edges in lexicographic (u, v) order.
  std::span<const NodePair> edges() const { return edges_; }

  std::size_t degree(NodeId v) const;
  std::span<const NodeId> neighbors(NodeId v) const;
  std::size_t max_degree() const;
  std::vector<std::size_t> degrees() const;

  bool contains(NodeId v) const { return v >= 0 && static_cast<std::size_t>(v) < node_count(); }
  bool has_edge(NodeId a, NodeId b) const;
  /// Position of `e` in edges(); throws GraphError if absent.
  std::size_t edge_index(NodePair e) const;

  bool is_weighted() const { return !node_weights_.empty() || !edge_weights_.empty(); }
  double node_weight(NodeId v) const;
  double edge_weight(NodePair e) const;

  bool has_labels() const { return !labels_.empty(); }
  /// Stored provenance label, or the decimal id when the graph has none.
  std::string label(NodeId v) const;
  std::span<const std::string> labels() const { return labels_; }
  /// Returns a copy carrying `labels` (one per node).
  Graph with_labels(std::vector<std::string> labels) const;

  /// True iff the graph is a single connected component. Throws on N = 0.
  bool is_connected() const;

  /// Subgraph induced by `keep`, relabeled densely: node i of the result is
  /// the i-th smallest id of `keep`. Labels are inherited from this graph
  /// (or set to the parent ids when this graph has none). Weights carry over.
  Graph induced_subgraph(std::span<const NodeId> keep) const;

  /// Copy with the given edges removed; the node set is unchanged.
  Graph without_edges(std::span<const NodePair> removed) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void check_node(NodeId v) const;
  static Graph build(std::size_t n, std::vector<NodePair> edges);

  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<NodePair> edges_;
  std::vector<double> node_weights_;
  std::vector<double> edge_weights_;  // parallel to edges_
  std::vector<std::string> labels_;
};

}  // namespace rmc
