// Shared test graphs and brute-force oracles. The oracles work from raw edge
// lists and adjacency matrices so they stay independent of the library paths
// they check.
#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "rmc/graph.hpp"
#include "rmc/sampling.hpp"

namespace rmc::testing {

using EdgeList = std::vector<std::pair<NodeId, NodeId>>;

inline Graph make_graph(const EdgeList& edges, std::optional<std::size_t> n = std::nullopt) {
  return Graph::from_edge_list(edges, n);
}

inline Graph path3() { return make_graph({{0, 1}, {1, 2}}); }
inline Graph k2() { return make_graph({{0, 1}}); }
inline Graph k3() { return make_graph({{0, 1}, {1, 2}, {0, 2}}); }
inline Graph claw() { return make_graph({{0, 1}, {0, 2}, {0, 3}}); }
inline Graph k4() { return make_graph({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

// The worked row-vector example: O has neighbours A (degree 1), B (degree 4)
// and C (degree 5); B's edges have curvatures -5, -4, -4, -7 and C's node
// curvature is -27. Reconstructed from those numbers.
namespace worked {
inline constexpr NodeId O = 0, A = 1, B = 2, C = 3, X = 4, Y = 5, Z = 6;
}
inline Graph worked_example_graph() {
  using namespace worked;
  return make_graph({{O, A}, {O, B}, {O, C}, {B, C}, {B, X}, {B, Y}, {C, X}, {C, Y}, {C, Z}});
}

// Reference triangulated ring, 1-based labels as drawn.
inline std::vector<std::pair<std::int64_t, std::int64_t>> ring_edges_one_based() {
  return {{1, 2},   {1, 6},   {1, 7},   {1, 8},   {1, 9},   {2, 9},   {2, 10},  {2, 11},  {2, 3},
          {3, 11},  {3, 12},  {3, 13},  {3, 4},   {4, 13},  {4, 14},  {4, 15},  {4, 5},   {5, 15},
          {5, 16},  {5, 17},  {5, 6},   {6, 17},  {6, 18},  {6, 7},   {7, 8},   {7, 18},  {8, 9},
          {9, 10},  {10, 11}, {11, 12}, {12, 13}, {13, 14}, {14, 15}, {15, 16}, {16, 17}, {17, 18}};
}

// Lifted ring built directly from the raw list: node k (1-based) -> k - 1,
// its copy -> k + 17, plus the vertical edges.
inline EdgeList lifted_ring_edges() {
  EdgeList out;
  for (auto [a, b] : ring_edges_one_based()) {
    out.emplace_back(NodeId(a - 1), NodeId(b - 1));
    out.emplace_back(NodeId(a + 17), NodeId(b + 17));
  }
  for (NodeId v = 0; v < 18; ++v) out.emplace_back(v, v + 18);
  return out;
}

// Dense 0/1 adjacency matrix from a raw edge list.
inline Eigen::MatrixXi adjacency_of(const EdgeList& edges, std::size_t n) {
  Eigen::MatrixXi adj = Eigen::MatrixXi::Zero(Eigen::Index(n), Eigen::Index(n));
  for (auto [a, b] : edges) {
    adj(a, b) = 1;
    adj(b, a) = 1;
  }
  return adj;
}

inline EdgeList edges_of(const Graph& g) {
  EdgeList out;
  for (const NodePair& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

// Node curvature straight from the adjacency matrix: sum over neighbours w of
// (2 - deg(v) - deg(w)).
inline std::vector<std::int64_t> oracle_node_curvature(const Eigen::MatrixXi& adj) {
  const Eigen::VectorXi deg = adj.rowwise().sum();
  std::vector<std::int64_t> ric(std::size_t(adj.rows()), 0);
  for (Eigen::Index v = 0; v < adj.rows(); ++v) {
    for (Eigen::Index w = 0; w < adj.cols(); ++w) {
      if (adj(v, w)) ric[std::size_t(v)] += 2 - deg(v) - deg(w);
    }
  }
  return ric;
}

// Minimum assignment cost by enumerating every permutation.
inline double brute_force_assignment(const Eigen::MatrixXd& cost) {
  std::vector<int> perm(std::size_t(cost.rows()));
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double total = 0.0;
    for (std::size_t i = 0; i < perm.size(); ++i) total += cost(Eigen::Index(i), perm[i]);
    best = std::min(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Lexicographically smallest optimal permutation, by enumeration.
inline std::vector<int> brute_force_lex_assignment(const Eigen::MatrixXd& cost) {
  const double best = brute_force_assignment(cost);
  std::vector<int> perm(std::size_t(cost.rows()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    double total = 0.0;
    for (std::size_t i = 0; i < perm.size(); ++i) total += cost(Eigen::Index(i), perm[i]);
    if (total <= best + 1e-9) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {};
}

// Number of unordered pairs of distinct edges sharing an endpoint.
inline std::size_t brute_force_adjacent_edge_pairs(const EdgeList& edges) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto [a, b] = edges[i];
      const auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) ++count;
    }
  }
  return count;
}

// Isomorphism by trying every node permutation (small graphs only).
inline bool brute_force_isomorphic(const Graph& g, const Graph& h) {
  if (g.node_count() != h.node_count() || g.edge_count() != h.edge_count()) return false;
  std::vector<NodeId> perm(g.node_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const NodePair& e : g.edges()) {
      if (!h.has_edge(perm[e.u], perm[e.v])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline Eigen::MatrixXd random_integer_matrix(std::size_t n, int max_value, RngHandle& rng) {
  Eigen::MatrixXd m{Eigen::Index(n), Eigen::Index(n)};
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = double(rng.below(std::size_t(max_value) + 1));
  }
  return m;
}

// Arbitrary (possibly disconnected) random graph.
inline Graph random_graph(std::size_t n, double p, RngHandle& rng) {
  EdgeList edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (rng.unit() < p) edges.emplace_back(NodeId(a), NodeId(b));
    }
  }
  return make_graph(edges, n);
}

}  // namespace rmc::testing
