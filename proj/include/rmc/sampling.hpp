#pragma once

#include <cstdint>
#include <random>

#include "rmc/graph.hpp"

namespace rmc {

/// Seeded generator passed explicitly to every randomized operation. One
/// handle must not be shared between threads.
class RngHandle {
 public:
  explicit RngHandle(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }
  /// Uniform integer in [0, bound).
  std::size_t below(std::size_t bound);
  /// Uniform real in [0, 1).
  double unit();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Random-walk sample of `size` distinct nodes, returned as the induced
/// subgraph (node i of the result is the i-th smallest sampled id).
///
/// The walk starts at a uniform node and steps to a uniform neighbour (or a
/// uniform node when the current one is isolated). After `max_iter`
/// consecutive steps without a new node it jumps to a uniform unvisited node.
Graph random_walk_sample(const Graph& g, std::size_t size, RngHandle& rng,
                         std::size_t max_iter = 100);

/// Removes each edge independently with probability p.
Graph delete_edges_randomly(const Graph& g, double p, RngHandle& rng);

/// Random connected graph on n nodes: a uniform random recursive tree plus
/// every other pair independently with probability `extra_edge_p`.
Graph random_connected_graph(std::size_t n, double extra_edge_p, RngHandle& rng);

/// Preferential-attachment graph (Barabasi-Albert, `attach` edges per new
/// node), used as a heavy-tailed stand-in for interaction networks.
Graph preferential_attachment_graph(std::size_t n, std::size_t attach, RngHandle& rng);

}  // namespace rmc
