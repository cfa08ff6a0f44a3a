#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "rmc/graph.hpp"

namespace rmc {

struct LineGraphResult {
  Graph graph;
  /// origin[k] is the edge of the source graph that became node k.
  std::vector<NodePair> origin;
};

/// Nodes are the edges of `g` in lexicographic order; two are adjacent iff
/// the edges share an endpoint. Labels are "u-v" using the labels of `g`.
/// Throws GraphError for an edgeless graph.
LineGraphResult line_graph(const Graph& g);

/// Sum over nodes of C(deg, 2), the edge count of the line graph.
std::uint64_t edge_pair_count(const Graph& g);

/// `new_id,orig_u,orig_v` CSV with a header line.
void write_origin_csv(const LineGraphResult& lg, std::ostream& out);

}  // namespace rmc
