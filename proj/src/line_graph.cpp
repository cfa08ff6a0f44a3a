#include "rmc/line_graph.hpp"

#include <ostream>

namespace rmc {

LineGraphResult line_graph(const Graph& g) {
  if (g.edge_count() == 0) {
    throw GraphError("the line graph of an edgeless graph is empty");
  }
  LineGraphResult out;
  out.origin.assign(g.edges().begin(), g.edges().end());

  // Each source node contributes a clique over its incident edges.
  std::vector<std::pair<NodeId, NodeId>> pairs;
  pairs.reserve(edge_pair_count(g));
  std::vector<NodeId> incident;
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    const auto center = static_cast<NodeId>(v);
    incident.clear();
    for (NodeId w : g.neighbors(center)) {
      incident.push_back(static_cast<NodeId>(g.edge_index(NodePair(center, w))));
    }
    for (std::size_t a = 0; a < incident.size(); ++a) {
      for (std::size_t b = a + 1; b < incident.size(); ++b) {
        pairs.emplace_back(incident[a], incident[b]);
      }
    }
  }

  std::vector<std::string> labels;
  labels.reserve(out.origin.size());
  for (const NodePair& e : out.origin) labels.push_back(g.label(e.u) + "-" + g.label(e.v));
  out.graph = Graph::from_edge_list(pairs, out.origin.size()).with_labels(std::move(labels));
  return out;
}

std::uint64_t edge_pair_count(const Graph& g) {
  std::uint64_t total = 0;
  for (std::uint64_t d : g.degrees()) {
    if (d >= 2) total += d * (d - 1) / 2;
  }
  return total;
}

void write_origin_csv(const LineGraphResult& lg, std::ostream& out) {
  out << "new_id,orig_u,orig_v\n";
  for (std::size_t k = 0; k < lg.origin.size(); ++k) {
    out << k << ',' << lg.origin[k].u << ',' << lg.origin[k].v << '\n';
  }
}

}  // namespace rmc
