#include "rmc/curvature.hpp"

#include <fmt/format.h>

#include <cmath>
#include <map>
#include <ostream>

namespace rmc {

namespace {

void require_unweighted(const Graph& g) {
  if (g.is_weighted()) {
    throw GraphError("operation requires an unweighted graph");
  }
}

// sum over edges f incident to `endpoint` of 1 / sqrt(w_e * w_f)
double incident_sum(const Graph& g, NodeId endpoint, double w_e) {
  double sum = 0.0;
  for (NodeId w : g.neighbors(endpoint)) {
    sum += 1.0 / std::sqrt(w_e * g.edge_weight(NodePair(endpoint, w)));
  }
  return sum;
}

}  // namespace

std::int64_t edge_curvature_unweighted(const Graph& g, NodePair e) {
  require_unweighted(g);
  g.edge_index(e);
  return 2 - static_cast<std::int64_t>(g.degree(e.u)) - static_cast<std::int64_t>(g.degree(e.v));
}

double edge_curvature_weighted(const Graph& g, NodePair e) {
  const double w_e = g.edge_weight(e);
  const double w_u = g.node_weight(e.u);
  const double w_v = g.node_weight(e.v);
  if (!(w_e > 0.0) || !(w_u > 0.0) || !(w_v > 0.0)) {
    throw GraphError("Forman curvature needs strictly positive weights");
  }
  return w_e * (w_u / w_e + w_v / w_e - w_u * incident_sum(g, e.u, w_e) -
                w_v * incident_sum(g, e.v, w_e));
}

double node_curvature(const Graph& g, NodeId v) {
  double sum = 0.0;
  for (NodeId w : g.neighbors(v)) {
    const NodePair e(v, w);
    sum += g.is_weighted() ? edge_curvature_weighted(g, e)
                           : static_cast<double>(edge_curvature_unweighted(g, e));
  }
  return sum;
}

CurvatureMap forman_curvature(const Graph& g) {
  CurvatureMap out;
  out.edge.reserve(g.edge_count());
  out.node.assign(g.node_count(), 0.0);
  if (!g.is_weighted()) {
    const auto exact = node_curvatures_exact(g);
    for (const NodePair& e : g.edges()) {
      out.edge.push_back(static_cast<double>(2 - static_cast<std::int64_t>(g.degree(e.u)) -
                                             static_cast<std::int64_t>(g.degree(e.v))));
    }
    for (std::size_t v = 0; v < exact.size(); ++v) out.node[v] = static_cast<double>(exact[v]);
    return out;
  }
  for (const NodePair& e : g.edges()) {
    const double ric = edge_curvature_weighted(g, e);
    out.edge.push_back(ric);
    out.node[e.u] += ric;
    out.node[e.v] += ric;
  }
  return out;
}

std::vector<std::int64_t> node_curvatures_exact(const Graph& g) {
  require_unweighted(g);
  std::vector<std::int64_t> ric(g.node_count(), 0);
  for (const NodePair& e : g.edges()) {
    const std::int64_t c = 2 - static_cast<std::int64_t>(g.degree(e.u)) -
                           static_cast<std::int64_t>(g.degree(e.v));
    ric[e.u] += c;
    ric[e.v] += c;
  }
  return ric;
}

CurvatureHistogram curvature_distribution(const Graph& g) {
  std::map<double, std::size_t> counts;
  for (double value : forman_curvature(g).node) ++counts[value];
  return {counts.begin(), counts.end()};
}

void write_histogram_csv(const CurvatureHistogram& hist, std::ostream& out) {
  out << "value,count\n";
  for (const auto& [value, count] : hist) out << fmt::format("{},{}\n", value, count);
}

}  // namespace rmc
