#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "rmc/graph.hpp"

namespace rmc {

/// Forman-Ricci curvature of every edge and node of one graph.
/// `edge` is parallel to Graph::edges(); `node` is indexed by node id and
/// holds the sum of the incident edge curvatures (0 for isolated nodes).
struct CurvatureMap {
  std::vector<double> edge;
  std::vector<double> node;
};

/// 2 - deg(u) - deg(v). Requires an unweighted graph.
std::int64_t edge_curvature_unweighted(const Graph& g, NodePair e);

/// Weighted Forman-Ricci curvature
///
///   Ric(e) = w_e * ( w_u/w_e + w_v/w_e
///                    - sum_{f ~ u} w_u / sqrt(w_e w_f)
///                    - sum_{f ~ v} w_v / sqrt(w_e w_f) )
///
/// where both sums run over every edge incident to the endpoint, e included,
/// so that unit weights give exactly 2 - deg(u) - deg(v).
double edge_curvature_weighted(const Graph& g, NodePair e);

/// Curvature of `v`: sum of incident edge curvatures, weighted when the graph is.
double node_curvature(const Graph& g, NodeId v);

CurvatureMap forman_curvature(const Graph& g);

/// Integer node curvatures for unweighted graphs; throws GraphError otherwise.
std::vector<std::int64_t> node_curvatures_exact(const Graph& g);

using CurvatureHistogram = std::vector<std::pair<double, std::size_t>>;

/// Node-curvature histogram, ascending by value.
CurvatureHistogram curvature_distribution(const Graph& g);

/// `value,count` CSV with a header line.
void write_histogram_csv(const CurvatureHistogram& hist, std::ostream& out);

}  // namespace rmc
