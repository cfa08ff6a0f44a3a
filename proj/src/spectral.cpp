#include "rmc/spectral.hpp"

#include "rmc/curvature.hpp"

namespace rmc {

IntMatrix laplacian(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.node_count());
  IntMatrix lap = IntMatrix::Zero(n, n);
  for (const NodePair& e : g.edges()) {
    lap(e.u, e.v) = -1;
    lap(e.v, e.u) = -1;
    ++lap(e.u, e.u);
    ++lap(e.v, e.v);
  }
  return lap;
}

IntVector labeled_signature_vector(const Graph& g, NodeId i) {
  const auto own = static_cast<std::int64_t>(g.degree(i));
  IntVector s = IntVector::Constant(static_cast<Eigen::Index>(g.node_count()), own);
  for (NodeId l : g.neighbors(i)) s(l) = static_cast<std::int64_t>(g.degree(l));
  return s;
}

std::int64_t curvature_laplacian_residual(const Graph& g, const IntMatrix& lap, NodeId i) {
  if (g.is_weighted()) {
    throw GraphError("the curvature-Laplacian identity is stated for unweighted graphs");
  }
  if (lap.rows() != static_cast<Eigen::Index>(g.node_count())) {
    throw GraphError("Laplacian does not match the graph");
  }
  std::int64_t ric = 0;
  for (NodeId w : g.neighbors(i)) ric += edge_curvature_unweighted(g, NodePair(i, w));
  const std::int64_t ls_i = lap.row(i).dot(labeled_signature_vector(g, i));
  return ric - ls_i;
}

std::int64_t curvature_laplacian_residual(const Graph& g, NodeId i) {
  return curvature_laplacian_residual(g, laplacian(g), i);
}

std::size_t count_curvature_laplacian_violations(const Graph& g) {
  const IntMatrix lap = laplacian(g);
  std::size_t violations = 0;
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    const auto i = static_cast<NodeId>(v);
    const auto d = static_cast<std::int64_t>(g.degree(i));
    if (curvature_laplacian_residual(g, lap, i) != 2 * d * (1 - d)) ++violations;
  }
  return violations;
}

}  // namespace rmc
