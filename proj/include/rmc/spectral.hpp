#pragma once

#include <Eigen/Core>

#include <cstdint>

#include "rmc/graph.hpp"

namespace rmc {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// L = D - A as a dense integer matrix indexed by node id.
IntMatrix laplacian(const Graph& g);

/// Labeled signature vector of node i: entry l is deg(l) when {l, i} is an
/// edge and deg(i) otherwise (the slot l = i included).
IntVector labeled_signature_vector(const Graph& g, NodeId i);

/// Ric(i) - (L s)_i for the labeled signature vector s of i. For every
/// unweighted graph this equals 2 deg(i) (1 - deg(i)). Throws GraphError on a
/// weighted graph.
std::int64_t curvature_laplacian_residual(const Graph& g, NodeId i);

/// Same as above with a precomputed Laplacian, for sweeping every node.
std::int64_t curvature_laplacian_residual(const Graph& g, const IntMatrix& lap, NodeId i);

/// Checks the curvature-Laplacian identity on every node; returns the number
/// of nodes where it fails (0 means the identity holds everywhere).
std::size_t count_curvature_laplacian_violations(const Graph& g);

}  // namespace rmc
