#pragma once

#include <Eigen/Core>

#include <vector>

#include "rmc/graph.hpp"

namespace rmc {

using CostMatrix = Eigen::MatrixXd;

/// Perfect assignment of rows to columns.
struct Assignment {
  std::vector<NodeId> mapping;    // row i -> column mapping[i]
  std::vector<double> row_costs;  // cost(i, mapping[i])
  double total_cost = 0.0;
};

/// Minimum-cost perfect assignment of a square cost matrix.
///
/// Among all optimal assignments the lexicographically smallest mapping is
/// returned: row 0 gets the lowest column it can take in some optimal
/// assignment, then row 1, and so on. Throws std::invalid_argument for a
/// non-square matrix or a non-finite entry.
Assignment hungarian(const CostMatrix& cost);

}  // namespace rmc
