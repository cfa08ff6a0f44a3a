#include "rmc/alignment.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "rmc/curvature.hpp"

namespace rmc {

std::string_view to_string(SignatureMode mode) {
  return mode == SignatureMode::degree ? "degree" : "ricci";
}

SignatureMode parse_signature_mode(std::string_view text) {
  if (text == "degree" || text == "dmc") return SignatureMode::degree;
  if (text == "ricci" || text == "rmc") return SignatureMode::ricci;
  throw std::invalid_argument(fmt::format("unknown signature mode '{}'", text));
}

namespace {

SignatureMatrix build_rows(const Graph& g, std::size_t m, SignatureMode mode,
                           const std::vector<double>& feature) {
  if (m < g.max_degree()) {
    throw GraphError(fmt::format("signature width {} is below the maximum degree {}", m,
                                 g.max_degree()));
  }
  SignatureMatrix out;
  out.mode = mode;
  out.rows = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(g.node_count()),
                                   static_cast<Eigen::Index>(m));
  out.node_order.resize(g.node_count());

  std::vector<double> row;
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    const auto node = static_cast<NodeId>(v);
    out.node_order[v] = node;
    row.clear();
    for (NodeId w : g.neighbors(node)) row.push_back(feature[w]);
    std::sort(row.begin(), row.end());
    for (std::size_t k = 0; k < row.size(); ++k) {
      out.rows(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(k)) = row[k];
    }
  }
  return out;
}

}  // namespace

SignatureMatrix degree_matrix(const Graph& g, std::size_t m) {
  std::vector<double> deg;
  deg.reserve(g.node_count());
  for (std::size_t d : g.degrees()) deg.push_back(static_cast<double>(d));
  return build_rows(g, m, SignatureMode::degree, deg);
}

SignatureMatrix ricci_matrix(const Graph& g, std::size_t m) {
  return build_rows(g, m, SignatureMode::ricci, forman_curvature(g).node);
}

SignatureMatrix signature_matrix(const Graph& g, std::size_t m, SignatureMode mode) {
  return mode == SignatureMode::degree ? degree_matrix(g, m) : ricci_matrix(g, m);
}

std::size_t common_max_degree(const Graph& g1, const Graph& g2) {
  return std::max(g1.max_degree(), g2.max_degree());
}

CostMatrix cost_matrix(const SignatureMatrix& m1, const SignatureMatrix& m2) {
  if (m1.width() != m2.width()) {
    throw std::invalid_argument("signature matrices have different widths");
  }
  if (m1.mode != m2.mode) {
    throw std::invalid_argument("signature matrices use different modes");
  }
  const Eigen::Index rows = m1.rows.rows();
  const Eigen::Index cols = m2.rows.rows();
  CostMatrix cost(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      cost(i, j) = (m1.rows.row(i) - m2.rows.row(j)).norm();
    }
  }
  return cost;
}

Assignment align(const Graph& g1, const Graph& g2, SignatureMode mode) {
  if (g1.node_count() != g2.node_count()) {
    throw GraphError(fmt::format("cannot align graphs of {} and {} nodes", g1.node_count(),
                                 g2.node_count()));
  }
  const std::size_t m = common_max_degree(g1, g2);
  const SignatureMatrix s1 = signature_matrix(g1, m, mode);
  const SignatureMatrix s2 = signature_matrix(g2, m, mode);
  Assignment a = hungarian(cost_matrix(s1, s2));
  // Rows follow node ids in both matrices, so row/column indices are node ids.
  for (NodeId& target : a.mapping) target = s2.node_order[target];
  return a;
}

AlignmentScore score_alignment(const Assignment& a) {
  AlignmentScore score;
  for (std::size_t v = 0; v < a.mapping.size(); ++v) {
    if (a.mapping[v] == static_cast<NodeId>(v)) ++score.count;
  }
  if (!a.mapping.empty()) {
    score.percentage = 100.0 * static_cast<double>(score.count) / static_cast<double>(a.mapping.size());
  }
  return score;
}

namespace {

std::vector<std::vector<std::size_t>> neighbour_degree_lists(const Graph& g, NodeId v) {
  std::vector<std::vector<std::size_t>> lists;
  for (NodeId w : g.neighbors(v)) {
    std::vector<std::size_t> degs;
    for (NodeId x : g.neighbors(w)) degs.push_back(g.degree(x));
    std::sort(degs.begin(), degs.end());
    lists.push_back(std::move(degs));
  }
  return lists;
}

}  // namespace

bool are_nodes_equivalent(const Graph& g, NodeId u, NodeId v) {
  auto small = [&](NodeId x) {
    const std::size_t d = g.degree(x);
    return d >= 1 && d <= 3;
  };
  if (!small(u) || !small(v)) return false;

  // Some reordering of one list equals the other iff the sorted lists match.
  auto a = neighbour_degree_lists(g, u);
  auto b = neighbour_degree_lists(g, v);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

AlignmentScore score_alignment_geometric(const Assignment& a, const Graph& g) {
  AlignmentScore score;
  for (std::size_t v = 0; v < a.mapping.size(); ++v) {
    const auto node = static_cast<NodeId>(v);
    const NodeId target = a.mapping[v];
    if (target == node || (g.contains(target) && are_nodes_equivalent(g, node, target))) ++score.count;
  }
  if (!a.mapping.empty()) {
    score.percentage = 100.0 * static_cast<double>(score.count) / static_cast<double>(a.mapping.size());
  }
  return score;
}

void write_assignment_csv(const Assignment& a, std::ostream& out) {
  out << "g1_node,g2_node,row_cost\n";
  for (std::size_t v = 0; v < a.mapping.size(); ++v) {
    out << fmt::format("{},{},{}\n", v, a.mapping[v], a.row_costs[v]);
  }
}

}  // namespace rmc
