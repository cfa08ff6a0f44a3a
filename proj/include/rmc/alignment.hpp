#pragma once

#include <Eigen/Core>

#include <iosfwd>
#include <string_view>
#include <vector>

#include "rmc/graph.hpp"
#include "rmc/hungarian.hpp"

namespace rmc {

/// degree: DMC rows of neighbour degrees. ricci: RMC rows of neighbour
/// Forman-Ricci node curvatures.
enum class SignatureMode { degree, ricci };

std::string_view to_string(SignatureMode mode);
/// Accepts "degree"/"dmc" and "ricci"/"rmc".
SignatureMode parse_signature_mode(std::string_view text);

/// N x m matrix: row i holds the features of node_order[i]'s neighbours,
/// sorted ascending and zero-padded on the right.
struct SignatureMatrix {
  Eigen::MatrixXd rows;
  std::vector<NodeId> node_order;
  SignatureMode mode = SignatureMode::degree;

  std::size_t width() const { return static_cast<std::size_t>(rows.cols()); }
};

/// Throws GraphError when m < g.max_degree().
SignatureMatrix degree_matrix(const Graph& g, std::size_t m);
SignatureMatrix ricci_matrix(const Graph& g, std::size_t m);
SignatureMatrix signature_matrix(const Graph& g, std::size_t m, SignatureMode mode);

std::size_t common_max_degree(const Graph& g1, const Graph& g2);

/// Pairwise Euclidean distances between rows. Throws std::invalid_argument
/// when widths or modes differ.
CostMatrix cost_matrix(const SignatureMatrix& m1, const SignatureMatrix& m2);

/// Signature matrices with the common maximum degree, Euclidean cost,
/// then the assignment. Requires equal node counts.
Assignment align(const Graph& g1, const Graph& g2, SignatureMode mode);

struct AlignmentScore {
  std::size_t count = 0;
  double percentage = 0.0;
};

/// Counts fixed points (node v mapped to node v), i.e. correct matches by id.
AlignmentScore score_alignment(const Assignment& a);

/// Geometric equivalence: both nodes have degree 1..3 and their lists of
/// sorted neighbour-of-neighbour degrees agree up to reordering.
bool are_nodes_equivalent(const Graph& g, NodeId u, NodeId v);

/// Counts matches that are either fixed points or geometrically equivalent
/// within `g` (the graph the mapping's domain belongs to).
AlignmentScore score_alignment_geometric(const Assignment& a, const Graph& g);

/// `g1_node,g2_node,row_cost` CSV with a header line.
void write_assignment_csv(const Assignment& a, std::ostream& out);

}  // namespace rmc
