#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "rmc/alignment.hpp"
#include "rmc/curvature.hpp"
#include "rmc/graph.hpp"

namespace rmc {

class ExperimentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  std::filesystem::path input_path;
  std::size_t intermediate_sample_size = 1000;
  std::size_t subgraph_size = 500;
  double deletion_probability = 0.01;
  std::size_t rounds = 10;
  std::uint64_t seed = 0;
  SignatureMode mode = SignatureMode::ricci;
  std::size_t max_iter = 100;

  /// Throws ExperimentError when the fields are inconsistent.
  void validate() const;
};

struct RoundResult {
  std::size_t round = 0;  // 1-based
  std::uint64_t seed = 0;
  std::size_t correct = 0;
  double percentage = 0.0;
  std::size_t g1_edges = 0;
  std::size_t g2_edges = 0;
  double total_cost = 0.0;
  double wall_seconds = 0.0;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::string library_version;
  std::size_t source_nodes = 0;
  std::size_t source_edges = 0;
  std::size_t sample_nodes = 0;
  std::size_t sample_edges = 0;
  std::size_t line_graph_nodes = 0;
  std::size_t line_graph_edges = 0;
  double preparation_seconds = 0.0;
  std::vector<RoundResult> rounds;
  double mean_percentage = 0.0;
};

/// Loads config.input_path as GraphML and runs run_alignment_experiment.
ExperimentReport run_ppi_experiment(const ExperimentConfig& config);

/// The line-graph alignment pipeline on an in-memory source graph:
///   1. random-walk sample of intermediate_sample_size nodes (master seed),
///   2. line graph of that sample, built once,
///   3. per round r (seed + r): random-walk sample G1 of subgraph_size nodes
///      from the line graph, G2 = G1 with edges deleted at the configured
///      probability, align G1 to G2, count fixed points.
ExperimentReport run_alignment_experiment(const Graph& source, const ExperimentConfig& config);

enum class ReportFormat { json, csv, markdown };

ReportFormat parse_report_format(std::string_view text);

/// Serializes the report. With include_timing = false the output is a pure
/// function of the inputs and the seed.
void write_report(const ExperimentReport& report, std::ostream& out, ReportFormat format,
                  bool include_timing = true);
void emit_report(const ExperimentReport& report, const std::filesystem::path& path,
                 ReportFormat format);

/// Hole identification on two copies of the lifted triangular torus.
struct TorusReport {
  /// Distinct node curvatures ascending; class k is named 'A' + k.
  std::vector<std::int64_t> class_values;
  std::vector<std::size_t> class_sizes;
  std::vector<char> node_class;  // per node, 'A', 'B', ...
  CurvatureHistogram histogram;
  /// Distinct Ricci-matrix rows, one per class, in class order.
  std::vector<std::vector<double>> row_forms;
  Assignment assignment;
  std::size_t hole_nodes = 0;        // class A nodes
  std::size_t hole_to_hole = 0;      // class A nodes mapped onto class A nodes
  std::size_t same_class_matches = 0;
  double hole_alignment_rate = 0.0;  // percent
};

TorusReport run_torus_experiment();

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Graphs for checking the curvature-Laplacian identity: the lifted torus,
/// L(K3), L(K1,3), then `random_graphs` seeded random connected graphs with
/// 2..max_n nodes.
std::vector<NamedGraph> curvature_laplacian_suite(std::size_t random_graphs, std::size_t max_n,
                                                  std::uint64_t seed);
void write_torus_report(const TorusReport& report, std::ostream& out);

}  // namespace rmc
