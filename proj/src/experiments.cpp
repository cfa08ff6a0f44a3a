#include "rmc/experiments.hpp"

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <ostream>
#include <set>

#include "rmc/graph_io.hpp"
#include "rmc/line_graph.hpp"
#include "rmc/sampling.hpp"
#include "rmc/tessellation.hpp"
#include "rmc/version.hpp"

namespace rmc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

void ExperimentConfig::validate() const {
  if (subgraph_size == 0) throw ExperimentError("subgraph size must be positive");
  if (subgraph_size > intermediate_sample_size) {
    throw ExperimentError("subgraph size exceeds the intermediate sample size");
  }
  if (!(deletion_probability >= 0.0 && deletion_probability <= 1.0)) {
    throw ExperimentError("deletion probability must lie in [0, 1]");
  }
  if (rounds == 0) throw ExperimentError("at least one round is required");
}

ExperimentReport run_ppi_experiment(const ExperimentConfig& config) {
  config.validate();
  return run_alignment_experiment(load_graphml(config.input_path), config);
}

ExperimentReport run_alignment_experiment(const Graph& source, const ExperimentConfig& config) {
  config.validate();
  ExperimentReport report;
  report.config = config;
  report.library_version = kVersion;
  report.source_nodes = source.node_count();
  report.source_edges = source.edge_count();

  const auto prep_start = Clock::now();
  if (config.intermediate_sample_size > source.node_count()) {
    throw ExperimentError(fmt::format("source graph has {} nodes, fewer than the requested {}",
                                      source.node_count(), config.intermediate_sample_size));
  }
  RngHandle master(config.seed);
  const Graph sample =
      random_walk_sample(source, config.intermediate_sample_size, master, config.max_iter);
  report.sample_nodes = sample.node_count();
  report.sample_edges = sample.edge_count();
  if (sample.edge_count() == 0) {
    throw ExperimentError("intermediate sample has no edges; its line graph is empty");
  }
  const Graph universe = line_graph(sample).graph;
  report.line_graph_nodes = universe.node_count();
  report.line_graph_edges = universe.edge_count();
  report.preparation_seconds = seconds_since(prep_start);

  for (std::size_t r = 1; r <= config.rounds; ++r) {
    const auto round_start = Clock::now();
    RoundResult result;
    result.round = r;
    result.seed = config.seed + r;
    if (config.subgraph_size > universe.node_count()) {
      throw ExperimentError(fmt::format("round {}: line graph has {} nodes, fewer than {}", r,
                                        universe.node_count(), config.subgraph_size));
    }
    RngHandle rng(result.seed);
    const Graph g1 = random_walk_sample(universe, config.subgraph_size, rng, config.max_iter);
    if (g1.node_count() != config.subgraph_size) {
      throw ExperimentError(fmt::format("round {}: random walk stopped at {} of {} nodes", r,
                                        g1.node_count(), config.subgraph_size));
    }
    const Graph g2 = delete_edges_randomly(g1, config.deletion_probability, rng);
    const Assignment a = align(g1, g2, config.mode);
    const AlignmentScore score = score_alignment(a);

    result.correct = score.count;
    result.percentage = score.percentage;
    result.g1_edges = g1.edge_count();
    result.g2_edges = g2.edge_count();
    result.total_cost = a.total_cost;
    result.wall_seconds = seconds_since(round_start);
    report.rounds.push_back(result);
  }

  double sum = 0.0;
  for (const RoundResult& r : report.rounds) sum += r.percentage;
  report.mean_percentage = sum / static_cast<double>(report.rounds.size());
  return report;
}

ReportFormat parse_report_format(std::string_view text) {
  if (text == "json") return ReportFormat::json;
  if (text == "csv") return ReportFormat::csv;
  if (text == "markdown" || text == "md") return ReportFormat::markdown;
  throw std::invalid_argument(fmt::format("unknown report format '{}'", text));
}

void write_report(const ExperimentReport& report, std::ostream& out, ReportFormat format,
                  bool include_timing) {
  switch (format) {
    case ReportFormat::csv:
      out << "round,count,percentage\n";
      for (const RoundResult& r : report.rounds) {
        out << fmt::format("{},{},{}\n", r.round, r.correct, r.percentage);
      }
      return;
    case ReportFormat::markdown:
      out << "Round | Absolute Node Count | Percentage\n--- | --- | ---\n";
      for (const RoundResult& r : report.rounds) {
        out << fmt::format("{} | {} | {}%\n", r.round, r.correct, r.percentage);
      }
      out << fmt::format("\nMean: {:.2f}%\n", report.mean_percentage);
      return;
    case ReportFormat::json:
      break;
  }

  const ExperimentConfig& c = report.config;
  nlohmann::ordered_json doc;
  doc["library_version"] = report.library_version;
  doc["config"] = {
      {"input_path", c.input_path.string()},
      {"intermediate_sample_size", c.intermediate_sample_size},
      {"subgraph_size", c.subgraph_size},
      {"deletion_probability", c.deletion_probability},
      {"rounds", c.rounds},
      {"seed", c.seed},
      {"mode", std::string(to_string(c.mode))},
      {"max_iter", c.max_iter},
  };
  doc["graphs"] = {
      {"source_nodes", report.source_nodes},         {"source_edges", report.source_edges},
      {"sample_nodes", report.sample_nodes},         {"sample_edges", report.sample_edges},
      {"line_graph_nodes", report.line_graph_nodes}, {"line_graph_edges", report.line_graph_edges},
  };
  if (include_timing) doc["preparation_seconds"] = report.preparation_seconds;
  doc["rounds"] = nlohmann::ordered_json::array();
  for (const RoundResult& r : report.rounds) {
    nlohmann::ordered_json row = {
        {"round", r.round},           {"seed", r.seed},
        {"correct", r.correct},       {"percentage", r.percentage},
        {"g1_edges", r.g1_edges},     {"g2_edges", r.g2_edges},
        {"total_cost", r.total_cost},
    };
    if (include_timing) row["wall_seconds"] = r.wall_seconds;
    doc["rounds"].push_back(std::move(row));
  }
  doc["mean_percentage"] = report.mean_percentage;
  out << doc.dump(2) << '\n';
}

void emit_report(const ExperimentReport& report, const std::filesystem::path& path,
                 ReportFormat format) {
  std::ofstream out(path);
  if (!out) throw ExperimentError("cannot open report file " + path.string());
  write_report(report, out, format);
  out.flush();
  if (!out) throw ExperimentError("failed writing report file " + path.string());
}

TorusReport run_torus_experiment() {
  const Graph torus = lift_to_3d(triangular_ring_2d());
  const std::vector<std::int64_t> ric = node_curvatures_exact(torus);

  TorusReport report;
  report.histogram = curvature_distribution(torus);
  std::set<std::int64_t> distinct(ric.begin(), ric.end());
  report.class_values.assign(distinct.begin(), distinct.end());
  report.class_sizes.assign(report.class_values.size(), 0);
  report.node_class.resize(torus.node_count());
  for (std::size_t v = 0; v < torus.node_count(); ++v) {
    const auto k = static_cast<std::size_t>(
        std::lower_bound(report.class_values.begin(), report.class_values.end(), ric[v]) -
        report.class_values.begin());
    report.node_class[v] = static_cast<char>('A' + k);
    ++report.class_sizes[k];
  }

  const SignatureMatrix rows = ricci_matrix(torus, torus.max_degree());
  std::map<char, std::set<std::vector<double>>> forms;
  for (std::size_t v = 0; v < torus.node_count(); ++v) {
    const auto row = rows.rows.row(static_cast<Eigen::Index>(v));
    forms[report.node_class[v]].insert(std::vector<double>(row.begin(), row.end()));
  }
  for (const auto& [cls, set] : forms) {
    report.row_forms.insert(report.row_forms.end(), set.begin(), set.end());
  }

  // The second copy is an independent construction of the same torus.
  report.assignment = align(torus, lift_to_3d(triangular_ring_2d()), SignatureMode::ricci);
  for (std::size_t v = 0; v < torus.node_count(); ++v) {
    const char from = report.node_class[v];
    const char to = report.node_class[report.assignment.mapping[v]];
    if (from == to) ++report.same_class_matches;
    if (from == 'A') {
      ++report.hole_nodes;
      if (to == 'A') ++report.hole_to_hole;
    }
  }
  report.hole_alignment_rate =
      report.hole_nodes == 0 ? 0.0 : 100.0 * double(report.hole_to_hole) / double(report.hole_nodes);
  return report;
}

void write_torus_report(const TorusReport& report, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["classes"] = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < report.class_values.size(); ++k) {
    doc["classes"].push_back({{"name", std::string(1, static_cast<char>('A' + k))},
                              {"curvature", report.class_values[k]},
                              {"size", report.class_sizes[k]}});
  }
  doc["row_forms"] = report.row_forms;
  doc["histogram"] = nlohmann::ordered_json::array();
  for (const auto& [value, count] : report.histogram) {
    doc["histogram"].push_back({{"value", value}, {"count", count}});
  }
  doc["hole_nodes"] = report.hole_nodes;
  doc["hole_to_hole"] = report.hole_to_hole;
  doc["hole_alignment_rate"] = report.hole_alignment_rate;
  doc["same_class_matches"] = report.same_class_matches;
  doc["total_cost"] = report.assignment.total_cost;
  out << doc.dump(2) << '\n';
}

std::vector<NamedGraph> curvature_laplacian_suite(std::size_t random_graphs, std::size_t max_n,
                                                  std::uint64_t seed) {
  if (max_n < 2) throw ExperimentError("random graphs need max_n >= 2");
  const std::vector<std::pair<NodeId, NodeId>> triangle = {{0, 1}, {1, 2}, {0, 2}};
  const std::vector<std::pair<NodeId, NodeId>> claw = {{0, 1}, {0, 2}, {0, 3}};

  std::vector<NamedGraph> suite;
  suite.push_back({"lifted-triangular-torus", lift_to_3d(triangular_ring_2d())});
  suite.push_back({"line-graph-K3", line_graph(Graph::from_edge_list(triangle)).graph});
  suite.push_back({"line-graph-K1,3", line_graph(Graph::from_edge_list(claw)).graph});

  RngHandle rng(seed);
  for (std::size_t k = 0; k < random_graphs; ++k) {
    const std::size_t n = 2 + rng.below(max_n - 1);
    const double density = 0.5 * rng.unit();
    suite.push_back({fmt::format("random-{}-n{}", k, n), random_connected_graph(n, density, rng)});
  }
  return suite;
}

}  // namespace rmc
