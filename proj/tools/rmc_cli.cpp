// rmc: command-line front end for curvature-based graph alignment.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <iostream>

#include "rmc/alignment.hpp"
#include "rmc/curvature.hpp"
#include "rmc/experiments.hpp"
#include "rmc/graph_io.hpp"
#include "rmc/line_graph.hpp"
#include "rmc/spectral.hpp"
#include "rmc/tessellation.hpp"
#include "rmc/version.hpp"

namespace {

// Writes to `path`, or stdout when the path is empty or "-".
template <typename Fn>
void with_output(const std::string& path, Fn&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write(out);
}

int run_ppi(rmc::ExperimentConfig config, const std::string& out_path, const std::string& format,
            const std::string& mode) {
  config.mode = rmc::parse_signature_mode(mode);
  const rmc::ReportFormat fmt_kind = rmc::parse_report_format(format);
  const rmc::ExperimentReport report = rmc::run_ppi_experiment(config);

  for (const auto& r : report.rounds) {
    std::cerr << fmt::format("round {:>2}: {} / {} ({}%) in {:.2f}s\n", r.round, r.correct,
                             config.subgraph_size, r.percentage, r.wall_seconds);
  }
  std::cerr << fmt::format("mean: {:.2f}%\n", report.mean_percentage);
  if (out_path.empty() || out_path == "-") {
    rmc::write_report(report, std::cout, fmt_kind);
  } else {
    rmc::emit_report(report, out_path, fmt_kind);
  }
  return 0;
}

int run_torus(const std::string& out_path, const std::string& histogram_path) {
  const rmc::TorusReport report = rmc::run_torus_experiment();
  with_output(out_path, [&](std::ostream& out) { rmc::write_torus_report(report, out); });
  if (!histogram_path.empty()) {
    with_output(histogram_path, [&](std::ostream& out) { rmc::write_histogram_csv(report.histogram, out); });
  }
  std::cerr << fmt::format("hole nodes aligned to hole nodes: {} / {}\n", report.hole_to_hole,
                           report.hole_nodes);
  return report.hole_to_hole == report.hole_nodes ? 0 : 1;
}

int run_verify_cle(std::size_t random_graphs, std::size_t max_n, std::uint64_t seed,
                   const std::vector<std::string>& extra_graphs) {
  auto suite = rmc::curvature_laplacian_suite(random_graphs, max_n, seed);
  for (const std::string& path : extra_graphs) suite.push_back({path, rmc::load_graph(path)});

  std::size_t failed = 0;
  for (const auto& [name, graph] : suite) {
    const std::size_t violations = rmc::count_curvature_laplacian_violations(graph);
    std::cout << fmt::format("{} {} (n={}, m={}, violations={})\n", violations == 0 ? "PASS" : "FAIL",
                             name, graph.node_count(), graph.edge_count(), violations);
    if (violations != 0) ++failed;
  }
  std::cout << fmt::format("{} / {} graphs satisfy the identity\n", suite.size() - failed, suite.size());
  return failed == 0 ? 0 : 1;
}

int run_align(const std::string& mode, const std::string& g1_path, const std::string& g2_path,
              const std::string& out_path) {
  const rmc::Graph g1 = rmc::load_graph(g1_path);
  const rmc::Graph g2 = rmc::load_graph(g2_path);
  const rmc::Assignment a = rmc::align(g1, g2, rmc::parse_signature_mode(mode));
  with_output(out_path, [&](std::ostream& out) { rmc::write_assignment_csv(a, out); });
  const rmc::AlignmentScore score = rmc::score_alignment(a);
  std::cerr << fmt::format("total cost {}; {} fixed points ({}%)\n", a.total_cost, score.count,
                           score.percentage);
  return 0;
}

// `ppi --config FILE` becomes the equivalent flags, inserted ahead of the
// flags given on the command line so that those take precedence.
std::vector<std::string> expand_ppi_config(std::vector<std::string> args) {
  const auto sub = std::find(args.begin(), args.end(), "ppi");
  if (sub == args.end()) return args;
  const auto sub_pos = sub - args.begin();

  std::string path;
  for (auto it = sub + 1; it != args.end(); ++it) {
    if (*it == "--config" && it + 1 != args.end()) {
      path = *(it + 1);
      args.erase(it, it + 2);
      break;
    }
    if (it->rfind("--config=", 0) == 0) {
      path = it->substr(9);
      args.erase(it);
      break;
    }
  }
  if (path.empty()) return args;

  std::vector<std::string> flags;
  for (const CLI::ConfigItem& item : CLI::ConfigBase().from_file(path)) {
    if (!item.parents.empty() && item.parents != std::vector<std::string>{"ppi"}) {
      throw CLI::ConfigError("unexpected section in " + path + ": " + item.fullname());
    }
    std::string name = item.name;
    std::replace(name.begin(), name.end(), '_', '-');
    flags.push_back("--" + name);
    flags.insert(flags.end(), item.inputs.begin(), item.inputs.end());
  }
  args.insert(args.begin() + sub_pos + 1, flags.begin(), flags.end());
  return args;
}

rmc::Tiling parse_tiling(const std::string& name) {
  if (name == "triangular") return rmc::Tiling::triangular;
  if (name == "square") return rmc::Tiling::square;
  if (name == "mixed") return rmc::Tiling::mixed;
  throw std::invalid_argument("unknown tiling " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ricci and degree matrix comparison for graph alignment"};
  app.set_version_flag("--version", std::string(rmc::kVersion));
  app.require_subcommand(1);

  // ppi
  rmc::ExperimentConfig ppi_config;
  std::string ppi_out;
  std::string ppi_format = "json";
  std::string ppi_mode = "rmc";
  std::string ppi_config_path;
  auto* ppi = app.add_subcommand("ppi", "Line-graph alignment experiment on a GraphML network");
  ppi->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  ppi->add_option("--config", ppi_config_path, "key=value file mirroring these flags (flags win)");
  ppi->add_option("--input", ppi_config.input_path, "GraphML input")->required();
  ppi->add_option("--rounds", ppi_config.rounds, "Alignment rounds")->capture_default_str();
  ppi->add_option("--p", ppi_config.deletion_probability, "Edge deletion probability")
      ->capture_default_str();
  ppi->add_option("--size", ppi_config.subgraph_size, "Nodes per aligned subgraph")
      ->capture_default_str();
  ppi->add_option("--intermediate", ppi_config.intermediate_sample_size,
                  "Nodes in the sample whose line graph is taken")
      ->capture_default_str();
  ppi->add_option("--seed", ppi_config.seed, "Master seed")->capture_default_str();
  ppi->add_option("--max-iter", ppi_config.max_iter, "Stagnant walk steps before a jump")
      ->capture_default_str();
  ppi->add_option("--mode", ppi_mode, "rmc or dmc")->capture_default_str();
  ppi->add_option("--out", ppi_out, "Report path (stdout when omitted)");
  ppi->add_option("--format", ppi_format, "json, csv or markdown")->capture_default_str();

  // torus
  std::string torus_out;
  std::string torus_hist;
  auto* torus = app.add_subcommand("torus", "Hole identification on the lifted triangular torus");
  torus->add_option("--out", torus_out, "JSON report path (stdout when omitted)");
  torus->add_option("--histogram", torus_hist, "Curvature histogram CSV path");

  // verify-cle
  std::size_t cle_random = 100;
  std::size_t cle_max_n = 30;
  std::uint64_t cle_seed = 0;
  std::vector<std::string> cle_graphs;
  auto* cle = app.add_subcommand("verify-cle", "Check the curvature-Laplacian identity");
  cle->add_option("--random-graphs", cle_random, "Random connected graphs")->capture_default_str();
  cle->add_option("--max-n", cle_max_n, "Largest random graph")->capture_default_str();
  cle->add_option("--seed", cle_seed, "Seed")->capture_default_str();
  cle->add_option("--graph", cle_graphs, "Extra graph files to check");

  // align
  std::string align_mode = "rmc";
  std::string align_g1;
  std::string align_g2;
  std::string align_out;
  auto* align = app.add_subcommand("align", "Align two graphs with DMC or RMC");
  align->add_option("--mode", align_mode, "dmc or rmc")
      ->check(CLI::IsMember({"dmc", "rmc", "degree", "ricci"}))
      ->capture_default_str();
  align->add_option("--g1", align_g1, "First graph (edge list or GraphML)")->required();
  align->add_option("--g2", align_g2, "Second graph (edge list or GraphML)")->required();
  align->add_option("--out", align_out, "Assignment CSV (stdout when omitted)");

  // curvature
  std::string curv_graph;
  std::string curv_out;
  auto* curvature = app.add_subcommand("curvature", "Node-curvature histogram of a graph");
  curvature->add_option("--graph", curv_graph, "Graph file")->required();
  curvature->add_option("--out", curv_out, "value,count CSV (stdout when omitted)");

  // tessellate
  std::string tess_tiling = "triangular";
  bool tess_lifted = false;
  bool tess_prisms = false;
  std::size_t tess_side = 4;
  std::string tess_out;
  std::string tess_json;
  auto* tess = app.add_subcommand("tessellate", "Generate a tiled ring or torus");
  tess->add_option("--tiling", tess_tiling, "triangular, square or mixed")
      ->check(CLI::IsMember({"triangular", "square", "mixed"}))
      ->capture_default_str();
  tess->add_flag("--lifted", tess_lifted, "Lift to two connected layers");
  tess->add_flag("--prisms", tess_prisms, "Triangulate the prisms (lifted triangular only)");
  tess->add_option("--side", tess_side, "Board side for the square frame")->capture_default_str();
  tess->add_option("--out", tess_out, "Edge-list path (stdout when omitted)");
  tess->add_option("--json", tess_json, "Coordinates JSON path");

  // line-graph
  std::string lg_graph;
  std::string lg_out;
  std::string lg_origin;
  auto* lg = app.add_subcommand("line-graph", "Line graph of a graph");
  lg->add_option("--graph", lg_graph, "Graph file")->required();
  lg->add_option("--out", lg_out, "Edge-list path (stdout when omitted)");
  lg->add_option("--origin", lg_origin, "new_id,orig_u,orig_v CSV path");

  try {
    std::vector<std::string> args = expand_ppi_config({argv + 1, argv + argc});
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*ppi) return run_ppi(ppi_config, ppi_out, ppi_format, ppi_mode);
    if (*torus) return run_torus(torus_out, torus_hist);
    if (*cle) return run_verify_cle(cle_random, cle_max_n, cle_seed, cle_graphs);
    if (*align) return run_align(align_mode, align_g1, align_g2, align_out);
    if (*curvature) {
      const auto hist = rmc::curvature_distribution(rmc::load_graph(curv_graph));
      with_output(curv_out, [&](std::ostream& out) { rmc::write_histogram_csv(hist, out); });
      return 0;
    }
    if (*tess) {
      const rmc::Tessellation t = rmc::build_torus(
          {parse_tiling(tess_tiling), tess_lifted, tess_prisms, tess_side});
      with_output(tess_out, [&](std::ostream& out) { rmc::write_edge_list(t.graph, out); });
      if (!tess_json.empty()) {
        with_output(tess_json, [&](std::ostream& out) { rmc::write_tessellation_json(t, out); });
      }
      return 0;
    }
    if (*lg) {
      const rmc::LineGraphResult result = rmc::line_graph(rmc::load_graph(lg_graph));
      with_output(lg_out, [&](std::ostream& out) { rmc::write_edge_list(result.graph, out); });
      if (!lg_origin.empty()) {
        with_output(lg_origin, [&](std::ostream& out) { rmc::write_origin_csv(result, out); });
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
