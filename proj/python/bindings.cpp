#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "rmc/alignment.hpp"
#include "rmc/curvature.hpp"
#include "rmc/experiments.hpp"
#include "rmc/graph_io.hpp"
#include "rmc/hungarian.hpp"
#include "rmc/line_graph.hpp"
#include "rmc/sampling.hpp"
#include "rmc/spectral.hpp"
#include "rmc/tessellation.hpp"
#include "rmc/version.hpp"

namespace py = pybind11;
using namespace rmc;

namespace {

using PairList = std::vector<std::pair<NodeId, NodeId>>;

PairList pairs_of(const Graph& g) {
  PairList out;
  out.reserve(g.edge_count());
  for (const NodePair& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

std::string report_text(const ExperimentReport& r, const std::string& format, bool timing) {
  std::ostringstream out;
  write_report(r, out, parse_report_format(format), timing);
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Curvature-based graph alignment (C++ core)";
  m.attr("__version__") = std::string(kVersion);

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<GraphmlError>(m, "GraphmlError", PyExc_ValueError);
  py::register_exception<ExperimentError>(m, "ExperimentError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](const PairList& edges, std::optional<std::size_t> n) {
             return Graph::from_edge_list(edges, n);
           }),
           py::arg("edges"), py::arg("n") = py::none())
      .def_static(
          "weighted",
          [](std::size_t n, const PairList& edges, const std::vector<double>& node_weights,
             const std::vector<double>& edge_weights) {
            return Graph::from_weighted_edges(n, edges, node_weights, edge_weights);
          },
          py::arg("n"), py::arg("edges"), py::arg("node_weights") = std::vector<double>{},
          py::arg("edge_weights") = std::vector<double>{})
      .def_property_readonly("node_count", &Graph::node_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("max_degree", &Graph::max_degree)
      .def_property_readonly("is_weighted", &Graph::is_weighted)
      .def("edges", &pairs_of)
      .def("degree", &Graph::degree)
      .def("degrees", &Graph::degrees)
      .def("neighbors",
           [](const Graph& g, NodeId v) {
             const auto span = g.neighbors(v);
             return std::vector<NodeId>(span.begin(), span.end());
           })
      .def("has_edge", &Graph::has_edge)
      .def("is_connected", &Graph::is_connected)
      .def("label", &Graph::label)
      .def("induced_subgraph",
           [](const Graph& g, const std::vector<NodeId>& keep) { return g.induced_subgraph(keep); })
      .def("__len__", &Graph::node_count)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph nodes=" + std::to_string(g.node_count()) + " edges=" + std::to_string(g.edge_count()) +
               ">";
      });

  m.def("load_graph", &load_graph, py::arg("path"), "GraphML (.graphml/.xml) or `n=` edge list");
  m.def("write_graphml", py::overload_cast<const Graph&, const std::filesystem::path&>(&write_graphml));

  // curvature
  m.def("edge_curvature", [](const Graph& g, NodeId u, NodeId v) {
    return g.is_weighted() ? edge_curvature_weighted(g, NodePair(u, v))
                           : double(edge_curvature_unweighted(g, NodePair(u, v)));
  });
  m.def("node_curvature", &node_curvature);
  m.def(
      "forman_curvature",
      [](const Graph& g) {
        const CurvatureMap c = forman_curvature(g);
        return py::make_tuple(c.edge, c.node);
      },
      "(edge curvatures in edges() order, node curvatures)");
  m.def("curvature_distribution", &curvature_distribution);

  // tessellation
  py::enum_<Tiling>(m, "Tiling")
      .value("triangular", Tiling::triangular)
      .value("square", Tiling::square)
      .value("mixed", Tiling::mixed);
  m.def(
      "build_torus",
      [](Tiling tiling, bool lifted, bool prism_triangulated, std::size_t square_side) {
        return build_torus({tiling, lifted, prism_triangulated, square_side}).graph;
      },
      py::arg("tiling") = Tiling::triangular, py::arg("lifted") = true,
      py::arg("prism_triangulated") = false, py::arg("square_side") = 4);

  // spectral
  m.def("laplacian", &laplacian);
  m.def("curvature_laplacian_residual",
        py::overload_cast<const Graph&, NodeId>(&curvature_laplacian_residual));
  m.def("count_curvature_laplacian_violations", &count_curvature_laplacian_violations);

  // line graph
  m.def("line_graph", [](const Graph& g) {
    const LineGraphResult r = line_graph(g);
    PairList origin;
    for (const NodePair& e : r.origin) origin.emplace_back(e.u, e.v);
    return py::make_tuple(r.graph, origin);
  });
  m.def("edge_pair_count", &edge_pair_count);

  // sampling
  py::class_<RngHandle>(m, "Rng")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def_property_readonly("seed", &RngHandle::seed)
      .def("below", &RngHandle::below)
      .def("unit", &RngHandle::unit);
  m.def("random_walk_sample", &random_walk_sample, py::arg("graph"), py::arg("size"), py::arg("rng"),
        py::arg("max_iter") = 100);
  m.def("delete_edges_randomly", &delete_edges_randomly, py::arg("graph"), py::arg("p"), py::arg("rng"));
  m.def("random_connected_graph", &random_connected_graph, py::arg("n"), py::arg("extra_edge_p"),
        py::arg("rng"));
  m.def("preferential_attachment_graph", &preferential_attachment_graph, py::arg("n"),
        py::arg("attach"), py::arg("rng"));

  // alignment
  py::enum_<SignatureMode>(m, "SignatureMode")
      .value("degree", SignatureMode::degree)
      .value("ricci", SignatureMode::ricci);

  py::class_<Assignment>(m, "Assignment")
      .def_readonly("mapping", &Assignment::mapping)
      .def_readonly("row_costs", &Assignment::row_costs)
      .def_readonly("total_cost", &Assignment::total_cost);

  m.def("degree_matrix", [](const Graph& g, std::size_t m) { return degree_matrix(g, m).rows; });
  m.def("ricci_matrix", [](const Graph& g, std::size_t m) { return ricci_matrix(g, m).rows; });
  m.def(
      "cost_matrix",
      [](const Graph& g1, const Graph& g2, SignatureMode mode) {
        const std::size_t width = common_max_degree(g1, g2);
        return cost_matrix(signature_matrix(g1, width, mode), signature_matrix(g2, width, mode));
      },
      py::arg("g1"), py::arg("g2"), py::arg("mode") = SignatureMode::ricci);
  m.def("hungarian", &hungarian, py::arg("cost"));
  m.def("align", &align, py::arg("g1"), py::arg("g2"), py::arg("mode") = SignatureMode::ricci);
  m.def(
      "score_alignment",
      [](const Assignment& a) {
        const AlignmentScore s = score_alignment(a);
        return py::make_tuple(s.count, s.percentage);
      },
      "(fixed points, percentage)");

  // experiments
  py::class_<ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("input_path", &ExperimentConfig::input_path)
      .def_readwrite("intermediate_sample_size", &ExperimentConfig::intermediate_sample_size)
      .def_readwrite("subgraph_size", &ExperimentConfig::subgraph_size)
      .def_readwrite("deletion_probability", &ExperimentConfig::deletion_probability)
      .def_readwrite("rounds", &ExperimentConfig::rounds)
      .def_readwrite("seed", &ExperimentConfig::seed)
      .def_readwrite("mode", &ExperimentConfig::mode)
      .def_readwrite("max_iter", &ExperimentConfig::max_iter);

  py::class_<RoundResult>(m, "RoundResult")
      .def_readonly("round", &RoundResult::round)
      .def_readonly("seed", &RoundResult::seed)
      .def_readonly("correct", &RoundResult::correct)
      .def_readonly("percentage", &RoundResult::percentage)
      .def_readonly("wall_seconds", &RoundResult::wall_seconds);

  py::class_<ExperimentReport>(m, "ExperimentReport")
      .def_readonly("rounds", &ExperimentReport::rounds)
      .def_readonly("mean_percentage", &ExperimentReport::mean_percentage)
      .def_readonly("line_graph_nodes", &ExperimentReport::line_graph_nodes)
      .def("to_string", &report_text, py::arg("format") = "json", py::arg("include_timing") = true);

  m.def("run_alignment_experiment", &run_alignment_experiment, py::arg("source"), py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
  m.def("run_ppi_experiment", &run_ppi_experiment, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
  m.def("run_torus_experiment", []() {
    const TorusReport t = run_torus_experiment();
    std::ostringstream out;
    write_torus_report(t, out);
    return py::module_::import("json").attr("loads")(out.str());
  });
}
