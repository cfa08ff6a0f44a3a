#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "../support/fixtures.hpp"
#include "rmc/graph_io.hpp"
#include "rmc/tessellation.hpp"

using namespace rmc;
using namespace rmc::testing;

namespace {

Graph graphml_from(const std::string& text) {
  std::istringstream in(text);
  return parse_graphml(in);
}

GraphmlError::Kind graphml_error_kind(const std::string& text) {
  try {
    graphml_from(text);
  } catch (const GraphmlError& e) {
    return e.kind();
  }
  FAIL("expected a GraphmlError");
  return GraphmlError::Kind::malformed_xml;
}

}  // namespace

TEST_SUITE("graph_io") {
  TEST_CASE("minimal GraphML") {
    const Graph g = graphml_from(R"(<?xml version="1.0"?>
<graphml xmlns="http://graphml.graphdrawing.org/xmlns">
  <key id="d0" for="node" attr.name="name" attr.type="string"/>
  <graph id="G" edgedefault="undirected">
    <node id="P53"><data key="d0">tumor protein</data></node>
    <node id="MDM2"/>
    <edge source="P53" target="MDM2"/>
  </graph>
</graphml>)");
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.label(0) == "P53");
    CHECK(g.label(1) == "MDM2");
  }

  TEST_CASE("self-loops and repeated edges collapse") {
    const Graph g = graphml_from(R"(<graphml><graph edgedefault="undirected">
      <node id="a"/><node id="b"/>
      <edge source="a" target="b"/><edge source="b" target="a"/><edge source="a" target="a"/>
    </graph></graphml>)");
    CHECK(g.edge_count() == 1);
  }

  TEST_CASE("error variants") {
    CHECK(graphml_error_kind(R"(<graphml><graph edgedefault="directed"><node id="a"/></graph></graphml>)") ==
          GraphmlError::Kind::directed_graph);
    CHECK(graphml_error_kind(R"(<graphml><graph edgedefault="undirected"><node id="a"/><node id="b"/>
      <edge source="a" target="b" directed="true"/></graph></graphml>)") ==
          GraphmlError::Kind::directed_graph);
    CHECK(graphml_error_kind("<graphml><graph><node id=\"a\"></graph>") == GraphmlError::Kind::malformed_xml);
    CHECK(graphml_error_kind("<notgraphml/>") == GraphmlError::Kind::malformed_xml);

    try {
      load_graphml("/nonexistent/combined.graphml");
      FAIL("expected missing-file error");
    } catch (const GraphmlError& e) {
      CHECK(e.kind() == GraphmlError::Kind::missing_file);
    }
  }

  TEST_CASE("GraphML round trip keeps counts and labels") {
    const Graph g = lift_to_3d(triangular_ring_2d());
    std::stringstream buffer;
    write_graphml(g, buffer);
    const Graph back = parse_graphml(buffer);
    CHECK(back.node_count() == g.node_count());
    CHECK(back.edge_count() == g.edge_count());
    CHECK(back.degrees() == g.degrees());

    std::stringstream again;
    write_graphml(back, again);
    CHECK(parse_graphml(again) == back);
  }

  TEST_CASE("edge-list text format") {
    std::istringstream in("# ring\nn=5\n0 1\n1 2 # trailing\n\n2 0\n");
    const Graph g = parse_edge_list(in);
    CHECK(g.node_count() == 5);
    CHECK(g.edge_count() == 3);

    std::stringstream out;
    write_edge_list(g, out);
    CHECK(out.str() == "n=5\n0 1\n0 2\n1 2\n");
    CHECK(parse_edge_list(out) == g);

    std::istringstream bad("0 1 2\n");
    CHECK_THROWS_AS(parse_edge_list(bad), GraphError);
    std::istringstream late_header("0 1\nn=4\n");
    CHECK_THROWS_AS(parse_edge_list(late_header), GraphError);
  }

  TEST_CASE("load_graph dispatches on extension") {
    const auto dir = std::filesystem::temp_directory_path() / "rmc_graph_io_test";
    std::filesystem::create_directories(dir);
    const Graph g = claw();
    write_graphml(g, dir / "claw.graphml");
    write_edge_list(g, dir / "claw.txt");
    CHECK(load_graph(dir / "claw.graphml").degrees() == g.degrees());
    CHECK(load_graph(dir / "claw.txt") == g);
    std::filesystem::remove_all(dir);
  }
}
