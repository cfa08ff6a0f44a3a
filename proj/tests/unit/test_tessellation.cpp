#include <doctest.h>

#include <nlohmann/json.hpp>

#include <set>
#include <sstream>

#include "../support/fixtures.hpp"
#include "rmc/curvature.hpp"
#include "rmc/tessellation.hpp"

using namespace rmc;
using namespace rmc::testing;

namespace {

std::multiset<std::size_t> degree_multiset(const Graph& g) {
  const auto d = g.degrees();
  return {d.begin(), d.end()};
}

}  // namespace

TEST_SUITE("tessellation") {
  TEST_CASE("triangular ring matches the drawn edge list") {
    const Graph ring = triangular_ring_2d();
    CHECK(ring.node_count() == 18);
    CHECK(ring.edge_count() == 36);
    const Graph drawn = Graph::from_labeled_edges(ring_edges_one_based());
    CHECK(edges_of(ring) == edges_of(drawn));

    const auto degs = degree_multiset(ring);
    CHECK(degs.count(5) == 6);
    CHECK(degs.count(4) + degs.count(3) == 12);
    // Inner hexagon nodes 0..5 carry the degree-5 class.
    for (NodeId v = 0; v < 6; ++v) CHECK(ring.degree(v) == 5);
    CHECK(triangular_ring_tiling().positions.size() == 18);
  }

  TEST_CASE("square frame") {
    const Graph s3 = square_frame_2d(3);
    CHECK(s3.node_count() == 8);
    CHECK(s3.edge_count() == 8);
    const Graph s4 = square_frame_2d(4);
    CHECK(s4.node_count() == 12);
    CHECK(s4.edge_count() == 12);
    for (const Graph* g : {&s3, &s4}) {
      CHECK(g->is_connected());
      // Cycle rank |E| - |V| + 1 = 1: exactly one hole.
      CHECK(g->edge_count() - g->node_count() + 1 == 1);
      for (std::size_t d : g->degrees()) CHECK(d == 2);
    }
    CHECK_THROWS_AS(square_frame_2d(2), GraphError);
  }

  TEST_CASE("mixed tiling") {
    const Tessellation t = mixed_tiling();
    const Graph& g = t.graph;
    CHECK(g.node_count() == 18);
    CHECK(g.is_connected());
    CHECK(t.positions.size() == 18);
    const auto degs = degree_multiset(g);
    CHECK(std::set<std::size_t>(degs.begin(), degs.end()).size() >= 2);
    // Six hexagon corners sit at unit distance from the centre.
    std::size_t hex = 0;
    for (const Point3& p : t.positions) {
      if (std::abs(std::hypot(p.x, p.y) - 1.0) < 1e-9) ++hex;
    }
    CHECK(hex == 6);
    CHECK(g.edge_count() == 30);
  }

  TEST_CASE("lifting") {
    const Graph lifted = lift_to_3d(triangular_ring_2d());
    CHECK(lifted.node_count() == 36);
    CHECK(lifted.edge_count() == 90);
    CHECK(edges_of(lifted) == edges_of(make_graph(lifted_ring_edges())));

    const Graph c4 = lift_to_3d(k2());
    CHECK(c4.node_count() == 4);
    CHECK(c4.edge_count() == 4);
    for (std::size_t d : c4.degrees()) CHECK(d == 2);

    RngHandle rng(13);
    for (int trial = 0; trial < 50; ++trial) {
      const Graph g = random_connected_graph(2 + rng.below(20), 0.2, rng);
      const Graph l = lift_to_3d(g);
      const auto n = g.node_count();
      CHECK(l.node_count() == 2 * n);
      CHECK(l.edge_count() == 2 * g.edge_count() + n);
      CHECK(l.is_connected());
      for (std::size_t v = 0; v < n; ++v) {
        CHECK(l.degree(NodeId(v)) == g.degree(NodeId(v)) + 1);
        CHECK(l.degree(NodeId(v + n)) == g.degree(NodeId(v)) + 1);
      }
    }
    const Tessellation lt = lift_to_3d(triangular_ring_tiling(), 2.0);
    CHECK(lt.positions.size() == 36);
    CHECK(lt.positions[20].z == 2.0);
  }

  TEST_CASE("prism triangulation") {
    const Graph prism = lift_to_3d(k3());
    REQUIRE(prism.edge_count() == 9);
    const std::vector<Prism> one = {{{0, 1, 2}, {3, 4, 5}}};
    const Graph tri = triangulate_prisms(prism, one);
    CHECK(tri.edge_count() == 12);
    CHECK(tri.has_edge(0, 4));
    CHECK(tri.has_edge(1, 5));
    CHECK(tri.has_edge(0, 5));
    CHECK_FALSE(tri.has_edge(2, 3));
    CHECK(layer_prisms(prism, 3).size() == 1);

    // Two prisms sharing the face {1,2}/{4,5}.
    const Graph pair = make_graph({{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5},
                                   {1, 6}, {2, 6}, {4, 7}, {5, 7}, {6, 7}});
    const std::vector<Prism> two = {{{0, 1, 2}, {3, 4, 5}}, {{1, 2, 6}, {4, 5, 7}}};
    const Graph both = triangulate_prisms(pair, two);
    // Diagonals: 0-4, 1-5, 0-5 and 1-5 (shared), 1-7, 2-7.
    CHECK(both.edge_count() == pair.edge_count() + 5);

    CHECK(triangulate_prisms(pair, std::vector<Prism>{}) == pair);
    // Each prism is split into tetrahedra: some corner is joined to all three
    // corners of the opposite triangle.
    for (const Prism& p : two) {
      bool apex = false;
      for (NodeId b : p.bottom) {
        apex = apex || (both.has_edge(b, p.top[0]) && both.has_edge(b, p.top[1]) && both.has_edge(b, p.top[2]));
      }
      CHECK(apex);
    }
    const std::vector<Prism> broken = {{{0, 1, 6}, {3, 4, 7}}};
    CHECK_THROWS_AS(triangulate_prisms(pair, broken), GraphError);

    const Graph torus = lift_to_3d(triangular_ring_2d());
    const auto prisms = layer_prisms(torus, 18);
    CHECK(prisms.size() == 18);
    const Graph tri_torus = build_torus({Tiling::triangular, true, true}).graph;
    // Every ring edge borders a triangle, so each vertical face gets one diagonal.
    CHECK(tri_torus.edge_count() == 90 + 36);
  }

  TEST_CASE("torus curvature classes: the hole is the inner hexagon on both layers") {
    const Graph torus = build_torus({}).graph;
    const auto ric = node_curvatures_exact(torus);
    for (NodeId v = 0; v < 36; ++v) {
      const bool inner = (v % 18) < 6;
      CHECK((ric[std::size_t(v)] == -56) == inner);
    }
  }

  TEST_CASE("build_torus variants") {
    CHECK(build_torus({Tiling::square, false, false, 3}).graph.node_count() == 8);
    CHECK(build_torus({Tiling::square, true, false, 3}).graph.edge_count() == 24);
    CHECK(build_torus({Tiling::mixed, true}).graph.node_count() == 36);
    CHECK_THROWS(build_torus({Tiling::square, true, true, 4}));
  }

  TEST_CASE("coordinates JSON") {
    std::ostringstream out;
    write_tessellation_json(square_frame_tiling(3), out);
    const auto doc = nlohmann::json::parse(out.str());
    CHECK(doc["nodes"].size() == 8);
    CHECK(doc["edges"].size() == 8);
    CHECK(doc["nodes"][0].contains("x"));
  }
}
