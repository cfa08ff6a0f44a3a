#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <vector>

#include "rmc/graph.hpp"

namespace rmc {

enum class Tiling { triangular, square, mixed };

/// Which torus to build. Prism triangulation only applies to the lifted
/// triangular ring.
struct TorusSpec {
  Tiling tiling = Tiling::triangular;
  bool lifted = true;
  bool prism_triangulated = false;
  std::size_t square_side = 4;  // only used by Tiling::square
};

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// A generated graph plus plotting coordinates (one per node). The
/// coordinates carry no algorithmic meaning.
struct Tessellation {
  Graph graph;
  std::vector<Point3> positions;
};

/// One triangular prism: bottom[i] and top[i] are joined by a vertical edge.
struct Prism {
  std::array<NodeId, 3> bottom;
  std::array<NodeId, 3> top;
};

/// The hand-built 18-node, 36-edge hexagonal ring of triangles (node k here
/// is node k+1 of the reference drawing).
Tessellation triangular_ring_tiling();
Graph triangular_ring_2d();

/// Square frame on a side x side board of cells: one node per boundary cell,
/// edges between cells sharing a side. Throws for side < 3.
Tessellation square_frame_tiling(std::size_t side);
Graph square_frame_2d(std::size_t side);

/// Unit hexagon with a square on each side and an equilateral triangle in
/// each gap between neighbouring squares. Tile corners are glued by
/// coordinates.
Tessellation mixed_tiling();
Graph mixed_tiling_2d();

/// Two copies of `g2d` (node v and node v + N) plus the vertical edges
/// {v, v + N}. Weights and labels are not carried over.
Graph lift_to_3d(const Graph& g2d);
Tessellation lift_to_3d(const Tessellation& t2d, double layer_height = 1.0);

/// Prisms of a lifted 2D graph with `base_nodes` nodes per layer: every
/// triangle {a < b < c} of the bottom layer paired with its copy.
std::vector<Prism> layer_prisms(const Graph& lifted, std::size_t base_nodes);

/// Adds one diagonal per side face of each prism, from the bottom corner with
/// the smaller id to the top copy of the other corner. The three diagonals of
/// a prism then never form a cycle, so they cut it into three tetrahedra, and
/// prisms sharing a face agree on its diagonal (added once). Throws GraphError for a prism whose faces are
/// not in the graph.
Graph triangulate_prisms(const Graph& g, std::span<const Prism> prisms);

Tessellation build_torus(const TorusSpec& spec);

/// {"nodes": [{"id", "x", "y", "z"}...], "edges": [[u, v]...]}
void write_tessellation_json(const Tessellation& t, std::ostream& out);

}  // namespace rmc
