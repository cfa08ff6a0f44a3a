#include "rmc/tessellation.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <ostream>

namespace rmc {

namespace {

// Incrementally glues polygon corners that land on the same point.
class CornerGluer {
 public:
  NodeId corner(double x, double y) {
    const auto key = std::make_pair(std::lround(x * 1e6), std::lround(y * 1e6));
    auto [it, inserted] = ids_.try_emplace(key, static_cast<NodeId>(positions_.size()));
    if (inserted) positions_.push_back({x, y, 0.0});
    return it->second;
  }

  void polygon(std::span<const std::array<double, 2>> corners) {
    std::vector<NodeId> ids;
    for (const auto& c : corners) ids.push_back(corner(c[0], c[1]));
    for (std::size_t i = 0; i < ids.size(); ++i) {
      edges_.emplace_back(ids[i], ids[(i + 1) % ids.size()]);
    }
  }

  Tessellation finish() && {
    return {Graph::from_edge_list(edges_, positions_.size()), std::move(positions_)};
  }

 private:
  std::map<std::pair<long, long>, NodeId> ids_;
  std::vector<Point3> positions_;
  std::vector<std::pair<NodeId, NodeId>> edges_;
};

}  // namespace

Tessellation triangular_ring_tiling() {
  // Reference drawing, 1-based.
  static constexpr std::array<std::array<int, 2>, 18> kPositions = {{
      {1, 1}, {2, 0}, {1, -1}, {-1, -1}, {-2, 0}, {-1, 1}, {0, 2}, {2, 2}, {3, 1},
      {4, 0}, {3, -1}, {2, -2}, {0, -2}, {-2, -2}, {-3, -1}, {-4, 0}, {-3, 1}, {-2, 2},
  }};
  static constexpr std::array<std::pair<NodeId, NodeId>, 36> kEdges = {{
      {1, 2},   {1, 6},   {1, 7},   {1, 8},   {1, 9},   {2, 9},   {2, 10},  {2, 11},  {2, 3},
      {3, 11},  {3, 12},  {3, 13},  {3, 4},   {4, 13},  {4, 14},  {4, 15},  {4, 5},   {5, 15},
      {5, 16},  {5, 17},  {5, 6},   {6, 17},  {6, 18},  {6, 7},   {7, 8},   {7, 18},  {8, 9},
      {9, 10},  {10, 11}, {11, 12}, {12, 13}, {13, 14}, {14, 15}, {15, 16}, {16, 17}, {17, 18},
  }};

  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(kEdges.size());
  for (const auto& [a, b] : kEdges) edges.emplace_back(a - 1, b - 1);

  Tessellation t{Graph::from_edge_list(edges, kPositions.size()), {}};
  for (const auto& [x, y] : kPositions) t.positions.push_back({double(x), double(y), 0.0});
  return t;
}

Graph triangular_ring_2d() { return triangular_ring_tiling().graph; }

Tessellation square_frame_tiling(std::size_t side) {
  if (side < 3) {
    throw GraphError("a square frame needs side >= 3 to enclose a hole");
  }
  const auto last = side - 1;
  auto on_frame = [&](std::size_t r, std::size_t c) {
    return r == 0 || c == 0 || r == last || c == last;
  };

  std::map<std::pair<std::size_t, std::size_t>, NodeId> ids;
  Tessellation t;
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) {
      if (!on_frame(r, c)) continue;
      ids[{r, c}] = static_cast<NodeId>(t.positions.size());
      t.positions.push_back({double(c) + 0.5, double(last - r) + 0.5, 0.0});
    }
  }
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (const auto& [cell, id] : ids) {
    const auto [r, c] = cell;
    if (auto right = ids.find({r, c + 1}); right != ids.end()) edges.emplace_back(id, right->second);
    if (auto down = ids.find({r + 1, c}); down != ids.end()) edges.emplace_back(id, down->second);
  }
  t.graph = Graph::from_edge_list(edges, t.positions.size());
  return t;
}

Graph square_frame_2d(std::size_t side) { return square_frame_tiling(side).graph; }

Tessellation mixed_tiling() {
  using std::numbers::pi;
  std::array<std::array<double, 2>, 6> hex;
  std::array<std::array<double, 2>, 6> normal;  // outward unit normal of side k
  for (int k = 0; k < 6; ++k) {
    hex[k] = {std::cos(k * pi / 3), std::sin(k * pi / 3)};
    normal[k] = {std::cos(k * pi / 3 + pi / 6), std::sin(k * pi / 3 + pi / 6)};
  }

  CornerGluer glue;
  glue.polygon(hex);
  for (int k = 0; k < 6; ++k) {
    const auto& a = hex[k];
    const auto& b = hex[(k + 1) % 6];
    const auto& n = normal[k];
    const std::array<std::array<double, 2>, 4> square = {{
        a, b, {b[0] + n[0], b[1] + n[1]}, {a[0] + n[0], a[1] + n[1]}}};
    glue.polygon(square);
  }
  for (int k = 0; k < 6; ++k) {
    const auto& h = hex[k];
    const auto& n_prev = normal[(k + 5) % 6];
    const auto& n_next = normal[k];
    const std::array<std::array<double, 2>, 3> triangle = {{
        h, {h[0] + n_prev[0], h[1] + n_prev[1]}, {h[0] + n_next[0], h[1] + n_next[1]}}};
    glue.polygon(triangle);
  }
  return std::move(glue).finish();
}

Graph mixed_tiling_2d() { return mixed_tiling().graph; }

Graph lift_to_3d(const Graph& g2d) {
  const auto n = static_cast<NodeId>(g2d.node_count());
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(2 * g2d.edge_count() + g2d.node_count());
  for (const NodePair& e : g2d.edges()) {
    edges.emplace_back(e.u, e.v);
    edges.emplace_back(e.u + n, e.v + n);
  }
  for (NodeId v = 0; v < n; ++v) edges.emplace_back(v, v + n);
  return Graph::from_edge_list(edges, 2 * g2d.node_count());
}

Tessellation lift_to_3d(const Tessellation& t2d, double layer_height) {
  Tessellation out{lift_to_3d(t2d.graph), t2d.positions};
  for (Point3 p : t2d.positions) {
    p.z += layer_height;
    out.positions.push_back(p);
  }
  return out;
}

std::vector<Prism> layer_prisms(const Graph& lifted, std::size_t base_nodes) {
  if (lifted.node_count() != 2 * base_nodes) {
    throw GraphError("lifted graph must have exactly two layers of base_nodes nodes");
  }
  const auto n = static_cast<NodeId>(base_nodes);
  std::vector<Prism> prisms;
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b : lifted.neighbors(a)) {
      if (b <= a || b >= n) continue;
      for (NodeId c : lifted.neighbors(b)) {
        if (c <= b || c >= n || !lifted.has_edge(a, c)) continue;
        prisms.push_back({{a, b, c}, {a + n, b + n, c + n}});
      }
    }
  }
  return prisms;
}

Graph triangulate_prisms(const Graph& g, std::span<const Prism> prisms) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(g.edge_count() + 3 * prisms.size());
  for (const NodePair& e : g.edges()) edges.emplace_back(e.u, e.v);

  for (const Prism& p : prisms) {
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3;
      const bool faces_ok = g.has_edge(p.bottom[i], p.bottom[j]) && g.has_edge(p.top[i], p.top[j]) &&
                            g.has_edge(p.bottom[i], p.top[i]);
      if (!faces_ok) {
        throw GraphError("prism is not a pair of corresponding triangles in the graph");
      }
    }
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3;
      if (p.bottom[i] < p.bottom[j]) {
        edges.emplace_back(p.bottom[i], p.top[j]);
      } else {
        edges.emplace_back(p.bottom[j], p.top[i]);
      }
    }
  }
  return Graph::from_edge_list(edges, g.node_count());
}

Tessellation build_torus(const TorusSpec& spec) {
  if (spec.prism_triangulated && (spec.tiling != Tiling::triangular || !spec.lifted)) {
    throw GraphError("prism triangulation requires a lifted triangular tiling");
  }
  Tessellation base = spec.tiling == Tiling::triangular ? triangular_ring_tiling()
                      : spec.tiling == Tiling::square   ? square_frame_tiling(spec.square_side)
                                                        : mixed_tiling();
  if (!spec.lifted) return base;

  Tessellation lifted = lift_to_3d(base);
  if (spec.prism_triangulated) {
    const auto prisms = layer_prisms(lifted.graph, base.graph.node_count());
    lifted.graph = triangulate_prisms(lifted.graph, prisms);
  }
  return lifted;
}

void write_tessellation_json(const Tessellation& t, std::ostream& out) {
  nlohmann::json doc;
  doc["nodes"] = nlohmann::json::array();
  for (std::size_t v = 0; v < t.graph.node_count(); ++v) {
    const Point3 p = v < t.positions.size() ? t.positions[v] : Point3{};
    doc["nodes"].push_back({{"id", v}, {"x", p.x}, {"y", p.y}, {"z", p.z}});
  }
  doc["edges"] = nlohmann::json::array();
  for (const NodePair& e : t.graph.edges()) doc["edges"].push_back({e.u, e.v});
  out << doc.dump(2) << '\n';
}

}  // namespace rmc
