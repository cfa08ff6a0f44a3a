#pragma once

#include <filesystem>
#include <iosfwd>

#include "rmc/graph.hpp"

namespace rmc {

/// Failure while reading a GraphML file.
class GraphmlError : public std::runtime_error {
 public:
  enum class Kind { missing_file, malformed_xml, directed_graph };

  GraphmlError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Reads the undirected subset of GraphML: <node id> and <edge source target>.
/// Nodes are relabeled densely in document order and their string ids kept
/// as labels. Attributes (<data>, <key>) are ignored. Self-loops and repeated
/// edges are dropped since Graph is simple.
Graph load_graphml(const std::filesystem::path& path);
Graph parse_graphml(std::istream& in);
void write_graphml(const Graph& g, std::ostream& out);
void write_graphml(const Graph& g, const std::filesystem::path& path);

// Plain edge-list text: optional `n=<N>` header, one `u v` pair per line,
// `#` starts a comment.
Graph parse_edge_list(std::istream& in);
Graph read_edge_list(const std::filesystem::path& path);
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list(const Graph& g, const std::filesystem::path& path);

/// GraphML for *.graphml / *.xml paths, the edge-list format otherwise.
Graph load_graph(const std::filesystem::path& path);

}  // namespace rmc
