#include "rmc/graph_io.hpp"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace rmc {

namespace pt = boost::property_tree;

namespace {

using Kind = GraphmlError::Kind;

std::string attribute(const pt::ptree& node, const char* name) {
  return node.get<std::string>(std::string("<xmlattr>.") + name, "");
}

}  // namespace

Graph parse_graphml(std::istream& in) {
  pt::ptree doc;
  try {
    pt::read_xml(in, doc, pt::xml_parser::trim_whitespace);
  } catch (const pt::xml_parser_error& e) {
    throw GraphmlError(Kind::malformed_xml, std::string("malformed GraphML: ") + e.what());
  }

  const auto root = doc.get_child_optional("graphml");
  if (!root) {
    throw GraphmlError(Kind::malformed_xml, "missing <graphml> root element");
  }
  const auto graph = root->get_child_optional("graph");
  if (!graph) {
    throw GraphmlError(Kind::malformed_xml, "missing <graph> element");
  }
  const std::string edgedefault = attribute(*graph, "edgedefault");
  if (edgedefault == "directed") {
    throw GraphmlError(Kind::directed_graph, "directed GraphML graphs are not supported");
  }

  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::string> labels;
  auto intern = [&](const std::string& name) {
    auto [it, inserted] = ids.try_emplace(name, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(name);
    return it->second;
  };

  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (const auto& [tag, child] : *graph) {
    if (tag == "node") {
      const std::string id = attribute(child, "id");
      if (id.empty()) throw GraphmlError(Kind::malformed_xml, "<node> without an id");
      intern(id);
    } else if (tag == "edge") {
      if (attribute(child, "directed") == "true") {
        throw GraphmlError(Kind::directed_graph, "directed edge in GraphML input");
      }
      const std::string source = attribute(child, "source");
      const std::string target = attribute(child, "target");
      if (source.empty() || target.empty()) {
        throw GraphmlError(Kind::malformed_xml, "<edge> without source or target");
      }
      const NodeId a = intern(source);
      const NodeId b = intern(target);
      if (a != b) pairs.emplace_back(a, b);
    }
  }

  return Graph::from_edge_list(pairs, labels.size()).with_labels(std::move(labels));
}

Graph load_graphml(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw GraphmlError(Kind::missing_file, "cannot open GraphML file " + path.string());
  }
  return parse_graphml(in);
}

void write_graphml(const Graph& g, std::ostream& out) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
  for (std::size_t v = 0; v < g.node_count(); ++v) {
    out << "    <node id=\"" << pt::xml_parser::encode_char_entities(g.label(static_cast<NodeId>(v)))
        << "\"/>\n";
  }
  for (const NodePair& e : g.edges()) {
    out << "    <edge source=\"" << pt::xml_parser::encode_char_entities(g.label(e.u))
        << "\" target=\"" << pt::xml_parser::encode_char_entities(g.label(e.v)) << "\"/>\n";
  }
  out << "  </graph>\n</graphml>\n";
}

void write_graphml(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw GraphError("cannot write " + path.string());
  write_graphml(g, out);
}

Graph parse_edge_list(std::istream& in) {
  std::optional<std::size_t> n;
  std::vector<std::pair<NodeId, NodeId>> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;

    if (first.rfind("n=", 0) == 0) {
      std::size_t value = 0;
      const char* begin = first.data() + 2;
      const char* end = first.data() + first.size();
      auto [ptr, ec] = std::from_chars(begin, end, value);
      if (ec != std::errc() || ptr != end || n || !pairs.empty()) {
        throw GraphError("bad node-count header on line " + std::to_string(line_no));
      }
      n = value;
      continue;
    }

    NodeId a = 0;
    NodeId b = 0;
    std::istringstream pair_stream(line);
    std::string extra;
    if (!(pair_stream >> a >> b) || (pair_stream >> extra)) {
      throw GraphError("expected `u v` on line " + std::to_string(line_no));
    }
    pairs.emplace_back(a, b);
  }
  return Graph::from_edge_list(pairs, n);
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open edge list " + path.string());
  return parse_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << "n=" << g.node_count() << '\n';
  for (const NodePair& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_edge_list(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw GraphError("cannot write " + path.string());
  write_edge_list(g, out);
}

Graph load_graph(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".graphml" || ext == ".xml") return load_graphml(path);
  return read_edge_list(path);
}

}  // namespace rmc
