#include "ligraph/dot.hpp"

#include <sstream>

namespace ligraph {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void write_nodes(std::ostringstream& os, VertexSet vertices, VertexSet absorbing, VertexSet highlighted,
                 const std::vector<std::string>& labels) {
  vertices.for_each([&](std::size_t v) {
    os << "  " << quoted(labels[v]);
    std::string attrs;
    if (absorbing.contains(v)) attrs += "peripheries=2";
    if (highlighted.contains(v)) attrs += std::string(attrs.empty() ? "" : ", ") + "style=bold";
    if (!attrs.empty()) os << " [" << attrs << "]";
    os << ";\n";
  });
}

}  // namespace

std::string export_dot(const DynamicGraph& g, const DotOptions& options) {
  std::ostringstream os;
  os << "digraph " << quoted(options.name) << " {\n";
  write_nodes(os, g.vertices(), g.absorbing(), options.highlighted, g.labels());
  for (const auto& [j, k] : g.edges()) {
    const bool mutual = g.has_edge(k, j);
    if (mutual && k < j) continue;
    os << "  " << quoted(g.label(j)) << " -> " << quoted(g.label(k));
    if (mutual) os << " [dir=both]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_dot(const UndirectedGraph& ug, const DotOptions& options) {
  std::ostringstream os;
  os << "graph " << quoted(options.name) << " {\n";
  write_nodes(os, ug.vertices(), {}, options.highlighted, ug.labels());
  for (const auto& [j, k] : ug.edges()) {
    os << "  " << quoted(ug.label(j)) << " -- " << quoted(ug.label(k));
    if (ug.is_marriage_edge(j, k)) os << " [style=dotted]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ligraph
