#include "hybridlint/graph_export.hpp"

#include <sstream>

#include "json.hpp"

namespace hybridlint {

using ojson = nlohmann::ordered_json;

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "dot") return GraphFormat::Dot;
  if (name == "json") return GraphFormat::Json;
  throw UnknownFormat(std::string(name));
}

namespace {

ojson span_json(const Span& s) {
  return ojson{{"startLine", s.startLine}, {"startCol", s.startCol}, {"endLine", s.endLine}, {"endCol", s.endCol}};
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

struct GraphNode {
  std::string id;
  std::string label;
  std::optional<Span> span;
};

struct GraphEdge {
  std::string from, to, kind, variable;
};

std::string render(const std::string& name, const std::vector<GraphNode>& nodes,
                   const std::vector<GraphEdge>& edges, GraphFormat format) {
  if (format == GraphFormat::Json) {
    ojson doc;
    doc["graph"] = name;
    doc["nodes"] = ojson::array();
    for (const auto& n : nodes)
      doc["nodes"].push_back(ojson{{"id", n.id}, {"label", n.label}, {"span", n.span ? span_json(*n.span) : ojson()}});
    doc["edges"] = ojson::array();
    for (const auto& e : edges) {
      ojson j{{"from", e.from}, {"to", e.to}, {"kind", e.kind}};
      if (!e.variable.empty()) j["variable"] = e.variable;
      doc["edges"].push_back(j);
    }
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "digraph \"" << dot_escape(name) << "\" {\n";
  for (const auto& n : nodes) out << "  \"" << n.id << "\" [label=\"" << dot_escape(n.label) << "\"];\n";
  for (const auto& e : edges) {
    std::string label = e.kind + (e.variable.empty() ? "" : "(" + e.variable + ")");
    out << "  \"" << e.from << "\" -> \"" << e.to << "\" [label=\"" << dot_escape(label) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string stmt_label(const Ast& ast, NodeId s) {
  const Node& n = ast[s];
  std::string label(to_string(n.kind));
  if (n.has("name")) label += " " + n.attr("name");
  return label + " @" + std::to_string(n.span.startLine);
}

}  // namespace

std::string export_graph(const Ast& ast, const Cfg& cfg, GraphFormat format) {
  std::vector<GraphNode> nodes;
  auto add_block = [&](const BasicBlock& b) {
    GraphNode gn{b.label, b.label, std::nullopt};
    for (NodeId s : b.stmts) gn.span = gn.span ? cover(*gn.span, ast[s].head) : ast[s].head;
    if (gn.span) gn.label += " L" + std::to_string(gn.span->startLine) + "-" + std::to_string(gn.span->endLine);
    if (b.dead) gn.label += " (dead)";
    nodes.push_back(std::move(gn));
  };
  add_block(cfg.blocks[static_cast<std::size_t>(cfg.entry)]);
  for (const auto& b : cfg.blocks)
    if (b.id != cfg.entry && b.id != cfg.exit) add_block(b);
  add_block(cfg.blocks[static_cast<std::size_t>(cfg.exit)]);

  std::vector<GraphEdge> edges;
  for (const auto& e : cfg.edges)
    edges.push_back(GraphEdge{cfg.blocks[static_cast<std::size_t>(e.from)].label,
                              cfg.blocks[static_cast<std::size_t>(e.to)].label, std::string(to_string(e.kind)), {}});
  return render("cfg:" + ast.qualified_name(cfg.function), nodes, edges, format);
}

std::string export_graph(const Ast& ast, const Pdg& pdg, GraphFormat format) {
  std::vector<GraphNode> nodes;
  for (NodeId s : pdg.nodes) nodes.push_back(GraphNode{"s" + std::to_string(s), stmt_label(ast, s), ast[s].head});
  std::vector<GraphEdge> edges;
  for (const auto& e : pdg.edges)
    edges.push_back(GraphEdge{"s" + std::to_string(e.from), "s" + std::to_string(e.to),
                              e.kind == DepKind::Data ? "DataDep" : "ControlDep", e.variable});
  return render("pdg:" + ast.qualified_name(pdg.function), nodes, edges, format);
}

}  // namespace hybridlint
