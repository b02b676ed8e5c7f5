#include "hybridlint/metrics.hpp"

#include <cctype>

namespace hybridlint {

std::set<int> code_lines(const TokenStream& tokens) {
  std::set<int> lines;
  for (const auto& t : tokens.tokens) {
    if (t.kind == TokenKind::Comment) continue;
    for (int l = t.span.startLine; l <= t.span.endLine; ++l) lines.insert(l);
  }
  return lines;
}

namespace {

const std::vector<NodeId>& body_of(const Node& n) {
  static const std::vector<NodeId> none;
  for (const Block& b : n.blocks)
    if (b.role == "body") return b.stmts;
  return none;
}

// Statements under `id`, nested defs counted once and not entered.
int count_statements(const Ast& ast, NodeId id) {
  int count = 0;
  for (const Block& b : ast[id].blocks)
    for (NodeId s : b.stmts) {
      const Node& n = ast[s];
      if (n.kind == NodeKind::Try) {
        count += count_statements(ast, s);  // Try itself is a container
        continue;
      }
      ++count;
      if (n.kind != NodeKind::FunctionDef && n.kind != NodeKind::ClassDef) count += count_statements(ast, s);
    }
  return count;
}

int bool_ops(const Ast& ast, NodeId expr) {
  int n = 0;
  ast.walk(expr, [&](NodeId id) {
    const Node& node = ast[id];
    if (node.kind == NodeKind::BinOp && (node.attr("op") == "and" || node.attr("op") == "or")) ++n;
  });
  return n;
}

bool is_class_like_name(const std::string& name) {
  if (name.empty() || !std::isupper(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name)
    if (std::islower(static_cast<unsigned char>(c))) return true;
  return false;
}

int count_lines(const std::set<int>& codeLines, const Span& span) {
  int n = 0;
  for (auto it = codeLines.lower_bound(span.startLine); it != codeLines.end() && *it <= span.endLine; ++it) ++n;
  return n;
}

bool is_self_name(const Ast& ast, NodeId expr) {
  const Node& n = ast[expr];
  return n.kind == NodeKind::Name && (n.attr("id") == "self" || n.attr("id") == "cls");
}

}  // namespace

std::set<std::string> import_bindings(const Ast& ast) {
  std::set<std::string> out;
  ast.walk(ast.root(), [&](NodeId id) {
    const Node& n = ast[id];
    if (n.kind != NodeKind::Import) return;
    std::string b = n.attr("bindings");
    std::size_t p = 0;
    while (true) {
      std::size_t c = b.find(',', p);
      std::string name = b.substr(p, c == std::string::npos ? std::string::npos : c - p);
      if (!name.empty()) out.insert(name);
      if (c == std::string::npos) break;
      p = c + 1;
    }
  });
  return out;
}

int cyclomatic_complexity(const Ast& ast, NodeId fn) {
  int decisions = 0;
  ast.walk(fn, [&](NodeId id) {
    if (id == fn) return;
    const Node& n = ast[id];
    switch (n.kind) {
      case NodeKind::If:
      case NodeKind::While:
        decisions += 1 + bool_ops(ast, n.children[0]);
        break;
      case NodeKind::For:
        ++decisions;
        break;
      case NodeKind::Try:
        for (const Block& b : n.blocks)
          if (b.role == "except") ++decisions;
        break;
      default:
        break;
    }
  }, false);
  return 1 + decisions;
}

int statement_count(const Ast& ast, NodeId entity) { return count_statements(ast, entity); }

AccessProfile access_profile(const Ast& ast, NodeId fn) {
  AccessProfile profile;
  std::set<std::string> modules = import_bindings(ast);
  ast.walk(fn, [&](NodeId id) {
    const Node& n = ast[id];
    if (n.kind != NodeKind::Attribute) return;
    const Node& base = ast[n.children[0]];
    if (base.kind != NodeKind::Name) return;
    const std::string& name = base.attr("id");
    if (name == "self" || name == "cls") {
      ++profile.own;
    } else if (!modules.count(name)) {
      ++profile.foreign[name];
    }
  }, false);
  return profile;
}

bool is_accessor(const Ast& ast, NodeId fn) {
  std::vector<NodeId> body = body_of(ast[fn]);
  // A leading docstring does not count.
  if (!body.empty() && ast[body[0]].kind == NodeKind::ExprStmt &&
      ast[ast[body[0]].children[0]].kind == NodeKind::Literal)
    body.erase(body.begin());
  if (body.size() != 1) return false;
  const Node& s = ast[body[0]];
  if (s.kind == NodeKind::Return && s.children.size() == 1) {
    const Node& v = ast[s.children[0]];
    return v.kind == NodeKind::Attribute && is_self_name(ast, v.children[0]);
  }
  if (s.kind == NodeKind::Assign && s.children.size() == 2) {
    const Node& t = ast[s.children[0]];
    const Node& v = ast[s.children[1]];
    return t.kind == NodeKind::Attribute && is_self_name(ast, t.children[0]) &&
           (v.kind == NodeKind::Name || v.kind == NodeKind::Literal);
  }
  return false;
}

MetricVector compute_metrics(const Ast& ast, const std::set<int>& codeLines, NodeId entity) {
  const Node& node = ast[entity];
  MetricVector m;
  m.loc = count_lines(codeLines, node.span);
  m.nos = count_statements(ast, entity);

  std::set<std::string> external;
  const std::string ownName = node.attr("name");
  ast.walk(entity, [&](NodeId id) {
    const Node& n = ast[id];
    if (n.kind == NodeKind::Name && n.attr("ctx") != "store" && is_class_like_name(n.attr("id")) &&
        n.attr("id") != ownName)
      external.insert(n.attr("id"));
  });
  m.cbo = static_cast<int>(external.size());

  if (node.kind == NodeKind::FunctionDef) {
    m.cc = cyclomatic_complexity(ast, entity);
    bool method = ast.enclosing_class(entity).has_value();
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      const Node& p = ast[node.children[i]];
      if (p.kind != NodeKind::Param) continue;
      if (method && i == 0 && (p.attr("name") == "self" || p.attr("name") == "cls")) continue;
      ++m.params;
    }
    AccessProfile prof = access_profile(ast, entity);
    for (const auto& [_, count] : prof.foreign) m.atfd += count;
    return m;
  }

  if (node.kind == NodeKind::ClassDef) {
    int accessors = 0;
    std::set<std::string> fields;
    for (NodeId s : body_of(node)) {
      const Node& n = ast[s];
      if (n.kind == NodeKind::FunctionDef) {
        ++m.nom;
        int cc = cyclomatic_complexity(ast, s);
        m.wmc += cc;
        if (is_accessor(ast, s)) ++accessors;
        AccessProfile prof = access_profile(ast, s);
        for (const auto& [_, count] : prof.foreign) m.atfd += count;
        ast.walk(s, [&](NodeId id) {
          const Node& a = ast[id];
          if (a.kind == NodeKind::Attribute && is_self_name(ast, a.children[0])) fields.insert(a.attr("attr"));
        }, false);
      } else if (n.kind == NodeKind::Assign) {
        for (std::size_t i = 0; i + 1 < n.children.size(); ++i)
          if (ast[n.children[i]].kind == NodeKind::Name) fields.insert(ast[n.children[i]].attr("id"));
      }
    }
    for (NodeId s : body_of(node))
      if (ast[s].kind == NodeKind::FunctionDef) fields.erase(ast[s].attr("name"));  // self.method is not a field
    m.cc = m.wmc;
    m.fieldCount = static_cast<int>(fields.size());
    if (m.nom > 0) m.accessorRatio = static_cast<double>(accessors) / m.nom;
  }
  return m;
}

}  // namespace hybridlint
