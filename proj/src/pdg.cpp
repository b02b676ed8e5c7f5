#include "hybridlint/pdg.hpp"

#include <algorithm>

namespace hybridlint {

std::vector<PdgEdge> Pdg::data_edges() const {
  std::vector<PdgEdge> out;
  std::copy_if(edges.begin(), edges.end(), std::back_inserter(out),
               [](const PdgEdge& e) { return e.kind == DepKind::Data; });
  return out;
}

std::vector<PdgEdge> Pdg::control_edges() const {
  std::vector<PdgEdge> out;
  std::copy_if(edges.begin(), edges.end(), std::back_inserter(out),
               [](const PdgEdge& e) { return e.kind == DepKind::Control; });
  return out;
}

namespace {

// Try carries no statement of its own, so its nested statements inherit the
// enclosing predicate directly.
void add_governed(const Ast& ast, NodeId pred, NodeId stmt, std::vector<PdgEdge>& edges) {
  if (ast[stmt].kind == NodeKind::Try) {
    for (const Block& b : ast[stmt].blocks)
      for (NodeId s : b.stmts) add_governed(ast, pred, s, edges);
    return;
  }
  edges.push_back(PdgEdge{pred, stmt, DepKind::Control, {}});
}

}  // namespace

Pdg build_pdg(const Ast& ast, const Cfg& cfg, const DefUseIndex& defuse) {
  Pdg pdg;
  pdg.function = cfg.function;
  pdg.nodes = cfg.statements();

  for (const auto& [use, defs] : defuse.reaching)
    for (NodeId d : defs) pdg.edges.push_back(PdgEdge{d, use.first, DepKind::Data, use.second});

  for (NodeId s : pdg.nodes) {
    const Node& n = ast[s];
    if (n.kind != NodeKind::If && n.kind != NodeKind::While && n.kind != NodeKind::For) continue;
    for (const Block& b : n.blocks)
      for (NodeId child : b.stmts) add_governed(ast, s, child, pdg.edges);
  }
  std::sort(pdg.edges.begin(), pdg.edges.end());
  pdg.edges.erase(std::unique(pdg.edges.begin(), pdg.edges.end()), pdg.edges.end());
  return pdg;
}

}  // namespace hybridlint
