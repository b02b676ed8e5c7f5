#include "hybridlint/dataflow.hpp"

#include <algorithm>

namespace hybridlint {

namespace {

void add_unique(std::vector<std::string>& v, const std::string& s) {
  if (std::find(v.begin(), v.end(), s) == v.end()) v.push_back(s);
}

void collect_uses(const Ast& ast, NodeId expr, std::vector<std::string>& out) {
  ast.walk(expr, [&](NodeId id) {
    const Node& n = ast[id];
    if (n.kind == NodeKind::Name && n.attr("ctx") != "store") add_unique(out, n.attr("id"));
  }, false);
}

// Store-context names are definitions; subscripts and attributes in target
// position read their object and index instead.
void collect_target(const Ast& ast, NodeId target, StmtEffects& fx) {
  const Node& n = ast[target];
  switch (n.kind) {
    case NodeKind::Name:
      add_unique(fx.defs, n.attr("id"));
      return;
    case NodeKind::Literal:
      for (NodeId c : n.children) collect_target(ast, c, fx);
      return;
    default:
      collect_uses(ast, target, fx.uses);
  }
}

}  // namespace

std::vector<std::string> names_used(const Ast& ast, NodeId expr) {
  std::vector<std::string> out;
  collect_uses(ast, expr, out);
  return out;
}

StmtEffects statement_effects(const Ast& ast, NodeId stmt) {
  const Node& n = ast[stmt];
  StmtEffects fx;
  switch (n.kind) {
    case NodeKind::Param:
      fx.defs.push_back(n.attr("name"));
      break;
    case NodeKind::Assign: {
      collect_uses(ast, n.children.back(), fx.uses);
      for (std::size_t i = 0; i + 1 < n.children.size(); ++i) collect_target(ast, n.children[i], fx);
      break;
    }
    case NodeKind::AugAssign: {
      NodeId target = n.children[0];
      if (ast[target].kind == NodeKind::Name) add_unique(fx.uses, ast[target].attr("id"));
      collect_uses(ast, n.children[1], fx.uses);
      collect_target(ast, target, fx);
      break;
    }
    case NodeKind::For:
      collect_uses(ast, n.children[1], fx.uses);
      collect_target(ast, n.children[0], fx);
      break;
    case NodeKind::If:
    case NodeKind::While:
    case NodeKind::Return:
    case NodeKind::Raise:
    case NodeKind::ExprStmt:
      for (NodeId c : n.children) collect_uses(ast, c, fx.uses);
      break;
    case NodeKind::Import: {
      std::string bindings = n.attr("bindings");
      std::size_t p = 0;
      while (p <= bindings.size() && !bindings.empty()) {
        std::size_t c = bindings.find(',', p);
        std::string b = bindings.substr(p, c == std::string::npos ? std::string::npos : c - p);
        if (!b.empty() && b != "*") add_unique(fx.defs, b);
        if (c == std::string::npos) break;
        p = c + 1;
      }
      break;
    }
    case NodeKind::FunctionDef:
    case NodeKind::ClassDef:
      fx.defs.push_back(n.attr("name"));
      break;
    default:
      break;
  }
  return fx;
}

const std::set<NodeId>& DefUseIndex::reaching_defs(NodeId use, const std::string& var) const {
  static const std::set<NodeId> none;
  auto it = reaching.find({use, var});
  return it == reaching.end() ? none : it->second;
}

DefUseIndex reaching_definitions(const Ast& ast, const Cfg& cfg) {
  // Enumerate every definition once, in statement order.
  std::vector<DefRef> defs;
  std::map<NodeId, StmtEffects> effects;
  std::map<std::string, std::vector<std::size_t>> defsOfVar;
  for (NodeId s : cfg.statements()) {
    StmtEffects fx = statement_effects(ast, s);
    for (const auto& v : fx.defs) {
      defsOfVar[v].push_back(defs.size());
      defs.emplace_back(s, v);
    }
    effects.emplace(s, std::move(fx));
  }

  const std::size_t nBlocks = cfg.blocks.size();
  const std::size_t nDefs = defs.size();
  using Bits = std::vector<char>;
  std::vector<Bits> gen(nBlocks, Bits(nDefs, 0)), kill(nBlocks, Bits(nDefs, 0));
  std::map<DefRef, std::size_t> defIndex;
  for (std::size_t i = 0; i < nDefs; ++i) defIndex[defs[i]] = i;

  for (const auto& blk : cfg.blocks) {
    auto b = static_cast<std::size_t>(blk.id);
    for (NodeId s : blk.stmts) {
      for (const auto& v : effects[s].defs) {
        for (std::size_t d : defsOfVar[v]) {
          gen[b][d] = 0;
          kill[b][d] = 1;
        }
        std::size_t self = defIndex[{s, v}];
        gen[b][self] = 1;
      }
    }
  }

  std::vector<std::vector<BlockId>> preds(nBlocks);
  for (const auto& e : cfg.edges) {
    auto& p = preds[static_cast<std::size_t>(e.to)];
    if (std::find(p.begin(), p.end(), e.from) == p.end()) p.push_back(e.from);
  }

  std::vector<Bits> in(nBlocks, Bits(nDefs, 0)), out(nBlocks, Bits(nDefs, 0));
  for (std::size_t b = 0; b < nBlocks; ++b) out[b] = gen[b];
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t b = 0; b < nBlocks; ++b) {
      Bits newIn(nDefs, 0);
      for (BlockId p : preds[b])
        for (std::size_t d = 0; d < nDefs; ++d) newIn[d] |= out[static_cast<std::size_t>(p)][d];
      Bits newOut(nDefs, 0);
      for (std::size_t d = 0; d < nDefs; ++d) newOut[d] = gen[b][d] || (newIn[d] && !kill[b][d]);
      if (newIn != in[b] || newOut != out[b]) {
        in[b] = std::move(newIn);
        out[b] = std::move(newOut);
        changed = true;
      }
    }
  }

  DefUseIndex index;
  for (const auto& [s, v] : defs) index.vars[v].defs.push_back(s);
  for (const auto& blk : cfg.blocks) {
    Bits live = in[static_cast<std::size_t>(blk.id)];
    for (NodeId s : blk.stmts) {
      std::set<DefRef>& before = index.reachingIn[s];
      for (std::size_t d = 0; d < nDefs; ++d)
        if (live[d]) before.insert(defs[d]);
      const StmtEffects& fx = effects[s];
      for (const auto& u : fx.uses) {
        auto& uses = index.vars[u].uses;
        if (std::find(uses.begin(), uses.end(), s) == uses.end()) uses.push_back(s);
        auto& r = index.reaching[{s, u}];
        for (std::size_t d : defsOfVar[u])
          if (live[d]) r.insert(defs[d].first);
      }
      for (const auto& v : fx.defs) {
        for (std::size_t d : defsOfVar[v]) live[d] = 0;
        live[defIndex[{s, v}]] = 1;
      }
    }
  }
  return index;
}

}  // namespace hybridlint
