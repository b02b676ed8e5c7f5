#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hybridlint/ast.hpp"
#include "hybridlint/cfg.hpp"

namespace hybridlint {

/// Variables a statement defines and reads. Only plain names are variables;
/// `a.b = v` and `a[i] = v` read `a` (and `i`) without defining anything.
struct StmtEffects {
  std::vector<std::string> defs;
  std::vector<std::string> uses;
};

StmtEffects statement_effects(const Ast& ast, NodeId stmt);

/// Names read anywhere under `expr`, first-occurrence order.
std::vector<std::string> names_used(const Ast& ast, NodeId expr);

struct VarDefUse {
  std::vector<NodeId> defs;
  std::vector<NodeId> uses;
};

/// (statement, variable) pair.
using DefRef = std::pair<NodeId, std::string>;

struct DefUseIndex {
  std::map<std::string, VarDefUse> vars;
  /// (use statement, variable) -> statements whose definition reaches it.
  std::map<DefRef, std::set<NodeId>> reaching;
  /// Definitions live just before each statement executes.
  std::map<NodeId, std::set<DefRef>> reachingIn;

  const std::set<NodeId>& reaching_defs(NodeId use, const std::string& var) const;
};

/// Forward reaching-definitions over the CFG, iterated to a fixed point.
DefUseIndex reaching_definitions(const Ast& ast, const Cfg& cfg);

}  // namespace hybridlint
