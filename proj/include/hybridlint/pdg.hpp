#pragma once

#include <string>
#include <vector>

#include "hybridlint/ast.hpp"
#include "hybridlint/cfg.hpp"
#include "hybridlint/dataflow.hpp"

namespace hybridlint {

enum class DepKind { Data, Control };

struct PdgEdge {
  NodeId from;
  NodeId to;
  DepKind kind;
  std::string variable;  // empty for control dependences

  auto operator<=>(const PdgEdge&) const = default;
};

struct Pdg {
  NodeId function = kNoNode;
  std::vector<NodeId> nodes;
  std::vector<PdgEdge> edges;  // sorted

  std::vector<PdgEdge> data_edges() const;
  std::vector<PdgEdge> control_edges() const;
};

/// Data edges mirror the reaching map exactly. Control edges run from each
/// If/While/For to the statements directly nested in its blocks.
Pdg build_pdg(const Ast& ast, const Cfg& cfg, const DefUseIndex& defuse);

}  // namespace hybridlint
